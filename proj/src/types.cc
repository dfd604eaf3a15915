#include "funkdisc/types.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "funkdisc/errors.h"

namespace funkdisc {
namespace {

std::string describe(const Vec2& x) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << x.x1 << ", " << x.x2 << ")";
  return os.str();
}

}  // namespace

DiscPoint::DiscPoint(double x1, double x2)
    : DiscPoint(Vec2{x1, x2}, one_minus_norm_sq(Vec2{x1, x2}), true) {}

DiscPoint::DiscPoint(const Vec2& x, double defect, bool) : x_(x), defect_(defect) {
  if (!is_finite(x) || !std::isfinite(defect)) {
    throw DomainError("disc point has non-finite coordinates");
  }
  if (defect <= kBoundaryEpsilon) {
    throw DomainError("point " + describe(x) +
                      " is not inside the unit disc (|x|^2 >= 1 - 1e-9)");
  }
}

DiscPoint DiscPoint::with_defect(const Vec2& x, double defect) {
  const double computed = one_minus_norm_sq(x);
  // Rounding of the coordinates alone perturbs 1 - |x|^2 by a few ulps of 1.
  if (std::abs(computed - defect) > 1e-12) {
    throw DomainError("boundary defect inconsistent with coordinates " +
                      describe(x));
  }
  return DiscPoint(x, defect, true);
}

BoundaryPoint::BoundaryPoint(double y1, double y2) {
  const double r = std::hypot(y1, y2);
  if (!std::isfinite(r) || std::abs(r - 1.0) > 1e-6) {
    throw DomainError("boundary point " + describe({y1, y2}) +
                      " is not on the unit circle");
  }
  y_ = {y1 / r, y2 / r};
}

BoundaryPoint BoundaryPoint::at_angle(double theta) {
  return BoundaryPoint(std::cos(theta), std::sin(theta));
}

std::string_view to_string(ModelId id) {
  switch (id) {
    case ModelId::FF: return "ff";
    case ModelId::FP: return "fp";
    case ModelId::FU: return "fu";
    case ModelId::FB: return "fb";
    case ModelId::FUH1: return "fuh1";
    case ModelId::FUH2: return "fuh2";
    case ModelId::FUS1: return "fus1";
    case ModelId::FUS2: return "fus2";
    case ModelId::AMBIENT: return "ambient";
    case ModelId::HD: return "hd";
  }
  return "?";
}

std::optional<ModelId> parse_model_id(std::string_view name) {
  for (ModelId id : {ModelId::FF, ModelId::FP, ModelId::FU, ModelId::FB,
                     ModelId::FUH1, ModelId::FUH2, ModelId::FUS1,
                     ModelId::FUS2, ModelId::AMBIENT, ModelId::HD}) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

int dimension(ModelId id) {
  switch (id) {
    case ModelId::FUH1:
    case ModelId::FUH2:
    case ModelId::FUS1:
    case ModelId::FUS2:
    case ModelId::AMBIENT:
      return 3;
    default:
      return 2;
  }
}

ModelPoint ModelPoint::make(ModelId model, const Coords& c) {
  const int dim = dimension(model);
  for (int i = 0; i < dim; ++i) {
    if (!std::isfinite(c[i])) {
      throw DomainError(std::string(to_string(model)) +
                        ": non-finite coordinate");
    }
  }
  ModelPoint p{model, c};
  if (dim == 2) p.coords[2] = 0.0;

  auto fail = [&](const std::string& what) {
    std::ostringstream os;
    os.precision(17);
    os << to_string(model) << ": point (" << c[0] << ", " << c[1];
    if (dim == 3) os << ", " << c[2];
    os << ") " << what;
    throw DomainError(os.str());
  };

  switch (model) {
    case ModelId::FF:
    case ModelId::FP:
    case ModelId::HD:
      if (one_minus_norm_sq({c[0], c[1]}) <= kBoundaryEpsilon) {
        fail("is not inside the unit disc");
      }
      break;
    case ModelId::FU:
      if (!(c[1] > 0.0)) fail("is not in the upper half plane");
      break;
    case ModelId::FB:
      if (!(std::abs(c[1]) < std::numbers::pi / 2)) fail("is not in the band");
      break;
    case ModelId::FUH1:
    case ModelId::FUH2: {
      const double expected = std::sqrt(1.0 + c[0] * c[0] + c[1] * c[1]);
      if (std::abs(c[2] - expected) > kChartTolerance * expected) {
        fail("is not on the upper hyperboloid sheet");
      }
      break;
    }
    case ModelId::FUS1:
    case ModelId::FUS2: {
      const double r2 = c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
      if (std::abs(r2 - 1.0) > kChartTolerance || !(c[2] > 0.0)) {
        fail("is not on the upper hemisphere");
      }
      break;
    }
    case ModelId::AMBIENT:
      if (!(c[2] > 0.0)) fail("is not in the upper half space");
      break;
  }
  return p;
}

ModelPoint ModelPoint::from_disc(ModelId model, const DiscPoint& x) {
  if (model != ModelId::FF && model != ModelId::FP && model != ModelId::HD) {
    throw DomainError("model " + std::string(to_string(model)) +
                      " is not a disc model");
  }
  return ModelPoint{model, Coords{x.x1(), x.x2(), 0.0}};
}

std::array<double, 2> SymmetricTensor2::eigenvalues() const {
  const double mean = 0.5 * (g11 + g22);
  const double half_diff = 0.5 * (g11 - g22);
  const double radius = std::hypot(half_diff, g12);
  const double hi = mean + radius;
  // Product form avoids cancellation in the small eigenvalue.
  const double lo = hi != 0.0 ? det() / hi : mean - radius;
  return {lo, hi};
}

bool SymmetricTensor2::is_positive_definite() const {
  return g11 > 0.0 && det() > 0.0;
}

}  // namespace funkdisc
