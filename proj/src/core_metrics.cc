#include "funkdisc/core_metrics.h"

#include <cmath>
#include <numbers>
#include <string>

#include "funkdisc/errors.h"
#include "funkdisc/finite_difference.h"

namespace funkdisc {
namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kTangencyTolerance = 1e-9;

void require_finite(const Vec2& v) {
  if (!is_finite(v)) throw DomainError("vector has non-finite components");
}

void require_finite(const Vec3& v) {
  if (!is_finite(v)) throw DomainError("vector has non-finite components");
}

// Funk metric from the raw ingredients; shared by eval_funk and eval_model.
RandersValue funk_parts(const Vec2& x, double defect, const Vec2& v) {
  const double xv = dot(x, v);
  const double alpha = std::sqrt(defect * norm_sq(v) + xv * xv) / defect;
  const double beta = xv / defect;
  return {alpha, beta, alpha + beta};
}

RandersValue poincare_parts(const Vec2& x, double defect, const Vec2& v) {
  const double alpha = 2.0 * norm(v) / defect;
  // 1 - |x|^4 = (1 - |x|^2)(1 + |x|^2)
  const double beta = 4.0 * dot(x, v) / (defect * (1.0 + norm_sq(x)));
  return {alpha, beta, alpha + beta};
}

RandersValue upper_half_parts(const Vec2& x, const Vec2& v) {
  const double alpha = norm(v) / x.x2;
  const double beta =
      dot(upper_half_plane_w(x), v) / (x.x2 * (4.0 + norm_sq(x)));
  return {alpha, beta, alpha + beta};
}

// (e^{2x1} - 4)/(e^{2x1} + 4) = tanh(x1 - ln 2), which does not overflow.
RandersValue band_parts(const Vec2& x, const Vec2& v) {
  const double c = std::cos(x.x2);
  const double alpha = norm(v) / c;
  const double beta = v.x1 * std::tanh(x.x1 - kLn2) + v.x2 * std::tan(x.x2);
  return {alpha, beta, alpha + beta};
}

void require_tangent(const ModelPoint& p, const Vec3& v) {
  const Vec3 x = p.spatial();
  Vec3 normal;
  if (p.model == ModelId::FUH1 || p.model == ModelId::FUH2) {
    normal = {-x.x1, -x.x2, x.x3};
  } else {
    normal = x;
  }
  const double n = norm(normal);
  const double off = std::abs(dot(normal, v)) / n;
  if (off > kTangencyTolerance * std::max(1.0, norm(v))) {
    throw TangencyError(std::string(to_string(p.model)) +
                        ": vector is not tangent to the surface");
  }
}

RandersValue eval_planar(const ModelPoint& p, const Vec2& v) {
  const Vec2 x = p.planar();
  switch (p.model) {
    case ModelId::FF:
      return funk_parts(x, one_minus_norm_sq(x), v);
    case ModelId::HD:
      return eval_hilbert(DiscPoint(x), TangentVector::from(v));
    case ModelId::FP:
      return poincare_parts(x, one_minus_norm_sq(x), v);
    case ModelId::FU:
      return upper_half_parts(x, v);
    case ModelId::FB:
      return band_parts(x, v);
    default:
      throw UnsupportedModel(std::string(to_string(p.model)) +
                             " is not a planar model");
  }
}

bool is_planar(ModelId id) { return dimension(id) == 2; }

}  // namespace

Vec2 upper_half_plane_w(const Vec2& x) {
  return {2.0 * x.x1 * x.x2, x.x2 * x.x2 - x.x1 * x.x1 - 4.0};
}

RandersValue eval_funk(const DiscPoint& x, const TangentVector& v) {
  require_finite(v.vec());
  return funk_parts(x.vec(), x.defect(), v.vec());
}

RandersValue eval_hilbert(const DiscPoint& x, const TangentVector& v) {
  require_finite(v.vec());
  const double forward = funk_parts(x.vec(), x.defect(), v.vec()).total;
  const double backward = funk_parts(x.vec(), x.defect(), -v.vec()).total;
  const double total = 0.5 * (forward + backward);
  return {total, 0.0, total};
}

RandersValue eval_lorentz_randers(const Vec3& x, const Vec3& v) {
  require_finite(v);
  if (!(x.x3 > 0.0)) throw DomainError("F_L: point is not in x3 > 0");
  const double space = v.x1 * v.x1 + v.x2 * v.x2;
  double radicand = space - v.x3 * v.x3;
  if (radicand < 0.0) {
    if (-radicand > 1e-12 * (space + v.x3 * v.x3)) {
      throw DomainError("F_L: timelike vector, alpha_L is undefined");
    }
    radicand = 0.0;
  }
  const double alpha = std::sqrt(radicand);
  const double beta = v.x3 / x.x3;
  return {alpha, beta, alpha + beta};
}

RandersValue eval_halfspace_randers(const Vec3& x, const Vec3& v) {
  require_finite(v);
  if (!(x.x3 > 0.0)) throw DomainError("F_+: point is not in x3 > 0");
  const double alpha = norm(v) / x.x3;
  const double beta = -v.x3 / x.x3;
  return {alpha, beta, alpha + beta};
}

RandersValue eval_model(const ModelPoint& p, const Coords& v) {
  // Re-validate: ModelPoint is an aggregate and may have been built by hand.
  const ModelPoint checked = ModelPoint::make(p.model, p.coords);
  if (is_planar(p.model)) {
    const Vec2 w{v[0], v[1]};
    require_finite(w);
    return eval_planar(checked, w);
  }
  const Vec3 w{v[0], v[1], v[2]};
  require_finite(w);
  switch (p.model) {
    case ModelId::FUH1:
    case ModelId::FUH2:
      require_tangent(checked, w);
      return eval_lorentz_randers(checked.spatial(), w);
    case ModelId::FUS1:
    case ModelId::FUS2:
      require_tangent(checked, w);
      return eval_halfspace_randers(checked.spatial(), w);
    default:
      return eval_halfspace_randers(checked.spatial(), w);
  }
}

RandersData randers_data(const ModelPoint& p) {
  const ModelPoint checked = ModelPoint::make(p.model, p.coords);
  const Vec2 x = checked.planar();
  switch (p.model) {
    case ModelId::FF:
    case ModelId::HD: {
      const double d = one_minus_norm_sq(x);
      const double d2 = d * d;
      SymmetricTensor2 a{(d + x.x1 * x.x1) / d2, x.x1 * x.x2 / d2,
                         (d + x.x2 * x.x2) / d2};
      const Vec2 b = p.model == ModelId::FF ? x / d : Vec2{};
      return {a, b};
    }
    case ModelId::FP: {
      const double d = one_minus_norm_sq(x);
      const double s = 4.0 / (d * d);
      return {{s, 0.0, s}, 4.0 * x / (d * (1.0 + norm_sq(x)))};
    }
    case ModelId::FU: {
      const double s = 1.0 / (x.x2 * x.x2);
      return {{s, 0.0, s},
              upper_half_plane_w(x) / (x.x2 * (4.0 + norm_sq(x)))};
    }
    case ModelId::FB: {
      const double c = std::cos(x.x2);
      const double s = 1.0 / (c * c);
      return {{s, 0.0, s}, {std::tanh(x.x1 - kLn2), std::tan(x.x2)}};
    }
    default:
      throw UnsupportedModel(std::string(to_string(p.model)) +
                             " has no planar Randers data");
  }
}

double potential(const ModelPoint& p) {
  const ModelPoint checked = ModelPoint::make(p.model, p.coords);
  const Vec2 x = checked.planar();
  switch (p.model) {
    case ModelId::FF:
      return -0.5 * std::log(one_minus_norm_sq(x));
    case ModelId::FP:
      return std::log((1.0 + norm_sq(x)) / one_minus_norm_sq(x));
    case ModelId::FU:
      return std::log((4.0 + norm_sq(x)) / x.x2);
    case ModelId::FB:
      return x.x1 + std::log1p(4.0 * std::exp(-2.0 * x.x1)) -
             std::log(std::cos(x.x2));
    default:
      throw UnsupportedModel("no potential is known for model " +
                             std::string(to_string(p.model)));
  }
}

double one_form_norm(const ModelPoint& p) {
  const ModelPoint checked = ModelPoint::make(p.model, p.coords);
  const Vec2 x = checked.planar();
  switch (p.model) {
    case ModelId::FF:
      return norm(x);
    case ModelId::HD:
      return 0.0;
    case ModelId::FP:
      return 2.0 * norm(x) / (1.0 + norm_sq(x));
    case ModelId::FU:
      return norm(upper_half_plane_w(x)) / (4.0 + norm_sq(x));
    case ModelId::FB: {
      const double e = std::exp(2.0 * x.x1);
      const double c = std::cos(x.x2);
      const double num = (e + 4.0) * (e + 4.0) - 16.0 * e * c * c;
      return std::sqrt(num) / (e + 4.0);
    }
    default:
      throw UnsupportedModel("one_form_norm: model " +
                             std::string(to_string(p.model)) +
                             " is not a planar Randers model");
  }
}

double one_form_norm_from_tensor(const ModelPoint& p) {
  const RandersData data = randers_data(p);
  const SymmetricTensor2& a = data.a;
  const double det = a.det();
  const SymmetricTensor2 inv{a.g22 / det, -a.g12 / det, a.g11 / det};
  return std::sqrt(dot(data.b, inv.apply(data.b)));
}

FundamentalTensor fundamental_tensor(const ModelPoint& p, const Vec2& v) {
  require_finite(v);
  if (!is_planar(p.model)) {
    throw UnsupportedModel("fundamental_tensor: model " +
                           std::string(to_string(p.model)) +
                           " is not planar");
  }
  const double scale = norm(v);
  if (scale == 0.0) {
    throw ZeroVectorError("fundamental tensor is undefined at v = 0");
  }
  const ModelPoint checked = ModelPoint::make(p.model, p.coords);
  auto half_f_sq = [&](const Vec2& w) {
    const double f = eval_planar(checked, w).total;
    return 0.5 * f * f;
  };
  return fd::hessian(half_f_sq, v, fd::kHessianStep * scale);
}

}  // namespace funkdisc
