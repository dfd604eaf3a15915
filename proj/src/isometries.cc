#include "funkdisc/isometries.h"

#include <cmath>
#include <numbers>
#include <string>

#include "funkdisc/core_metrics.h"
#include "funkdisc/errors.h"
#include "funkdisc/finite_difference.h"

namespace funkdisc {
namespace {

constexpr double kLn2 = std::numbers::ln2;

void require_model(const ModelPoint& p, ModelId expected, IsometryId id) {
  if (p.model != expected) {
    throw DomainError(std::string(to_string(id)) + " expects a point of " +
                      std::string(to_string(expected)) + ", got " +
                      std::string(to_string(p.model)));
  }
}

Differential planar(double a11, double a12, double a21, double a22) {
  Differential d;
  d.rows = 2;
  d.m[0] = {a11, a12};
  d.m[1] = {a21, a22};
  return d;
}

Differential spatial(const std::array<std::array<double, 2>, 3>& rows) {
  Differential d;
  d.rows = 3;
  d.m = rows;
  return d;
}

}  // namespace

IsometrySignature signature(IsometryId id) {
  switch (id) {
    case IsometryId::ETA: return {ModelId::FF, ModelId::FUH1};
    case IsometryId::PI: return {ModelId::FP, ModelId::FUH2};
    case IsometryId::PSI: return {ModelId::FF, ModelId::FUS1};
    case IsometryId::SIGMA: return {ModelId::FP, ModelId::FUS2};
    case IsometryId::XI: return {ModelId::FF, ModelId::FB};
    case IsometryId::PHI: return {ModelId::FB, ModelId::FU};
    case IsometryId::F_MAP: return {ModelId::FF, ModelId::FP};
    case IsometryId::G_MAP: return {ModelId::FF, ModelId::FU};
  }
  return {ModelId::FF, ModelId::FF};
}

std::string_view to_string(IsometryId id) {
  switch (id) {
    case IsometryId::ETA: return "eta";
    case IsometryId::PI: return "pi";
    case IsometryId::PSI: return "psi";
    case IsometryId::SIGMA: return "sigma";
    case IsometryId::XI: return "xi";
    case IsometryId::PHI: return "phi";
    case IsometryId::F_MAP: return "f";
    case IsometryId::G_MAP: return "g";
  }
  return "?";
}

std::optional<IsometryId> parse_isometry_id(std::string_view name) {
  for (IsometryId id : kAllIsometries) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

Coords Differential::apply(const Vec2& v) const {
  Coords out{};
  for (int r = 0; r < rows; ++r) {
    out[r] = m[r][0] * v.x1 + m[r][1] * v.x2;
  }
  return out;
}

ModelPoint apply(IsometryId id, const ModelPoint& x) {
  const IsometrySignature sig = signature(id);
  require_model(x, sig.source, id);
  const ModelPoint src = ModelPoint::make(x.model, x.coords);
  const Vec2 p = src.planar();
  switch (id) {
    case IsometryId::ETA: {
      const double s = std::sqrt(one_minus_norm_sq(p));
      return ModelPoint::make(sig.target, Coords{p.x1 / s, p.x2 / s, 1.0 / s});
    }
    case IsometryId::PI: {
      const double d = one_minus_norm_sq(p);
      return ModelPoint::make(
          sig.target,
          Coords{2.0 * p.x1 / d, 2.0 * p.x2 / d, (1.0 + norm_sq(p)) / d});
    }
    case IsometryId::PSI:
      return ModelPoint::make(
          sig.target, Coords{p.x1, p.x2, std::sqrt(one_minus_norm_sq(p))});
    case IsometryId::SIGMA: {
      const double q = 1.0 + norm_sq(p);
      return ModelPoint::make(sig.target,
                              Coords{2.0 * p.x1 / q, 2.0 * p.x2 / q,
                                     one_minus_norm_sq(p) / q});
    }
    case IsometryId::XI: {
      // log(2 sqrt((1-x1)/(1+x1))), and the quadrant-safe arctangent.
      const double x1 = kLn2 + 0.5 * (std::log1p(-p.x1) - std::log1p(p.x1));
      const double x2 = -std::atan2(p.x2, std::sqrt(one_minus_norm_sq(p)));
      return ModelPoint::make(sig.target, Vec2{x1, x2});
    }
    case IsometryId::PHI: {
      const double r = std::exp(p.x1);
      return ModelPoint::make(
          sig.target, Vec2{-r * std::sin(p.x2), r * std::cos(p.x2)});
    }
    case IsometryId::F_MAP: {
      const double s = std::sqrt(one_minus_norm_sq(p));
      return ModelPoint::make(sig.target, p / (1.0 + s));
    }
    case IsometryId::G_MAP: {
      const double s = std::sqrt(one_minus_norm_sq(p));
      const double q = 1.0 + p.x1;
      return ModelPoint::make(sig.target, Vec2{2.0 * p.x2 / q, 2.0 * s / q});
    }
  }
  throw UnsupportedModel("unknown isometry");
}

ModelPoint apply_inverse(IsometryId id, const ModelPoint& y) {
  const IsometrySignature sig = signature(id);
  require_model(y, sig.target, id);
  const ModelPoint tgt = ModelPoint::make(y.model, y.coords);
  const Coords& c = tgt.coords;
  switch (id) {
    case IsometryId::ETA:
      return ModelPoint::make(sig.source, Vec2{c[0] / c[2], c[1] / c[2]});
    case IsometryId::PI:
    case IsometryId::SIGMA:
      return ModelPoint::make(sig.source,
                              Vec2{c[0] / (1.0 + c[2]), c[1] / (1.0 + c[2])});
    case IsometryId::PSI:
      return ModelPoint::make(sig.source, Vec2{c[0], c[1]});
    case IsometryId::XI: {
      // (4 - e^{2X1})/(4 + e^{2X1}) = -tanh(X1 - ln 2) and
      // 4 e^{X1}/(4 + e^{2X1}) = 1/cosh(X1 - ln 2).
      const double u = c[0] - kLn2;
      return ModelPoint::make(sig.source,
                              Vec2{-std::tanh(u), -std::sin(c[1]) / std::cosh(u)});
    }
    case IsometryId::PHI:
      return ModelPoint::make(
          sig.source,
          Vec2{std::log(std::hypot(c[0], c[1])), -std::atan2(c[0], c[1])});
    case IsometryId::F_MAP: {
      const Vec2 p = tgt.planar();
      return ModelPoint::make(sig.source, 2.0 * p / (1.0 + norm_sq(p)));
    }
    case IsometryId::G_MAP: {
      const Vec2 p = tgt.planar();
      const double r2 = norm_sq(p);
      return ModelPoint::make(
          sig.source, Vec2{(4.0 - r2) / (4.0 + r2), 4.0 * p.x1 / (4.0 + r2)});
    }
  }
  throw UnsupportedModel("unknown isometry");
}

Differential differential(IsometryId id, const ModelPoint& x) {
  const IsometrySignature sig = signature(id);
  require_model(x, sig.source, id);
  const ModelPoint src = ModelPoint::make(x.model, x.coords);
  const Vec2 p = src.planar();
  const double x1 = p.x1;
  const double x2 = p.x2;
  switch (id) {
    case IsometryId::ETA: {
      const double d = one_minus_norm_sq(p);
      const double k = 1.0 / (d * std::sqrt(d));
      return spatial({{{k * (1.0 - x2 * x2), k * x1 * x2},
                       {k * x1 * x2, k * (1.0 - x1 * x1)},
                       {k * x1, k * x2}}});
    }
    case IsometryId::PI: {
      const double d = one_minus_norm_sq(p);
      const double k = 2.0 / (d * d);
      return spatial({{{k * (d + 2.0 * x1 * x1), k * 2.0 * x1 * x2},
                       {k * 2.0 * x1 * x2, k * (d + 2.0 * x2 * x2)},
                       {k * 2.0 * x1, k * 2.0 * x2}}});
    }
    case IsometryId::PSI: {
      const double s = std::sqrt(one_minus_norm_sq(p));
      return spatial({{{1.0, 0.0}, {0.0, 1.0}, {-x1 / s, -x2 / s}}});
    }
    case IsometryId::SIGMA: {
      const double q = 1.0 + norm_sq(p);
      const double k = 2.0 / (q * q);
      return spatial({{{k * (q - 2.0 * x1 * x1), -k * 2.0 * x1 * x2},
                       {-k * 2.0 * x1 * x2, k * (q - 2.0 * x2 * x2)},
                       {-k * 2.0 * x1, -k * 2.0 * x2}}});
    }
    case IsometryId::XI: {
      const double s = std::sqrt(one_minus_norm_sq(p));
      const double e = (1.0 - x1) * (1.0 + x1);
      return planar(-1.0 / e, 0.0, -x1 * x2 / (e * s), -1.0 / s);
    }
    case IsometryId::PHI: {
      const double r = std::exp(x1);
      const double sn = std::sin(x2);
      const double cs = std::cos(x2);
      return planar(-r * sn, -r * cs, r * cs, -r * sn);
    }
    case IsometryId::F_MAP: {
      const double s = std::sqrt(one_minus_norm_sq(p));
      const double a = 1.0 / (1.0 + s);
      const double b = 1.0 / (s * (1.0 + s) * (1.0 + s));
      return planar(a + b * x1 * x1, b * x1 * x2, b * x1 * x2, a + b * x2 * x2);
    }
    case IsometryId::G_MAP: {
      const double s = std::sqrt(one_minus_norm_sq(p));
      const double q = 1.0 + x1;
      return planar(-2.0 * x2 / (q * q), 2.0 / q,
                    -2.0 * x1 / (s * q) - 2.0 * s / (q * q),
                    -2.0 * x2 / (s * q));
    }
  }
  throw UnsupportedModel("unknown isometry");
}

Differential differential_fd(IsometryId id, const ModelPoint& x) {
  const IsometrySignature sig = signature(id);
  require_model(x, sig.source, id);
  const double h = fd::kStep;
  Differential d;
  d.rows = dimension(sig.target);
  for (int col = 0; col < 2; ++col) {
    ModelPoint plus = x;
    ModelPoint minus = x;
    plus.coords[col] += h;
    minus.coords[col] -= h;
    const Coords fp = apply(id, plus).coords;
    const Coords fm = apply(id, minus).coords;
    for (int r = 0; r < d.rows; ++r) {
      d.m[r][col] = (fp[r] - fm[r]) / (2.0 * h);
    }
  }
  return d;
}

Differential inverse_differential(IsometryId id, const ModelPoint& y) {
  const IsometrySignature sig = signature(id);
  require_model(y, sig.target, id);
  const ModelPoint tgt = ModelPoint::make(y.model, y.coords);
  const Vec2 p = tgt.planar();
  const double X1 = p.x1;
  const double X2 = p.x2;
  switch (id) {
    case IsometryId::XI: {
      const double u = X1 - kLn2;
      const double ch = std::cosh(u);
      const double th = std::tanh(u);
      const double sn = std::sin(X2);
      return planar(-1.0 / (ch * ch), 0.0, sn * th / ch, -std::cos(X2) / ch);
    }
    case IsometryId::PHI: {
      const double r2 = norm_sq(p);
      return planar(X1 / r2, X2 / r2, -X2 / r2, X1 / r2);
    }
    case IsometryId::F_MAP: {
      const double q = 1.0 + norm_sq(p);
      const double a = 2.0 / q;
      const double b = -4.0 / (q * q);
      return planar(a + b * X1 * X1, b * X1 * X2, b * X1 * X2, a + b * X2 * X2);
    }
    case IsometryId::G_MAP: {
      const double q = 4.0 + norm_sq(p);
      const double q2 = q * q;
      return planar(-16.0 * X1 / q2, -16.0 * X2 / q2,
                    4.0 / q - 8.0 * X1 * X1 / q2, -8.0 * X1 * X2 / q2);
    }
    default:
      throw UnsupportedModel(std::string(to_string(id)) +
                             " maps onto a surface; no planar inverse Jacobian");
  }
}

double pullback_residual(IsometryId id, const ModelPoint& x, const Vec2& v) {
  const ModelPoint image = apply(id, x);
  const Coords pushed = differential(id, x).apply(v);
  const double target = eval_model(image, pushed).total;
  const double source = eval_model(x, Coords{v.x1, v.x2, 0.0}).total;
  return std::abs(target - source);
}

}  // namespace funkdisc
