#include "funkdisc/laplace.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "funkdisc/errors.h"

namespace funkdisc {
namespace {

void require_funk(const BusemannField& field) {
  if (field.metric != MetricKind::FUNK) {
    throw UnsupportedModel("Laplacian: Funk Busemann fields only");
  }
}

void require_off_origin(MeasureKind kind, const DiscPoint& x, double eps) {
  if ((kind == MeasureKind::MAX || kind == MeasureKind::MIN) &&
      norm(x.vec()) < eps) {
    throw OriginSingularityError(std::string(to_string(kind)) +
                                 " Laplacian is singular at the origin");
  }
}

Vec2 fd_differential(const BusemannField& field, const Vec2& x) {
  const double h = kLaplacianInnerStep;
  auto b = [&](double x1, double x2) {
    return busemann_value(field, DiscPoint(x1, x2));
  };
  return {(b(x.x1 + h, x.x2) - b(x.x1 - h, x.x2)) / (2.0 * h),
          (b(x.x1, x.x2 + h) - b(x.x1, x.x2 - h)) / (2.0 * h)};
}

// sigma g*(db) db with db from finite differences.
Vec2 flux(MeasureKind kind, const BusemannField& field, const Vec2& x) {
  const DiscPoint point(x);
  const Vec2 db = fd_differential(field, x);
  const Vec2 grad = dual_tensor(point, Covector::from(db)).apply(db);
  return volume_density(kind, point) * grad;
}

}  // namespace

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::BH:
      return "bh";
    case MeasureKind::HT:
      return "ht";
    case MeasureKind::MAX:
      return "max";
    case MeasureKind::MIN:
      return "min";
  }
  return "?";
}

std::optional<MeasureKind> parse_measure_kind(std::string_view name) {
  for (MeasureKind k : {MeasureKind::BH, MeasureKind::HT, MeasureKind::MAX,
                        MeasureKind::MIN}) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

DualValue dual_funk(const DiscPoint& x, const Covector& xi) {
  const Vec2 w = xi.vec();
  if (!is_finite(w)) throw DomainError("covector has non-finite components");
  const double alpha = norm(w);
  const double beta = -dot(x.vec(), w);
  return {alpha, beta, alpha + beta};
}

DualTensor dual_tensor(const DiscPoint& x, const Covector& xi) {
  const Vec2 w = xi.vec();
  if (!is_finite(w)) throw DomainError("covector has non-finite components");
  const double len = norm(w);
  if (len == 0.0) throw ZeroCovectorError("g* is undefined at xi = 0");
  const Vec2 u = w / len;
  const double c = 1.0 - dot(x.vec(), u);
  const Vec2 d = u - x.vec();
  return {c * (1.0 - u.x1 * u.x1) + d.x1 * d.x1,
          -c * u.x1 * u.x2 + d.x1 * d.x2,
          c * (1.0 - u.x2 * u.x2) + d.x2 * d.x2};
}

TangentVector gradient(const BusemannField& field, const DiscPoint& x) {
  require_funk(field);
  const Covector db = busemann_gradient_covector(field, x);
  return TangentVector::from(dual_tensor(x, db).apply(db.vec()));
}

double volume_density(MeasureKind kind, const DiscPoint& x) {
  const double r = norm(x.vec());
  // 1 - r = (1 - r^2)/(1 + r)
  const double one_minus_r = x.defect() / (1.0 + r);
  switch (kind) {
    case MeasureKind::BH:
      return 1.0;
    case MeasureKind::HT:
      return std::pow(x.defect(), -1.5);
    case MeasureKind::MAX:
      return std::pow((1.0 + r) / one_minus_r, 1.5);
    case MeasureKind::MIN:
      return std::pow(one_minus_r / (1.0 + r), 1.5);
  }
  return 0.0;
}

double randers_volume_density(MeasureKind kind, double beta_norm,
                              double sqrt_det_a) {
  switch (kind) {
    case MeasureKind::BH:
      return std::pow((1.0 - beta_norm) * (1.0 + beta_norm), 1.5) * sqrt_det_a;
    case MeasureKind::HT:
      return sqrt_det_a;
    case MeasureKind::MAX:
      return std::pow(1.0 + beta_norm, 3) * sqrt_det_a;
    case MeasureKind::MIN:
      return std::pow(1.0 - beta_norm, 3) * sqrt_det_a;
  }
  return 0.0;
}

double laplacian_busemann(MeasureKind kind, const BusemannField& field,
                          const DiscPoint& x) {
  require_funk(field);
  require_off_origin(kind, x, kOriginEpsilon);
  const Vec2 p = x.vec();
  const double excess = dot(p, field.y.vec()) - norm_sq(p);
  switch (kind) {
    case MeasureKind::BH:
      return -2.0;
    case MeasureKind::HT:
      return -2.0 + 3.0 * excess / x.defect();
    case MeasureKind::MAX:
      return -2.0 + 3.0 * excess / (norm(p) * x.defect());
    case MeasureKind::MIN:
      return -2.0 - 3.0 * excess / (norm(p) * x.defect());
  }
  return 0.0;
}

double laplacian_fd_oracle(MeasureKind kind, const BusemannField& field,
                           const DiscPoint& x) {
  require_funk(field);
  // The outer stencil must not straddle the origin, where |x| is not smooth.
  require_off_origin(kind, x,
                     std::max(kOriginEpsilon, 2.0 * kLaplacianOuterStep));
  const double h = kLaplacianOuterStep;
  const Vec2 p = x.vec();
  const double div =
      (flux(kind, field, p + Vec2{h, 0.0}).x1 -
       flux(kind, field, p - Vec2{h, 0.0}).x1 +
       flux(kind, field, p + Vec2{0.0, h}).x2 -
       flux(kind, field, p - Vec2{0.0, h}).x2) /
      (2.0 * h);
  return div / volume_density(kind, x);
}

double mean_curvature_sphere(double r) {
  if (!std::isfinite(r) || r <= 0.0) {
    throw DomainError("sphere radius must be positive and finite");
  }
  return -0.5 / std::tanh(0.5 * r) - 1.5;
}

}  // namespace funkdisc
