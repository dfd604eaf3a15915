#include "funkdisc/busemann.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "funkdisc/errors.h"
#include "funkdisc/geodesics.h"

namespace funkdisc {
namespace {

constexpr double kHorocycleTolerance = 1e-10;

void require_valid_t(double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw DomainError("truncation parameter must be finite and >= 0");
  }
}

// Point u p + (1 - u) y of the chord from p to y with its boundary defect
// 2u(1 - <p,y>) - u^2 |p - y|^2.
struct RawPoint {
  Vec2 x;
  double defect;
};

RawPoint chord_raw(const DiscPoint& p, const BoundaryPoint& y, double u,
                   double one_minus_u) {
  const double gap = 0.5 * (norm_sq(p.vec() - y.vec()) + p.defect());
  const double defect = u * (2.0 * gap - u * norm_sq(p.vec() - y.vec()));
  return {u * p.vec() + one_minus_u * y.vec(), defect};
}

double funk_distance_raw(const DiscPoint& x, const RawPoint& z) {
  const ChordRoots r = chord_roots(x.vec(), z.x, z.defect);
  return std::log1p(-r.lambda1) - std::log(-r.lambda1);
}

double hilbert_distance_raw(const DiscPoint& x, const RawPoint& z) {
  const ChordRoots toward = chord_roots(x.vec(), z.x, z.defect);
  const ChordRoots back = chord_roots(z.x, x.vec(), x.defect());
  return 0.5 * (std::log(toward.lambda2) - std::log(-back.lambda1) +
                std::log1p(-toward.lambda1) - std::log(-toward.lambda1));
}

}  // namespace

std::string_view to_string(MetricKind kind) {
  return kind == MetricKind::FUNK ? "funk" : "hilbert";
}

double busemann_value(const BusemannField& field, const DiscPoint& x) {
  const double gp = boundary_gap(field.p, field.y);
  const double gx = boundary_gap(x, field.y);
  if (field.metric == MetricKind::FUNK) return std::log(gp / gx);
  return 0.5 * std::log(x.defect() / field.p.defect()) + std::log(gp / gx);
}

double busemann_truncated(const BusemannField& field, const DiscPoint& x,
                          double t) {
  require_valid_t(t);
  if (field.metric == MetricKind::FUNK) {
    const RawPoint z =
        chord_raw(field.p, field.y, std::exp(-t), -std::expm1(-t));
    if (norm(z.x - x.vec()) == 0.0) return t;
    return t - funk_distance_raw(x, z);
  }
  const HilbertLine line(field.p, field.y);
  const double k = line.k();
  const double e = std::exp(2.0 * t);
  const RawPoint z =
      chord_raw(field.p, field.y, (1.0 + k) / (e + k),
                std::expm1(2.0 * t) / (e + k));
  if (norm(z.x - x.vec()) == 0.0) return t;
  return t - hilbert_distance_raw(x, z);
}

Covector busemann_gradient_covector(const BusemannField& field,
                                    const DiscPoint& x) {
  if (field.metric != MetricKind::FUNK) {
    throw UnsupportedModel("busemann_gradient_covector: Funk fields only");
  }
  return Covector::from(field.y.vec() / boundary_gap(x, field.y));
}

double Conic::eval(const Vec2& x) const {
  return a11 * x.x1 * x.x1 + 2.0 * a12 * x.x1 * x.x2 + a22 * x.x2 * x.x2 +
         2.0 * (b1 * x.x1 + b2 * x.x2) + c;
}

namespace {

// Samples stay this far inside the circle (in 1 - |x|^2), or a quarter of
// the deepest point of the level set if that is smaller.
constexpr double kHorocycleMargin = 1e-7;

struct EllipseData {
  double k;   // e^{2a}(1 - |p|^2)
  double q;   // (1 - <p,y>)^2
  double r0;  // Q/(K + Q), center to y
};

EllipseData ellipse_data(const BusemannField& field, double a) {
  const double k = std::exp(2.0 * a) * field.p.defect();
  const double gp = boundary_gap(field.p, field.y);
  const double q = gp * gp;
  return {k, q, q / (k + q)};
}

// Deepest point of the level set, in 1 - |x|^2.
double level_depth(const BusemannField& field, double a) {
  if (field.metric == MetricKind::FUNK) {
    const double l = 1.0 - std::exp(-a) * boundary_gap(field.p, field.y);
    return (1.0 - l) * (1.0 + l);
  }
  const EllipseData e = ellipse_data(field, a);
  // At the far end of the axis through y, sigma = 2 r0.
  return e.k * 4.0 * e.r0 * e.r0 / e.q;
}

double sample_margin(double depth) {
  return std::min(kHorocycleMargin, 0.25 * depth);
}

// The ellipse point at angle theta about its center, with its boundary
// defect K sigma^2 / Q, sigma = 1 - <x, y> = r0 - r cos(theta). Near y
// sigma is taken in the rationalized form
// Q^3 sin^2 / ((K + Q)^2 (K cos^2 + Q)(r0 + r cos)).
struct EllipsePoint {
  Vec2 x;
  double defect;
};

EllipsePoint ellipse_point(const EllipseData& e, const Vec2& y,
                           double theta) {
  const Vec2 y_perp{-y.x2, y.x1};
  const double cs = std::cos(theta);
  const double sn = std::sin(theta);
  const double kq = e.k + e.q;
  const double r = std::sqrt(e.q * e.q / kq / (e.k * cs * cs + e.q));
  const double sigma =
      cs <= 0.0 ? e.r0 - r * cs
                : e.q * e.q * e.q * sn * sn /
                      (kq * kq * (e.k * cs * cs + e.q) * (e.r0 + r * cs));
  const Vec2 center = (e.k / kq) * y;
  return {center + r * (cs * y + sn * y_perp), e.k * sigma * sigma / e.q};
}

}  // namespace

HorocycleLevel::HorocycleLevel(const BusemannField& field, double a)
    : field_(field), a_(a) {
  if (!std::isfinite(a)) throw DomainError("horocycle level must be finite");
  if (field.metric == MetricKind::FUNK) {
    // The chord <x, y> = offset meets the open disc iff offset > -1.
    const double gp = boundary_gap(field.p, field.y);
    if (!(a > std::log(0.5 * gp))) {
      throw EmptyLevelSetError("Funk horocycle at level " + std::to_string(a) +
                               " misses the disc");
    }
  }
  if (!(level_depth(field, a) > 4.0 * kBoundaryEpsilon)) {
    throw EmptyLevelSetError("horocycle at level " + std::to_string(a) +
                             " lies within the boundary tolerance");
  }
}

double HorocycleLevel::offset() const {
  return 1.0 - std::exp(-a_) * boundary_gap(field_.p, field_.y);
}

// K (1 - <x,y>)^2 = Q (1 - |x|^2) with K = e^{2a}(1 - |p|^2),
// Q = (1 - <p,y>)^2.
Conic HorocycleLevel::conic() const {
  const EllipseData e = ellipse_data(field_, a_);
  const Vec2 y = field_.y.vec();
  return {e.k * y.x1 * y.x1 + e.q, e.k * y.x1 * y.x2, e.k * y.x2 * y.x2 + e.q,
          -e.k * y.x1,             -e.k * y.x2,       e.k - e.q};
}

std::vector<DiscPoint> horocycle_points(const HorocycleLevel& level, int n) {
  if (n < 2) throw DomainError("horocycle_points: n must be >= 2");
  const BusemannField& field = level.field();
  const Vec2 y = field.y.vec();
  const Vec2 y_perp{-y.x2, y.x1};
  const double margin = sample_margin(level_depth(field, level.a()));
  std::vector<DiscPoint> out;
  out.reserve(static_cast<std::size_t>(n));
  if (field.metric == MetricKind::FUNK) {
    // Arc-length samples of the part of the chord with defect >= margin.
    const double l = level.offset();
    const double depth = (1.0 - l) * (1.0 + l);
    const double half = std::sqrt(depth - margin);
    for (int i = 0; i < n; ++i) {
      const double s = half * (-1.0 + 2.0 * i / (n - 1));
      out.push_back(DiscPoint::with_defect(l * y + s * y_perp, depth - s * s));
    }
  } else {
    // Angles about the center, over the arc with defect >= margin. The
    // defect grows with theta on [0, pi].
    const EllipseData e = ellipse_data(field, level.a());
    double lo = 0.0, hi = std::numbers::pi;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      (ellipse_point(e, y, mid).defect < margin ? lo : hi) = mid;
    }
    const double start = hi;
    const double span = 2.0 * (std::numbers::pi - start);
    for (int i = 0; i < n; ++i) {
      const EllipsePoint pt =
          ellipse_point(e, y, start + span * i / (n - 1));
      out.push_back(DiscPoint::with_defect(pt.x, pt.defect));
    }
  }
  for (const DiscPoint& x : out) {
    const double err = std::abs(busemann_value(field, x) - level.a());
    if (err > kHorocycleTolerance) {
      throw DomainError("horocycle point misses its level by " +
                        std::to_string(err));
    }
  }
  return out;
}

}  // namespace funkdisc
