#include "funkdisc/geodesics.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "funkdisc/core_metrics.h"
#include "funkdisc/errors.h"

namespace funkdisc {
namespace {

constexpr double kDegenerateSeparation = 1e-14;
// Coefficient comparisons in classify_image (m = c, c = 0, k = 0).
constexpr double kClassifyTolerance = 1e-12;

// Positive and negative roots of a lambda^2 + 2 b lambda - c = 0 with
// a, c > 0 (so the roots straddle zero), avoiding cancellation.
ChordRoots straddling_roots(double a, double b, double c) {
  const double root = std::sqrt(b * b + a * c);
  if (b >= 0.0) {
    const double q = -(b + root);  // < 0
    return {q / a, -c / q};
  }
  const double q = root - b;  // > 0
  return {-c / q, q / a};
}

// Point u p + (1 - u) y of the chord through p and y, with its boundary
// defect 1 - |.|^2 = 2u(1 - <p,y>) - u^2 |p - y|^2. The closed form is
// used while u < 1/2, where it cannot cancel by more than a factor 2.
DiscPoint chord_point(const DiscPoint& p, const BoundaryPoint& y, double u,
                      double one_minus_u) {
  const Vec2 x = u * p.vec() + one_minus_u * y.vec();
  if (u >= 0.5) return DiscPoint(x);
  const Vec2 py = p.vec() - y.vec();
  const double defect =
      2.0 * u * (1.0 - dot(p.vec(), y.vec())) - u * u * norm_sq(py);
  return DiscPoint::with_defect(x, defect);
}

double band_abscissa(double k) {
  return std::numbers::ln2 + 0.5 * (std::log1p(-k) - std::log1p(k));
}

BandResidual band_residual(double m, double c, const Vec2& X) {
  const double e = std::exp(2.0 * X.x1);
  const double lhs = 4.0 * std::exp(X.x1) * std::sin(X.x2);
  const double rhs = m * (4.0 - e) + c * (4.0 + e);
  const double plus = std::abs(lhs - rhs);
  const double minus = std::abs(lhs + rhs);
  if (plus <= minus) return {plus, +1};
  return {minus, -1};
}

void require_intersects(const Chord& chord) {
  if (const auto* s = std::get_if<SlopeChord>(&chord)) {
    if (!std::isfinite(s->m) || !std::isfinite(s->c) ||
        !(s->c * s->c < 1.0 + s->m * s->m)) {
      throw NoIntersectionError("chord does not meet the open unit disc");
    }
  } else {
    const double k = std::get<VerticalChord>(chord).k;
    if (!(std::abs(k) < 1.0)) {
      throw NoIntersectionError("vertical chord does not meet the open disc");
    }
  }
}

}  // namespace

BoundaryPoint forward_hit(const DiscPoint& x, const TangentVector& v) {
  const Vec2 w = v.vec();
  if (!is_finite(w)) throw DomainError("vector has non-finite components");
  const double vv = norm_sq(w);
  if (vv == 0.0) throw ZeroVectorError("forward hit needs a nonzero vector");
  // Positive root of |x + s v|^2 = 1; s = 1/F_F(x, v).
  const double xv = dot(x.vec(), w);
  const double root = std::sqrt(xv * xv + vv * x.defect());
  const double s = xv >= 0.0 ? x.defect() / (root + xv) : (root - xv) / vv;
  return BoundaryPoint(x.vec() + s * w);
}

ChordRoots chord_roots(const Vec2& x, const Vec2& z, double z_defect) {
  const Vec2 xz = x - z;
  if (norm(xz) < kDegenerateSeparation) {
    throw DegenerateError("lambda_roots: points coincide");
  }
  if (!(z_defect > 0.0)) {
    throw DomainError("lambda_roots: point is not inside the disc");
  }
  return straddling_roots(norm_sq(xz), dot(xz, z), z_defect);
}

ChordRoots lambda_roots(const DiscPoint& x, const DiscPoint& z) {
  return chord_roots(x.vec(), z.vec(), z.defect());
}

double boundary_gap(const DiscPoint& x, const BoundaryPoint& y) {
  return 0.5 * (norm_sq(x.vec() - y.vec()) + x.defect());
}

double funk_distance(const DiscPoint& from, const DiscPoint& to) {
  if (from.x1() == to.x1() && from.x2() == to.x2()) return 0.0;
  const ChordRoots r = lambda_roots(from, to);
  return std::log1p(-r.lambda1) - std::log(-r.lambda1);
}

double hilbert_distance(const DiscPoint& from, const DiscPoint& to) {
  if (from.x1() == to.x1() && from.x2() == to.x2()) return 0.0;
  const ChordRoots toward = lambda_roots(from, to);
  // The same chord parametrized from `from`; its positive root equals
  // lambda2 - 1 without the subtraction.
  const ChordRoots back = lambda_roots(to, from);
  return 0.5 * (std::log(toward.lambda2) - std::log(-back.lambda1) +
                std::log1p(-toward.lambda1) - std::log(-toward.lambda1));
}

FunkRay::FunkRay(const DiscPoint& p, const BoundaryPoint& y) : p_(p), y_(y) {}

FunkRay FunkRay::from_velocity(const DiscPoint& p, const TangentVector& v) {
  return FunkRay(p, forward_hit(p, v));
}

double hilbert_k(const DiscPoint& p, const BoundaryPoint& y) {
  return norm_sq(y.vec() - p.vec()) / p.defect();
}

HilbertLine::HilbertLine(const DiscPoint& p, const BoundaryPoint& y)
    : p_(p), y_(y), k_(hilbert_k(p, y)) {}

HilbertLine HilbertLine::from_velocity(const DiscPoint& p,
                                       const TangentVector& v) {
  return HilbertLine(p, forward_hit(p, v));
}

DiscPoint funk_geodesic(const FunkRay& ray, double t) {
  if (!(t >= 0.0)) throw DomainError("funk_geodesic: t must be >= 0");
  return chord_point(ray.p(), ray.y(), std::exp(-t), -std::expm1(-t));
}

TangentVector funk_velocity(const FunkRay& ray, double t) {
  if (!(t >= 0.0)) throw DomainError("funk_velocity: t must be >= 0");
  return TangentVector::from(std::exp(-t) * (ray.y().vec() - ray.p().vec()));
}

double hilbert_parameter(const HilbertLine& line, double t) {
  const double e2 = std::exp(2.0 * t);
  return std::expm1(2.0 * t) / (e2 + line.k());
}

DiscPoint hilbert_geodesic(const HilbertLine& line, double t) {
  if (!std::isfinite(t)) throw DomainError("hilbert_geodesic: t not finite");
  // 1 - s(t) = (1 + k)/(e^{2t} + k)
  const double k = line.k();
  const double u = (1.0 + k) / (std::exp(2.0 * t) + k);
  const Vec2 x = u * line.p().vec() + hilbert_parameter(line, t) * line.y().vec();
  // 1 - |beta(t)|^2 = (1 - |p|^2)(1 + k)^2 / (e^t + k e^-t)^2, exact at
  // both ends of the line.
  const double w = (1.0 + k) / (std::exp(t) + k * std::exp(-t));
  return DiscPoint::with_defect(x, line.p().defect() * w * w);
}

TangentVector hilbert_velocity(const HilbertLine& line, double t) {
  const double e2 = std::exp(2.0 * t);
  const double denom = e2 + line.k();
  const double ds = 2.0 * (1.0 + line.k()) * e2 / (denom * denom);
  return TangentVector::from(ds * (line.y().vec() - line.p().vec()));
}

std::vector<double> sample_times(double t0, double t1, int n) {
  if (n < 2) throw DomainError("sampling needs n >= 2");
  if (!std::isfinite(t0) || !std::isfinite(t1)) {
    throw DomainError("sampling interval is not finite");
  }
  std::vector<double> ts(n);
  for (int i = 0; i < n; ++i) {
    ts[i] = t0 + (t1 - t0) * static_cast<double>(i) / (n - 1);
  }
  ts.back() = t1;
  return ts;
}

Chord chord_through(const DiscPoint& p, const BoundaryPoint& y) {
  const Vec2 d = y.vec() - p.vec();
  if (std::abs(d.x1) <= 1e-12 * norm(d)) return VerticalChord{p.x1()};
  const double m = d.x2 / d.x1;
  return SlopeChord{m, p.x2() - m * p.x1()};
}

double chord_residual(const Chord& chord, const Vec2& x) {
  if (const auto* s = std::get_if<SlopeChord>(&chord)) {
    return s->m * x.x1 + s->c - x.x2;
  }
  return x.x1 - std::get<VerticalChord>(chord).k;
}

std::string_view to_string(GeodesicKind kind) {
  switch (kind) {
    case GeodesicKind::VERTICAL_RAY: return "vertical_ray";
    case GeodesicKind::CONCENTRIC_SEMICIRCLE: return "concentric_semicircle";
    case GeodesicKind::SEMICIRCLE_ON_AXIS: return "semicircle_on_axis";
    case GeodesicKind::DIAMETER: return "diameter";
    case GeodesicKind::ORTHO_ARC: return "ortho_arc";
    case GeodesicKind::BAND_VERTICAL: return "band_vertical";
    case GeodesicKind::BAND_IMPLICIT: return "band_implicit";
  }
  return "?";
}

double GeodesicClass::residual(const Vec2& X) const {
  switch (kind) {
    case GeodesicKind::CONCENTRIC_SEMICIRCLE:
      return norm_sq(X) - radius_sq;
    // Circle equations multiplied through by the chord data; they stay
    // bounded as the center runs off to infinity.
    case GeodesicKind::SEMICIRCLE_ON_AXIS: {
      const auto& s = std::get<SlopeChord>(chord);
      return (s.m - s.c) * norm_sq(X) + 4.0 * X.x1 - 4.0 * (s.m + s.c);
    }
    case GeodesicKind::ORTHO_ARC:
      if (const auto* s = std::get_if<SlopeChord>(&chord)) {
        return s->c * (norm_sq(X) + 1.0) + 2.0 * (s->m * X.x1 - X.x2);
      } else {
        const double k = std::get<VerticalChord>(chord).k;
        return k * (norm_sq(X) + 1.0) - 2.0 * X.x1;
      }
    case GeodesicKind::VERTICAL_RAY:
    case GeodesicKind::BAND_VERTICAL:
      return X.x1 - abscissa;
    case GeodesicKind::DIAMETER:
      return direction.x1 * X.x2 - direction.x2 * X.x1;
    case GeodesicKind::BAND_IMPLICIT: {
      const auto& s = std::get<SlopeChord>(chord);
      return band_residual(s.m, s.c, X).value;
    }
  }
  return 0.0;
}

GeodesicClass classify_image(ModelId model, const Chord& chord) {
  require_intersects(chord);
  GeodesicClass out;
  out.model = model;
  out.chord = chord;
  const auto* slope = std::get_if<SlopeChord>(&chord);
  switch (model) {
    case ModelId::FU:
      if (slope != nullptr) {
        const double m = slope->m;
        const double c = slope->c;
        const double diff = m - c;
        if (std::abs(diff) <=
            kClassifyTolerance * std::max({1.0, std::abs(m), std::abs(c)})) {
          // Chords through (-1, 0).
          out.kind = GeodesicKind::VERTICAL_RAY;
          out.abscissa = 2.0 * c;
        } else {
          out.kind = GeodesicKind::SEMICIRCLE_ON_AXIS;
          out.center = {-2.0 / diff, 0.0};
          out.radius_sq = 4.0 * (m * m - c * c + 1.0) / (diff * diff);
        }
      } else {
        const double k = std::get<VerticalChord>(chord).k;
        out.kind = GeodesicKind::CONCENTRIC_SEMICIRCLE;
        out.center = {0.0, 0.0};
        out.radius_sq = 4.0 * (1.0 - k) / (1.0 + k);
      }
      return out;
    case ModelId::FP:
      if (slope != nullptr) {
        const double m = slope->m;
        const double c = slope->c;
        if (std::abs(c) <= kClassifyTolerance) {
          out.kind = GeodesicKind::DIAMETER;
          const double n = std::hypot(1.0, m);
          out.direction = {1.0 / n, m / n};
        } else {
          out.kind = GeodesicKind::ORTHO_ARC;
          out.center = {-m / c, 1.0 / c};
          out.radius_sq = (1.0 + m * m - c * c) / (c * c);
        }
      } else {
        const double k = std::get<VerticalChord>(chord).k;
        if (std::abs(k) <= kClassifyTolerance) {
          out.kind = GeodesicKind::DIAMETER;
          out.direction = {0.0, 1.0};
        } else {
          out.kind = GeodesicKind::ORTHO_ARC;
          out.center = {1.0 / k, 0.0};
          out.radius_sq = (1.0 - k * k) / (k * k);
        }
      }
      return out;
    case ModelId::FB:
      if (slope != nullptr) {
        out.kind = GeodesicKind::BAND_IMPLICIT;
      } else {
        out.kind = GeodesicKind::BAND_VERTICAL;
        out.abscissa = band_abscissa(std::get<VerticalChord>(chord).k);
      }
      return out;
    default:
      throw UnsupportedModel("classify_image: no geodesic classification for " +
                             std::string(to_string(model)));
  }
}

BandResidual band_implicit_residual(double m, double c, const ModelPoint& X) {
  if (X.model != ModelId::FB) {
    throw DomainError("band_implicit_residual expects a band point");
  }
  const ModelPoint checked = ModelPoint::make(X.model, X.coords);
  return band_residual(m, c, checked.planar());
}

}  // namespace funkdisc
