#ifndef FUNKDISC_BUSEMANN_H_
#define FUNKDISC_BUSEMANN_H_

#include <string_view>
#include <vector>

#include "funkdisc/types.h"

namespace funkdisc {

enum class MetricKind { FUNK, HILBERT };

std::string_view to_string(MetricKind kind);

// Busemann function of the Funk ray or Hilbert line from p towards y.
struct BusemannField {
  MetricKind metric = MetricKind::FUNK;
  DiscPoint p{0.0, 0.0};
  BoundaryPoint y{1.0, 0.0};
};

// Truncations converge like e^{-t}; past this the difference is below
// double resolution.
inline constexpr double kTruncationHorizon = 40.0;

double busemann_value(const BusemannField& field, const DiscPoint& x);

// t - d(x, gamma(t)). The geodesic point is handled through its analytic
// boundary defect, so t may run past the point where gamma(t) is a valid
// DiscPoint, up to kTruncationHorizon and beyond.
double busemann_truncated(const BusemannField& field, const DiscPoint& x,
                          double t);

// y / (1 - <x, y>). FUNK only.
Covector busemann_gradient_covector(const BusemannField& field,
                                    const DiscPoint& x);

// Implicit quadratic
//   a11 x1^2 + 2 a12 x1 x2 + a22 x2^2 + 2 (b1 x1 + b2 x2) + c = 0.
struct Conic {
  double a11 = 0.0;
  double a12 = 0.0;
  double a22 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double c = 0.0;

  double eval(const Vec2& x) const;
};

// The level set {b = a}; throws EmptyLevelSetError if it misses the disc
// or stays within 4 kBoundaryEpsilon of the circle.
class HorocycleLevel {
 public:
  HorocycleLevel(const BusemannField& field, double a);

  const BusemannField& field() const { return field_; }
  double a() const { return a_; }

  // FUNK: the horocycle is the chord <x, y> = offset().
  double offset() const;
  // HILBERT: the ellipse through y.
  Conic conic() const;

 private:
  BusemannField field_;
  double a_;
};

// n >= 2 points of the level set, clipped to where 1 - |x|^2 is at least
// min(1e-7, depth/4), depth the largest value it takes on the level set.
// Funk chords are sampled uniformly in arc length, Hilbert ellipses
// uniformly in angle about the center; both include the clipped ends.
std::vector<DiscPoint> horocycle_points(const HorocycleLevel& level, int n);

}  // namespace funkdisc

#endif  // FUNKDISC_BUSEMANN_H_
