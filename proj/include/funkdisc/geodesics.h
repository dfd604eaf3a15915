#ifndef FUNKDISC_GEODESICS_H_
#define FUNKDISC_GEODESICS_H_

#include <utility>
#include <variant>
#include <vector>

#include "funkdisc/types.h"

namespace funkdisc {

// Boundary point reached from x in direction v: x + v/F_F(x, v).
BoundaryPoint forward_hit(const DiscPoint& x, const TangentVector& v);

// Roots of |z + lambda (x - z)|^2 = 1, the chord through z and x meeting
// the unit circle: lambda1 < 0 lies beyond z, lambda2 > 1 beyond x.
struct ChordRoots {
  double lambda1;
  double lambda2;
};
ChordRoots lambda_roots(const DiscPoint& x, const DiscPoint& z);
// Same, for a point z that may lie closer to the circle than a DiscPoint
// allows; z_defect = 1 - |z|^2 must be supplied accurately.
ChordRoots chord_roots(const Vec2& x, const Vec2& z, double z_defect);

// 1 - <x, y> for a boundary point y, as (|x - y|^2 + 1 - |x|^2)/2; no
// cancellation as x approaches y.
double boundary_gap(const DiscPoint& x, const BoundaryPoint& y);

// Asymmetric Funk distance log(|x1 - a| / |x2 - a|), a the forward hit of
// the ray from x1 through x2.
double funk_distance(const DiscPoint& from, const DiscPoint& to);
// Hilbert (Klein) distance; symmetric.
double hilbert_distance(const DiscPoint& from, const DiscPoint& to);

// Unit-speed forward Funk ray gamma(t) = e^{-t} p + (1 - e^{-t}) y.
class FunkRay {
 public:
  FunkRay(const DiscPoint& p, const BoundaryPoint& y);
  static FunkRay from_velocity(const DiscPoint& p, const TangentVector& v);

  const DiscPoint& p() const { return p_; }
  const BoundaryPoint& y() const { return y_; }

 private:
  DiscPoint p_;
  BoundaryPoint y_;
};

// Unit-speed Hilbert line beta(t) = (1 - s(t)) p + s(t) y with
// s(t) = (e^t - e^-t)/(e^t + k e^-t), k = |y - p|^2 / (|y|^2 - |p|^2).
class HilbertLine {
 public:
  HilbertLine(const DiscPoint& p, const BoundaryPoint& y);
  static HilbertLine from_velocity(const DiscPoint& p, const TangentVector& v);

  const DiscPoint& p() const { return p_; }
  const BoundaryPoint& y() const { return y_; }
  double k() const { return k_; }

 private:
  DiscPoint p_;
  BoundaryPoint y_;
  double k_;
};

// k(p, y) in F_F(p, -v) = k(p, y) F_F(p, v), y the forward hit of v.
double hilbert_k(const DiscPoint& p, const BoundaryPoint& y);

// t >= 0. Throws DomainError once the point is within kBoundaryEpsilon of
// the circle (t of order 20).
DiscPoint funk_geodesic(const FunkRay& ray, double t);
TangentVector funk_velocity(const FunkRay& ray, double t);

DiscPoint hilbert_geodesic(const HilbertLine& line, double t);
TangentVector hilbert_velocity(const HilbertLine& line, double t);
double hilbert_parameter(const HilbertLine& line, double t);  // s(t)

// n uniform samples of [t0, t1] inclusive; n >= 2.
inline constexpr int kDefaultSamples = 256;
std::vector<double> sample_times(double t0, double t1,
                                 int n = kDefaultSamples);

// A chord of the disc: x2 = m x1 + c, or x1 = k.
struct SlopeChord {
  double m;
  double c;
};
struct VerticalChord {
  double k;
};
using Chord = std::variant<SlopeChord, VerticalChord>;

// Line through p and y.
Chord chord_through(const DiscPoint& p, const BoundaryPoint& y);
// Signed residual of the chord equation at x.
double chord_residual(const Chord& chord, const Vec2& x);

enum class GeodesicKind {
  VERTICAL_RAY,
  CONCENTRIC_SEMICIRCLE,
  SEMICIRCLE_ON_AXIS,
  DIAMETER,
  ORTHO_ARC,
  BAND_VERTICAL,
  BAND_IMPLICIT,
};

std::string_view to_string(GeodesicKind kind);

struct GeodesicClass {
  ModelId model = ModelId::FU;
  GeodesicKind kind = GeodesicKind::VERTICAL_RAY;
  Chord chord = SlopeChord{0.0, 0.0};
  Vec2 center;           // circle kinds
  double radius_sq = 0;  // circle kinds
  Vec2 direction;        // DIAMETER (unit)
  double abscissa = 0;   // VERTICAL_RAY and BAND_VERTICAL: the X1 value

  // Residual of the defining equation at a point of the model. Circles off
  // the origin use their equation scaled by the chord coefficients:
  // (m - c)|X|^2 + 4 X1 - 4(m + c) in FU, c(|X|^2 + 1) + 2(m X1 - X2) or
  // k(|X|^2 + 1) - 2 X1 in FP.
  double residual(const Vec2& X) const;
};

// Image in FU, FP or FB of the Funk geodesic along `chord`.
GeodesicClass classify_image(ModelId model, const Chord& chord);

// 4 e^{X1} sin X2 = +-[m(4 - e^{2X1}) + c(4 + e^{2X1})]; the smaller of
// the two residuals and the sign that attains it.
struct BandResidual {
  double value;
  int branch;  // +1 or -1
};
BandResidual band_implicit_residual(double m, double c, const ModelPoint& X);

}  // namespace funkdisc

#endif  // FUNKDISC_GEODESICS_H_
