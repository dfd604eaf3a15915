#ifndef FUNKDISC_TYPES_H_
#define FUNKDISC_TYPES_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "funkdisc/vec.h"

namespace funkdisc {

// Points with 1 - |x|^2 <= kBoundaryEpsilon are rejected.
inline constexpr double kBoundaryEpsilon = 1e-9;
// Surface-membership tolerance for the hyperboloid and hemisphere charts,
// relative to max(1, |x|).
inline constexpr double kChartTolerance = 1e-10;

// A point of the open unit disc. Carries 1 - |x|^2 alongside the
// coordinates: parametrized curves that run out to the boundary know this
// quantity analytically, far more accurately than it can be recovered from
// rounded coordinates.
class DiscPoint {
 public:
  DiscPoint(double x1, double x2);
  explicit DiscPoint(const Vec2& x) : DiscPoint(x.x1, x.x2) {}

  // `defect` must agree with 1 - |x|^2 to rounding (checked loosely).
  static DiscPoint with_defect(const Vec2& x, double defect);

  double x1() const { return x_.x1; }
  double x2() const { return x_.x2; }
  const Vec2& vec() const { return x_; }
  // 1 - |x|^2 > kBoundaryEpsilon.
  double defect() const { return defect_; }

 private:
  DiscPoint(const Vec2& x, double defect, bool);
  Vec2 x_;
  double defect_;
};

struct TangentVector {
  double v1 = 0.0;
  double v2 = 0.0;

  static constexpr TangentVector from(const Vec2& v) { return {v.x1, v.x2}; }
  constexpr Vec2 vec() const { return {v1, v2}; }
  constexpr TangentVector operator-() const { return {-v1, -v2}; }
};

struct Covector {
  double xi1 = 0.0;
  double xi2 = 0.0;

  static constexpr Covector from(const Vec2& v) { return {v.x1, v.x2}; }
  constexpr Vec2 vec() const { return {xi1, xi2}; }
};

// A point of the unit circle; renormalized on construction.
class BoundaryPoint {
 public:
  BoundaryPoint(double y1, double y2);
  explicit BoundaryPoint(const Vec2& y) : BoundaryPoint(y.x1, y.x2) {}
  static BoundaryPoint at_angle(double theta);

  double y1() const { return y_.x1; }
  double y2() const { return y_.x2; }
  const Vec2& vec() const { return y_; }

 private:
  Vec2 y_;
};

enum class ModelId {
  FF,       // Funk disc
  FP,       // Finsler-Poincare disc
  FU,       // Finsler-Poincare upper half plane
  FB,       // Finsler band
  FUH1,     // hyperboloid sheet carrying the Funk metric (via eta)
  FUH2,     // hyperboloid sheet carrying the Finsler-Poincare metric (via pi)
  FUS1,     // upper hemisphere carrying the Funk metric (via psi)
  FUS2,     // upper hemisphere carrying the Finsler-Poincare metric (via sigma)
  AMBIENT,  // upper half space x3 > 0
  HD,       // Hilbert (Klein) disc
};

std::string_view to_string(ModelId id);
std::optional<ModelId> parse_model_id(std::string_view name);
// 2 for planar charts, 3 for surfaces and the ambient half space.
int dimension(ModelId id);

using Coords = std::array<double, 3>;

struct ModelPoint {
  ModelId model = ModelId::FF;
  Coords coords{};  // unused trailing entries are zero

  // Validates the chart invariant; throws DomainError.
  static ModelPoint make(ModelId model, const Coords& coords);
  static ModelPoint make(ModelId model, const Vec2& x) {
    return make(model, Coords{x.x1, x.x2, 0.0});
  }
  static ModelPoint from_disc(ModelId model, const DiscPoint& x);

  Vec2 planar() const { return {coords[0], coords[1]}; }
  Vec3 spatial() const { return {coords[0], coords[1], coords[2]}; }
};

struct RandersValue {
  double alpha = 0.0;
  double beta = 0.0;
  double total = 0.0;
};

// Symmetric 2x2 tensor; used for g_ij and for the dual g*^ij.
struct SymmetricTensor2 {
  double g11 = 0.0;
  double g12 = 0.0;
  double g22 = 0.0;

  double trace() const { return g11 + g22; }
  double det() const { return g11 * g22 - g12 * g12; }
  // Ascending.
  std::array<double, 2> eigenvalues() const;
  bool is_positive_definite() const;
  Vec2 apply(const Vec2& v) const {
    return {g11 * v.x1 + g12 * v.x2, g12 * v.x1 + g22 * v.x2};
  }
};

using FundamentalTensor = SymmetricTensor2;

}  // namespace funkdisc

#endif  // FUNKDISC_TYPES_H_
