#ifndef FUNKDISC_ISOMETRIES_H_
#define FUNKDISC_ISOMETRIES_H_

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "funkdisc/types.h"

namespace funkdisc {

// The isometries between the models:
//   ETA   FF -> FUH1   x -> (x, 1)/sqrt(1-|x|^2)
//   PI    FP -> FUH2   x -> (2x, 1+|x|^2)/(1-|x|^2)
//   PSI   FF -> FUS1   x -> (x, sqrt(1-|x|^2))
//   SIGMA FP -> FUS2   x -> (2x, 1-|x|^2)/(1+|x|^2)
//   XI    FF -> FB
//   PHI   FB -> FU     x -> e^{x1}(-sin x2, cos x2)
//   F_MAP FF -> FP     x -> x/(1+sqrt(1-|x|^2))
//   G_MAP FF -> FU     x -> (2x2, 2 sqrt(1-|x|^2))/(1+x1)
enum class IsometryId { ETA, PI, PSI, SIGMA, XI, PHI, F_MAP, G_MAP };

inline constexpr std::array<IsometryId, 8> kAllIsometries = {
    IsometryId::ETA, IsometryId::PI,  IsometryId::PSI,   IsometryId::SIGMA,
    IsometryId::XI,  IsometryId::PHI, IsometryId::F_MAP, IsometryId::G_MAP};

struct IsometrySignature {
  ModelId source;
  ModelId target;
};

IsometrySignature signature(IsometryId id);
std::string_view to_string(IsometryId id);
std::optional<IsometryId> parse_isometry_id(std::string_view name);

// Jacobian of a map at a point; rows index target coordinates.
struct Differential {
  int rows = 2;
  std::array<std::array<double, 2>, 3> m{};

  Coords apply(const Vec2& v) const;
};

ModelPoint apply(IsometryId id, const ModelPoint& x);
ModelPoint apply_inverse(IsometryId id, const ModelPoint& y);

Differential differential(IsometryId id, const ModelPoint& x);
// Central differences of apply(), step fd::kStep.
Differential differential_fd(IsometryId id, const ModelPoint& x);
// Jacobian of the inverse map at a target point. Planar-to-planar maps
// only (XI, PHI, F_MAP, G_MAP); others throw UnsupportedModel.
Differential inverse_differential(IsometryId id, const ModelPoint& y);

// |F_target(apply(x), Dx v) - F_source(x, v)|.
double pullback_residual(IsometryId id, const ModelPoint& x, const Vec2& v);

}  // namespace funkdisc

#endif  // FUNKDISC_ISOMETRIES_H_
