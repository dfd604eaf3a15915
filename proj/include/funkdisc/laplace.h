#ifndef FUNKDISC_LAPLACE_H_
#define FUNKDISC_LAPLACE_H_

#include <optional>
#include <string_view>

#include "funkdisc/busemann.h"
#include "funkdisc/types.h"

namespace funkdisc {

// Busemann-Hausdorff, Holmes-Thompson, maximum and minimum volume forms.
enum class MeasureKind { BH, HT, MAX, MIN };

std::string_view to_string(MeasureKind kind);
std::optional<MeasureKind> parse_measure_kind(std::string_view name);

// MAX/MIN Laplacians divide by |x|.
inline constexpr double kOriginEpsilon = 1e-6;
// Steps of the finite-difference Laplacian: outer divergence, inner gradient.
inline constexpr double kLaplacianOuterStep = 1e-4;
inline constexpr double kLaplacianInnerStep = 1e-5;
// Laplacian of a Hilbert Busemann function (the Klein model is
// asymptotically harmonic); not computed anywhere.
inline constexpr double kHilbertBusemannLaplacian = -0.5;

struct DualValue {
  double alpha_star = 0.0;
  double beta_star = 0.0;
  double total = 0.0;
};

using DualTensor = SymmetricTensor2;

// F*(x, xi) = |xi| - <x, xi>.
DualValue dual_funk(const DiscPoint& x, const Covector& xi);

// g*^{ij} = (1 - <x, xi^>)(delta - xi^ xi^) + (xi^ - x)(xi^ - x), xi^ = xi/|xi|.
DualTensor dual_tensor(const DiscPoint& x, const Covector& xi);

// Funk gradient of a Funk Busemann function, g*(x, db) db.
TangentVector gradient(const BusemannField& field, const DiscPoint& x);

double volume_density(MeasureKind kind, const DiscPoint& x);

// Density of a two-dimensional Randers metric alpha + beta from its data:
// BH (1 - |b|^2)^{3/2} sqrt(det a), HT sqrt(det a), MAX (1 + |b|)^3 sqrt(det
// a), MIN (1 - |b|)^3 sqrt(det a).
double randers_volume_density(MeasureKind kind, double beta_norm,
                              double sqrt_det_a);

// Closed forms; Funk fields only.
double laplacian_busemann(MeasureKind kind, const BusemannField& field,
                          const DiscPoint& x);

// (1/sigma) d_i(sigma g*^{ij}(db) d_j b) by nested central differences of
// busemann_value and volume_density.
double laplacian_fd_oracle(MeasureKind kind, const BusemannField& field,
                           const DiscPoint& x);

// Mean curvature of a forward Funk sphere of radius r: -coth(r/2)/2 - 3/2.
double mean_curvature_sphere(double r);

}  // namespace funkdisc

#endif  // FUNKDISC_LAPLACE_H_
