#ifndef FUNKDISC_CORE_METRICS_H_
#define FUNKDISC_CORE_METRICS_H_

#include "funkdisc/types.h"

namespace funkdisc {

// Funk metric on the unit disc, F = alpha + beta with alpha the Klein
// metric and beta = <x,v>/(1-|x|^2).
RandersValue eval_funk(const DiscPoint& x, const TangentVector& v);

// Hilbert (Klein) metric: the arithmetic symmetrization of eval_funk.
// Reported with beta = 0.
RandersValue eval_hilbert(const DiscPoint& x, const TangentVector& v);

// Deformed Lorentzian metric F_L on the upper half space. Not positive
// definite; throws DomainError for timelike vectors (alpha undefined).
RandersValue eval_lorentz_randers(const Vec3& x, const Vec3& v);

// Deformed hyperbolic metric F_+ on the upper half space. Not positive
// definite: the total is zero or negative for vertical vectors.
RandersValue eval_halfspace_randers(const Vec3& x, const Vec3& v);

// Evaluates the metric carried by `p.model` on a vector given in that
// chart's coordinates (third entry ignored for planar models).
//   FF Funk, FP Finsler-Poincare, FU upper half plane, FB band, HD Hilbert,
//   FUH1/FUH2 -> F_L restricted to the hyperboloid sheet,
//   FUS1/FUS2 -> F_+ restricted to the hemisphere,
//   AMBIENT   -> F_+ on the half space.
// Surface models throw TangencyError when v is not tangent.
RandersValue eval_model(const ModelPoint& p, const Coords& v);

// The Riemannian part a_ij and the 1-form coefficients b_i of a planar
// Randers model at a point.
struct RandersData {
  SymmetricTensor2 a;
  Vec2 b;
};
RandersData randers_data(const ModelPoint& p);

// Potential f with beta = df (FF, FP, FU, FB). Other models throw
// UnsupportedModel.
double potential(const ModelPoint& p);

// ||beta||_alpha from the closed forms (FF |x|, FP 2|x|/(1+|x|^2),
// FU |w|/(4+|x|^2), FB from e^{2x1} and cos x2; 0 for HD).
double one_form_norm(const ModelPoint& p);
// sqrt(a^{ij} b_i b_j) from randers_data().
double one_form_norm_from_tensor(const ModelPoint& p);

// g_ij = 1/2 d^2(F^2)/dv^i dv^j by Richardson-refined central differences.
// Planar models only; v must be nonzero.
FundamentalTensor fundamental_tensor(const ModelPoint& p, const Vec2& v);

// w(x) = (2 x1 x2, x2^2 - x1^2 - 4), the numerator vector of beta_U.
Vec2 upper_half_plane_w(const Vec2& x);

}  // namespace funkdisc

#endif  // FUNKDISC_CORE_METRICS_H_
