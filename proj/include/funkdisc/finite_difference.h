#ifndef FUNKDISC_FINITE_DIFFERENCE_H_
#define FUNKDISC_FINITE_DIFFERENCE_H_

#include "funkdisc/types.h"
#include "funkdisc/vec.h"

namespace funkdisc::fd {

// Step for first derivatives (central differences).
inline constexpr double kStep = 1e-5;
// Base step for second derivatives. Central second differences at 1e-5
// carry ~eps/h^2 ~ 1e-6 rounding, so Hessians start larger and are
// Richardson-refined from h and h/2.
inline constexpr double kHessianStep = 1e-3;

template <class F>
double derivative(F&& f, double x, double h = kStep) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

template <class F>
Vec2 gradient(F&& f, const Vec2& x, double h = kStep) {
  return {(f(Vec2{x.x1 + h, x.x2}) - f(Vec2{x.x1 - h, x.x2})) / (2.0 * h),
          (f(Vec2{x.x1, x.x2 + h}) - f(Vec2{x.x1, x.x2 - h})) / (2.0 * h)};
}

namespace detail {

template <class F>
SymmetricTensor2 hessian_once(F& f, const Vec2& x, double h) {
  const double f0 = f(x);
  const double fpp = f(Vec2{x.x1 + h, x.x2});
  const double fmp = f(Vec2{x.x1 - h, x.x2});
  const double fpq = f(Vec2{x.x1, x.x2 + h});
  const double fmq = f(Vec2{x.x1, x.x2 - h});
  const double f_pp = f(Vec2{x.x1 + h, x.x2 + h});
  const double f_pm = f(Vec2{x.x1 + h, x.x2 - h});
  const double f_mp = f(Vec2{x.x1 - h, x.x2 + h});
  const double f_mm = f(Vec2{x.x1 - h, x.x2 - h});
  const double h2 = h * h;
  return {(fpp - 2.0 * f0 + fmp) / h2,
          (f_pp - f_pm - f_mp + f_mm) / (4.0 * h2),
          (fpq - 2.0 * f0 + fmq) / h2};
}

}  // namespace detail

// Central-difference Hessian with one Richardson refinement.
template <class F>
SymmetricTensor2 hessian(F&& f, const Vec2& x, double h = kHessianStep) {
  const SymmetricTensor2 coarse = detail::hessian_once(f, x, h);
  const SymmetricTensor2 fine = detail::hessian_once(f, x, 0.5 * h);
  return {(4.0 * fine.g11 - coarse.g11) / 3.0,
          (4.0 * fine.g12 - coarse.g12) / 3.0,
          (4.0 * fine.g22 - coarse.g22) / 3.0};
}

}  // namespace funkdisc::fd

#endif  // FUNKDISC_FINITE_DIFFERENCE_H_
