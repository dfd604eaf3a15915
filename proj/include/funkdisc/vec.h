#ifndef FUNKDISC_VEC_H_
#define FUNKDISC_VEC_H_

#include <cmath>

namespace funkdisc {

struct Vec2 {
  double x1 = 0.0;
  double x2 = 0.0;

  constexpr Vec2& operator+=(const Vec2& o) {
    x1 += o.x1;
    x2 += o.x2;
    return *this;
  }
  constexpr Vec2& operator-=(const Vec2& o) {
    x1 -= o.x1;
    x2 -= o.x2;
    return *this;
  }
  constexpr Vec2& operator*=(double s) {
    x1 *= s;
    x2 *= s;
    return *this;
  }
};

constexpr Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
constexpr Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
constexpr Vec2 operator-(const Vec2& a) { return {-a.x1, -a.x2}; }
constexpr Vec2 operator*(double s, Vec2 a) { return a *= s; }
constexpr Vec2 operator*(Vec2 a, double s) { return a *= s; }
constexpr Vec2 operator/(Vec2 a, double s) { return {a.x1 / s, a.x2 / s}; }

constexpr double dot(const Vec2& a, const Vec2& b) {
  return a.x1 * b.x1 + a.x2 * b.x2;
}
inline double norm(const Vec2& a) { return std::hypot(a.x1, a.x2); }
constexpr double norm_sq(const Vec2& a) { return dot(a, a); }
inline bool is_finite(const Vec2& a) {
  return std::isfinite(a.x1) && std::isfinite(a.x2);
}

struct Vec3 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
};

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline bool is_finite(const Vec3& a) {
  return std::isfinite(a.x1) && std::isfinite(a.x2) && std::isfinite(a.x3);
}

// 1 - |x|^2 with exact products and compensated summation. Inside the disc
// near its boundary the naive expression loses most of its digits.
inline double one_minus_norm_sq(const Vec2& x) {
  const double p1 = x.x1 * x.x1;
  const double e1 = std::fma(x.x1, x.x1, -p1);
  const double p2 = x.x2 * x.x2;
  const double e2 = std::fma(x.x2, x.x2, -p2);
  auto two_sum = [](double a, double b, double& err) {
    const double s = a + b;
    const double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
  };
  double r1 = 0.0;
  double r2 = 0.0;
  const double s1 = two_sum(1.0, -p1, r1);
  const double s2 = two_sum(s1, -p2, r2);
  return s2 + ((r1 + r2) - (e1 + e2));
}

}  // namespace funkdisc

#endif  // FUNKDISC_VEC_H_
