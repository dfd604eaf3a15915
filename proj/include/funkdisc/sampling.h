#ifndef FUNKDISC_SAMPLING_H_
#define FUNKDISC_SAMPLING_H_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "funkdisc/types.h"

namespace funkdisc {

// Seeded mt19937_64; doubles take the top 53 bits so sequences agree across
// standard libraries (std::uniform_real_distribution does not).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  // [0, 1)
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double angle() { return uniform(0.0, 2.0 * std::numbers::pi); }
  Vec2 unit_vector() {
    const double t = angle();
    return {std::cos(t), std::sin(t)};
  }
  // Area-uniform in the disc of the given radius.
  Vec2 disc_point(double max_radius) {
    return max_radius * std::sqrt(uniform()) * unit_vector();
  }
  // Area-uniform in the annulus min_radius <= |x| <= max_radius.
  Vec2 annulus_point(double min_radius, double max_radius) {
    const double r2 =
        uniform(min_radius * min_radius, max_radius * max_radius);
    return std::sqrt(r2) * unit_vector();
  }
  BoundaryPoint boundary_point() { return BoundaryPoint::at_angle(angle()); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace funkdisc

#endif  // FUNKDISC_SAMPLING_H_
