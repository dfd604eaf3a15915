#ifndef FUNKDISC_VERIFY_H_
#define FUNKDISC_VERIFY_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "funkdisc/vec.h"

namespace funkdisc {

// One property check over `samples` random inputs. passed iff
// max_residual <= tolerance (a NaN residual fails).
struct VerificationReport {
  std::string suite;
  int samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::uint64_t seed = 0;
};

inline constexpr std::array<std::string_view, 5> kSuiteNames = {
    "isometries", "geodesics", "busemann", "laplacian", "all"};

// Each suite draws from its own generator seeded with `seed`, so a suite
// gives the same reports alone and inside "all". samples >= 1.
std::vector<VerificationReport> verify_isometries(int samples,
                                                  std::uint64_t seed);
std::vector<VerificationReport> verify_geodesics(int samples,
                                                 std::uint64_t seed);
std::vector<VerificationReport> verify_busemann(int samples,
                                                std::uint64_t seed);
// Includes the dual metric checks.
std::vector<VerificationReport> verify_laplacian(int samples,
                                                 std::uint64_t seed);

// Throws DomainError for an unknown suite name.
std::vector<VerificationReport> run_verification(std::string_view suite,
                                                 int samples,
                                                 std::uint64_t seed);

bool all_passed(const std::vector<VerificationReport>& reports);

// sup of <xi, v> over the Funk indicatrix at x, by scanning `directions`
// equally spaced unit directions.
double dual_grid_oracle(const Vec2& x, const Vec2& xi, int directions);

}  // namespace funkdisc

#endif  // FUNKDISC_VERIFY_H_
