#include "funkdisc/verify.h"

#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "funkdisc/busemann.h"
#include "funkdisc/core_metrics.h"
#include "funkdisc/errors.h"
#include "funkdisc/finite_difference.h"
#include "funkdisc/geodesics.h"
#include "funkdisc/isometries.h"
#include "funkdisc/laplace.h"
#include "funkdisc/sampling.h"

namespace funkdisc {
namespace {

// Sample ranges: the metrics blow up like 1/(1 - |x|), so interior samples
// stay inside a fixed radius.
constexpr double kSampleRadius = 0.95;
constexpr double kFieldRadius = 0.9;
constexpr double kLaplacianRadius = 0.8;
constexpr double kLaplacianMinRadius = 0.05;
constexpr int kDualDirections = 100000;
constexpr double kResolvableResidual = 1e-11;

// Running maximum in which a NaN residual sticks.
class Check {
 public:
  Check(std::string name, double tolerance, std::uint64_t seed)
      : name_(std::move(name)), tolerance_(tolerance), seed_(seed) {}

  void add(double residual) {
    const double r = std::abs(residual);
    if (std::isnan(r) || std::isnan(max_) || r > max_) max_ = r;
  }
  // Evaluates one sample; a geometry error counts as an infinite residual.
  void run(const std::function<double()>& sample) {
    ++samples_;
    try {
      add(sample());
    } catch (const GeometryError&) {
      add(INFINITY);
    }
  }
  // A sample contributing several residuals.
  void run_many(const std::function<void(Check&)>& sample) {
    ++samples_;
    try {
      sample(*this);
    } catch (const GeometryError&) {
      add(INFINITY);
    }
  }

  VerificationReport report() const {
    return {name_, samples_, max_, tolerance_, max_ <= tolerance_, seed_};
  }

 private:
  std::string name_;
  double tolerance_;
  std::uint64_t seed_;
  int samples_ = 0;
  double max_ = 0.0;
};

void require_samples(int samples) {
  if (samples < 1) throw DomainError("verification needs samples >= 1");
}

ModelPoint source_point(ModelId model, const Vec2& disc) {
  const ModelPoint x = ModelPoint::make(ModelId::FF, disc);
  if (model == ModelId::FB) return apply(IsometryId::XI, x);
  return ModelPoint::make(model, disc);
}

// Residual relative to the size of the terms in the equation.
double relative_image_residual(ModelId model, const GeodesicClass& cls,
                               const Vec2& X) {
  double coef = 1.0;
  if (const auto* s = std::get_if<SlopeChord>(&cls.chord)) {
    coef += std::abs(s->m) + std::abs(s->c);
  }
  const double r = cls.residual(X);
  if (model == ModelId::FB) {
    const double e = std::exp(X.x1);
    return r / ((4.0 + e * e + 4.0 * e) * coef);
  }
  return r / ((1.0 + norm_sq(X)) * coef);
}

// Least-squares slope of ys against xs.
double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

BusemannField random_field(Sampler& rng, MetricKind metric) {
  return {metric, DiscPoint(rng.disc_point(kFieldRadius)),
          rng.boundary_point()};
}

}  // namespace

double dual_grid_oracle(const Vec2& x, const Vec2& xi, int directions) {
  const DiscPoint p(x);
  auto ratio = [&](double theta) {
    const Vec2 v{std::cos(theta), std::sin(theta)};
    return dot(xi, v) / eval_funk(p, TangentVector::from(v)).total;
  };
  const double step = 2.0 * std::numbers::pi / directions;
  int best = 0;
  double best_value = -INFINITY;
  for (int i = 0; i < directions; ++i) {
    const double r = ratio(i * step);
    if (r > best_value) {
      best_value = r;
      best = i;
    }
  }
  // Parabola through the best grid point and its neighbours.
  const double t = best * step;
  const double lo = ratio(t - step);
  const double hi = ratio(t + step);
  const double curv = lo - 2.0 * best_value + hi;
  if (curv >= 0.0) return best_value;
  const double offset = 0.5 * (lo - hi) / curv;
  return std::max(best_value, ratio(t + offset * step));
}

std::vector<VerificationReport> verify_isometries(int samples,
                                                  std::uint64_t seed) {
  require_samples(samples);
  std::vector<VerificationReport> out;
  for (IsometryId id : kAllIsometries) {
    Sampler rng(seed);
    Check pull("isometries.pullback." + std::string(to_string(id)), 1e-10,
               seed);
    Check round("isometries.roundtrip." + std::string(to_string(id)), 1e-10,
                seed);
    Check jac("isometries.differential_fd." + std::string(to_string(id)),
              1e-6, seed);
    const ModelId source = signature(id).source;
    for (int i = 0; i < samples; ++i) {
      const Vec2 disc = rng.disc_point(kSampleRadius);
      const Vec2 v = rng.uniform(0.1, 2.0) * rng.unit_vector();
      pull.run([&] {
        return pullback_residual(id, source_point(source, disc), v);
      });
      round.run([&] {
        const ModelPoint x = source_point(source, disc);
        const ModelPoint back = apply_inverse(id, apply(id, x));
        return norm(back.planar() - x.planar()) / (1.0 + norm(x.planar()));
      });
      jac.run([&] {
        const ModelPoint x = source_point(source, disc);
        const Differential a = differential(id, x);
        const Differential b = differential_fd(id, x);
        double worst = 0.0, scale = 1.0;
        for (int r = 0; r < a.rows; ++r) {
          for (int c = 0; c < 2; ++c) {
            worst = std::max(worst, std::abs(a.m[r][c] - b.m[r][c]));
            scale = std::max(scale, std::abs(a.m[r][c]));
          }
        }
        return worst / scale;
      });
    }
    out.push_back(pull.report());
    out.push_back(round.report());
    out.push_back(jac.report());
  }
  Sampler rng(seed);
  Check composed("isometries.composed_ff_fb_via_fu", 1e-9, seed);
  for (int i = 0; i < samples; ++i) {
    const Vec2 disc = rng.disc_point(kSampleRadius);
    composed.run([&] {
      const ModelPoint x = ModelPoint::make(ModelId::FF, disc);
      const ModelPoint direct = apply(IsometryId::XI, x);
      const ModelPoint via =
          apply_inverse(IsometryId::PHI, apply(IsometryId::G_MAP, x));
      return norm(direct.planar() - via.planar()) /
             (1.0 + norm(direct.planar()));
    });
  }
  out.push_back(composed.report());
  return out;
}

std::vector<VerificationReport> verify_geodesics(int samples,
                                                 std::uint64_t seed) {
  require_samples(samples);
  constexpr int kTimes = 20;
  std::vector<double> funk_times, hilbert_times;
  for (int k = 0; k < kTimes; ++k) {
    funk_times.push_back(0.5 * k);
    hilbert_times.push_back(0.5 * k - 4.75);
  }
  Sampler rng(seed);
  Check funk_speed("geodesics.funk.unit_speed", 1e-12, seed);
  Check hilbert_speed("geodesics.hilbert.unit_speed", 1e-12, seed);
  Check funk_add("geodesics.funk.additivity", 1e-10, seed);
  Check hilbert_add("geodesics.hilbert.additivity", 1e-10, seed);
  Check images("geodesics.model_images", 1e-9, seed);
  for (int i = 0; i < samples; ++i) {
    const DiscPoint p(rng.disc_point(kFieldRadius));
    const BoundaryPoint y = rng.boundary_point();
    const FunkRay ray(p, y);
    const HilbertLine line(p, y);
    funk_speed.run_many([&](Check& c) {
      for (double t : funk_times) {
        c.add(eval_funk(funk_geodesic(ray, t), funk_velocity(ray, t)).total -
              1.0);
      }
    });
    hilbert_speed.run_many([&](Check& c) {
      for (double t : hilbert_times) {
        c.add(eval_hilbert(hilbert_geodesic(line, t), hilbert_velocity(line, t))
                  .total -
              1.0);
      }
    });
    funk_add.run_many([&](Check& c) {
      for (int a = 0; a < kTimes; a += 3) {
        for (int b = a + 1; b < kTimes; b += 4) {
          const double s = funk_times[a], t = funk_times[b];
          c.add(funk_distance(funk_geodesic(ray, s), funk_geodesic(ray, t)) -
                (t - s));
        }
      }
    });
    hilbert_add.run_many([&](Check& c) {
      for (int a = 0; a < kTimes; a += 3) {
        for (int b = a + 1; b < kTimes; b += 4) {
          const double s = hilbert_times[a], t = hilbert_times[b];
          c.add(hilbert_distance(hilbert_geodesic(line, s),
                                 hilbert_geodesic(line, t)) -
                (t - s));
        }
      }
    });
    images.run_many([&](Check& c) {
      const Chord chord = chord_through(p, y);
      const std::pair<ModelId, IsometryId> maps[] = {
          {ModelId::FU, IsometryId::G_MAP},
          {ModelId::FP, IsometryId::F_MAP},
          {ModelId::FB, IsometryId::XI}};
      for (const auto& [model, iso] : maps) {
        const GeodesicClass cls = classify_image(model, chord);
        for (int k = 0; k < 10; ++k) {
          const ModelPoint X = apply(
              iso, ModelPoint::from_disc(ModelId::FF,
                                         funk_geodesic(ray, 0.5 * k)));
          c.add(relative_image_residual(model, cls, X.planar()));
        }
      }
    });
  }
  Check reference("geodesics.reference_distances", 1e-12, seed);
  reference.run_many([](Check& c) {
    const DiscPoint o(0.0, 0.0), x(0.5, 0.0);
    c.add(funk_distance(o, x) - std::log(2.0));
    c.add(hilbert_distance(o, x) - 0.5 * std::log(3.0));
  });
  return {funk_speed.report(), hilbert_speed.report(), funk_add.report(),
          hilbert_add.report(), images.report(), reference.report()};
}

std::vector<VerificationReport> verify_busemann(int samples,
                                                std::uint64_t seed) {
  require_samples(samples);
  Sampler rng(seed);
  Check trunc("busemann.truncation_t20", 1e-6, seed);
  Check slope("busemann.funk_decay_slope", 0.05, seed);
  Check along("busemann.along_ray", 1e-12, seed);
  Check lipschitz("busemann.funk_lipschitz", 1e-12, seed);
  Check level("busemann.horocycle_level", 1e-10, seed);
  Check perp("busemann.funk_chord_perpendicular", 1e-12, seed);
  Check grad("busemann.gradient_fd", 1e-7, seed);
  for (int i = 0; i < samples; ++i) {
    const BusemannField funk = random_field(rng, MetricKind::FUNK);
    const BusemannField hilbert{MetricKind::HILBERT, funk.p, funk.y};
    const DiscPoint x(rng.disc_point(kFieldRadius));
    const DiscPoint x2(rng.disc_point(kFieldRadius));
    const double ta = rng.uniform(0.0, 10.0);
    const double funk_a =
        std::log(0.5 * boundary_gap(funk.p, funk.y)) + rng.uniform(0.2, 5.0);
    const double hilbert_a = rng.uniform(-3.0, 3.0);
    trunc.run_many([&](Check& c) {
      for (const BusemannField& f : {funk, hilbert}) {
        c.add(busemann_truncated(f, x, 20.0) - busemann_value(f, x));
      }
    });
    {
      // Fit only residuals well above the rounding floor of the closed form;
      // when x lies almost on the chord of the ray the e^{-t} coefficient is
      // tiny and the tail of [5, 20] is noise.
      std::vector<double> ts, logs;
      const double b = busemann_value(funk, x);
      for (int t = 5; t <= 20; ++t) {
        const double r = std::abs(b - busemann_truncated(funk, x, t));
        if (r < kResolvableResidual) break;
        ts.push_back(t);
        logs.push_back(std::log(r));
      }
      if (ts.size() >= 3) slope.run([&] { return fit_slope(ts, logs) + 1.0; });
    }
    along.run_many([&](Check& c) {
      c.add(busemann_value(funk, funk_geodesic(FunkRay(funk.p, funk.y), ta)) -
            ta);
      c.add(busemann_value(hilbert, hilbert_geodesic(
                                        HilbertLine(funk.p, funk.y), 0.5 * ta)) -
            0.5 * ta);
    });
    lipschitz.run([&] {
      const double excess = busemann_value(funk, x2) - busemann_value(funk, x) -
                            funk_distance(x, x2);
      return std::max(0.0, excess);
    });
    level.run_many([&](Check& c) {
      for (const auto& [f, a] : {std::pair{funk, funk_a}, {hilbert, hilbert_a}}) {
        for (const DiscPoint& q : horocycle_points(HorocycleLevel(f, a), 32)) {
          c.add(busemann_value(f, q) - a);
        }
      }
    });
    perp.run([&] {
      const auto pts = horocycle_points(HorocycleLevel(funk, funk_a), 8);
      const Vec2 d = pts.back().vec() - pts.front().vec();
      return dot(d / norm(d), funk.y.vec());
    });
    grad.run([&] {
      const Vec2 fd = fd::gradient(
          [&](const Vec2& z) { return busemann_value(funk, DiscPoint(z)); },
          x.vec());
      const Vec2 exact = busemann_gradient_covector(funk, x).vec();
      return norm(fd - exact) / std::max(1.0, norm(exact));
    });
  }
  return {trunc.report(), slope.report(), along.report(), lipschitz.report(),
          level.report(), perp.report(),  grad.report()};
}

std::vector<VerificationReport> verify_laplacian(int samples,
                                                 std::uint64_t seed) {
  require_samples(samples);
  Sampler rng(seed);
  Check closed("laplacian.bh_closed_form", 0.0, seed);
  Check fd_bh("laplacian.bh_fd_oracle", 1e-4, seed);
  Check corrections("laplacian.corrections", 2e-4, seed);
  Check dual("laplacian.dual_grid_oracle", 1e-6, seed);
  Check distance("laplacian.distance_function", 1e-10, seed);
  for (int i = 0; i < samples; ++i) {
    const BusemannField field = random_field(rng, MetricKind::FUNK);
    const DiscPoint x(
        rng.annulus_point(kLaplacianMinRadius, kLaplacianRadius));
    const Vec2 xi = rng.uniform(0.1, 3.0) * rng.unit_vector();
    closed.run([&] { return laplacian_busemann(MeasureKind::BH, field, x) + 2.0; });
    double bh_fd = NAN;
    fd_bh.run([&] {
      bh_fd = laplacian_fd_oracle(MeasureKind::BH, field, x);
      return bh_fd + 2.0;
    });
    corrections.run_many([&](Check& c) {
      const double bh_closed = laplacian_busemann(MeasureKind::BH, field, x);
      for (MeasureKind k : {MeasureKind::HT, MeasureKind::MAX, MeasureKind::MIN}) {
        const double fd_diff = laplacian_fd_oracle(k, field, x) - bh_fd;
        const double closed_diff = laplacian_busemann(k, field, x) - bh_closed;
        c.add(fd_diff - closed_diff);
      }
    });
    dual.run([&] {
      return dual_funk(x, Covector::from(xi)).total -
             dual_grid_oracle(x.vec(), xi, kDualDirections);
    });
    distance.run_many([&](Check& c) {
      c.add(dual_funk(x, busemann_gradient_covector(field, x)).total - 1.0);
      c.add(eval_funk(x, gradient(field, x)).total - 1.0);
    });
  }
  Check reference("laplacian.reference_point", 1e-4, seed);
  reference.run_many([](Check& c) {
    const BusemannField f{MetricKind::FUNK, DiscPoint(0.0, 0.0),
                          BoundaryPoint(1.0, 0.0)};
    const DiscPoint x(0.5, 0.0);
    c.add(laplacian_fd_oracle(MeasureKind::HT, f, x) + 1.0);
    c.add(laplacian_fd_oracle(MeasureKind::MAX, f, x));
    c.add(laplacian_fd_oracle(MeasureKind::MIN, f, x) + 4.0);
  });
  Check limit("laplacian.mean_curvature_limit", 1e-12, seed);
  limit.run([] { return mean_curvature_sphere(100.0) + 2.0; });
  return {closed.report(),    fd_bh.report(),     corrections.report(),
          dual.report(),      distance.report(),  reference.report(),
          limit.report()};
}

std::vector<VerificationReport> run_verification(std::string_view suite,
                                                 int samples,
                                                 std::uint64_t seed) {
  if (suite == "isometries") return verify_isometries(samples, seed);
  if (suite == "geodesics") return verify_geodesics(samples, seed);
  if (suite == "busemann") return verify_busemann(samples, seed);
  if (suite == "laplacian") return verify_laplacian(samples, seed);
  if (suite == "all") {
    std::vector<VerificationReport> out;
    for (auto fn : {verify_isometries, verify_geodesics, verify_busemann,
                    verify_laplacian}) {
      auto part = fn(samples, seed);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw DomainError("unknown verification suite '" + std::string(suite) + "'");
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace funkdisc
