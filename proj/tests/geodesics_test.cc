#include "funkdisc/geodesics.h"

#include <gtest/gtest.h>

#include <cmath>

#include "funkdisc/core_metrics.h"
#include "funkdisc/errors.h"
#include "funkdisc/isometries.h"
#include "funkdisc/sampling.h"
#include "oracles.h"

namespace funkdisc {
namespace {

TEST(ForwardHitTest, Examples) {
  const BoundaryPoint a = forward_hit(DiscPoint(0, 0), {1, 0});
  EXPECT_NEAR(a.y1(), 1.0, 1e-15);
  const BoundaryPoint b = forward_hit(DiscPoint(0.5, 0), {-1, 0});
  EXPECT_NEAR(b.y1(), -1.0, 1e-15);
  EXPECT_NEAR(b.y2(), 0.0, 1e-15);
  const BoundaryPoint c = forward_hit(DiscPoint(0, 0.5), {1, 0});
  EXPECT_NEAR(c.y1(), std::sqrt(0.75), 1e-15);
  EXPECT_NEAR(c.y2(), 0.5, 1e-15);
  EXPECT_THROW(forward_hit(DiscPoint(0, 0), {0, 0}), ZeroVectorError);
}

TEST(ForwardHitTest, MatchesBisection) {
  Sampler rng(41);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 x = rng.disc_point(0.95);
    const Vec2 v = rng.unit_vector();
    const BoundaryPoint a = forward_hit(DiscPoint(x), TangentVector::from(v));
    const Vec2 b = oracle::boundary_hit(x, v);
    EXPECT_LT(norm(a.vec() - b), 1e-12);
  }
}

TEST(DistanceTest, Examples) {
  const DiscPoint o(0, 0), h(0.5, 0);
  EXPECT_NEAR(funk_distance(o, h), std::log(2.0), 1e-15);
  EXPECT_NEAR(funk_distance(h, o), std::log(1.5), 1e-15);
  EXPECT_EQ(funk_distance(h, h), 0.0);
  EXPECT_NEAR(hilbert_distance(o, h), 0.5 * std::log(3.0), 1e-15);
  EXPECT_NEAR(hilbert_distance(o, DiscPoint(std::tanh(1.0), 0)), 1.0, 1e-15);
}

TEST(DistanceTest, MatchesCrossRatioOracle) {
  Sampler rng(42);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 x = rng.disc_point(0.9), z = rng.disc_point(0.9);
    const double df = funk_distance(DiscPoint(x), DiscPoint(z));
    const double dh = hilbert_distance(DiscPoint(x), DiscPoint(z));
    EXPECT_NEAR(df, oracle::funk_distance(x, z), 1e-10 * std::max(1.0, df));
    EXPECT_NEAR(dh, oracle::hilbert_distance(x, z), 1e-10 * std::max(1.0, dh));
  }
}

TEST(DistanceTest, HilbertSymmetricAndFunkTriangle) {
  Sampler rng(43);
  for (int i = 0; i < 1000; ++i) {
    const DiscPoint x(rng.disc_point(0.95)), w(rng.disc_point(0.95)),
        z(rng.disc_point(0.95));
    EXPECT_NEAR(hilbert_distance(x, z), hilbert_distance(z, x), 1e-12);
    EXPECT_LE(funk_distance(x, z),
              funk_distance(x, w) + funk_distance(w, z) + 1e-12);
    EXPECT_GE(funk_distance(x, z), 0.0);
  }
}

TEST(LambdaRootsTest, Example) {
  const ChordRoots r = lambda_roots(DiscPoint(0, 0), DiscPoint(0.5, 0));
  EXPECT_NEAR(r.lambda1, -1.0, 1e-15);
  EXPECT_NEAR(r.lambda2, 3.0, 1e-15);
  EXPECT_THROW(lambda_roots(DiscPoint(0.1, 0.1), DiscPoint(0.1, 0.1)),
               DegenerateError);
}

TEST(LambdaRootsTest, SignsAndResiduals) {
  Sampler rng(44);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 x = rng.disc_point(0.95), z = rng.disc_point(0.95);
    const ChordRoots r = lambda_roots(DiscPoint(x), DiscPoint(z));
    EXPECT_LT(r.lambda1, 0.0);
    EXPECT_GT(r.lambda2, 1.0);
    for (double l : {r.lambda1, r.lambda2}) {
      const Vec2 p = z + l * (x - z);
      EXPECT_NEAR(norm_sq(p), 1.0, 1e-12);
    }
  }
}

TEST(FunkGeodesicTest, Examples) {
  const FunkRay ray(DiscPoint(0, 0), BoundaryPoint(1, 0));
  const DiscPoint x = funk_geodesic(ray, std::log(2.0));
  EXPECT_NEAR(x.x1(), 0.5, 1e-15);
  EXPECT_NEAR(x.x2(), 0.0, 1e-15);
  const FunkRay r2(DiscPoint(0.3, -0.4), BoundaryPoint::at_angle(2.0));
  const DiscPoint start = funk_geodesic(r2, 0.0);
  EXPECT_EQ(start.x1(), 0.3);
  EXPECT_EQ(start.x2(), -0.4);
  EXPECT_THROW(funk_geodesic(ray, -1.0), DomainError);
}

TEST(FunkGeodesicTest, FromVelocityHitsForward) {
  const FunkRay r = FunkRay::from_velocity(DiscPoint(0.5, 0), {-1, 0});
  EXPECT_NEAR(r.y().y1(), -1.0, 1e-15);
}

TEST(FunkGeodesicTest, UnitSpeedAndAdditivity) {
  Sampler rng(45);
  for (int i = 0; i < 100; ++i) {
    const FunkRay ray(DiscPoint(rng.disc_point(0.9)), rng.boundary_point());
    for (int k = 0; k <= 20; ++k) {
      const double t = 0.5 * k;
      const double speed =
          eval_funk(funk_geodesic(ray, t), funk_velocity(ray, t)).total;
      EXPECT_NEAR(speed, 1.0, 1e-12) << "t=" << t;
      for (int j = 0; j < k; j += 3) {
        const double s = 0.5 * j;
        EXPECT_NEAR(funk_distance(funk_geodesic(ray, s), funk_geodesic(ray, t)),
                    t - s, 1e-10);
      }
    }
  }
}

TEST(FunkGeodesicTest, VelocityMatchesFiniteDifference) {
  const FunkRay ray(DiscPoint(0.2, 0.1), BoundaryPoint::at_angle(-1.0));
  const double h = 1e-6;
  for (double t : {0.5, 2.0, 5.0}) {
    const Vec2 fd = (funk_geodesic(ray, t + h).vec() -
                     funk_geodesic(ray, t - h).vec()) / (2.0 * h);
    EXPECT_LT(norm(fd - funk_velocity(ray, t).vec()), 1e-8);
  }
}

TEST(HilbertGeodesicTest, Examples) {
  const HilbertLine line(DiscPoint(0, 0), BoundaryPoint(1, 0));
  EXPECT_DOUBLE_EQ(line.k(), 1.0);
  EXPECT_NEAR(hilbert_parameter(line, 0.7), std::tanh(0.7), 1e-15);
  const DiscPoint b1 = hilbert_geodesic(line, 1.0);
  EXPECT_NEAR(b1.x1(), std::tanh(1.0), 1e-15);
  EXPECT_NEAR(b1.x1(), 0.761594, 1e-6);
  EXPECT_NEAR(hilbert_distance(hilbert_geodesic(line, 0),
                               hilbert_geodesic(line, 2)),
              2.0, 1e-10);
  const HilbertLine l2(DiscPoint(-0.3, 0.6), BoundaryPoint::at_angle(0.4));
  EXPECT_EQ(hilbert_geodesic(l2, 0.0).x1(), -0.3);
  EXPECT_EQ(hilbert_geodesic(l2, 0.0).x2(), 0.6);
}

TEST(HilbertGeodesicTest, UnitSpeedAndAdditivityBothDirections) {
  Sampler rng(46);
  for (int i = 0; i < 100; ++i) {
    const HilbertLine line(DiscPoint(rng.disc_point(0.9)),
                           rng.boundary_point());
    for (int k = -10; k <= 10; ++k) {
      const double t = 0.5 * k;
      const double speed =
          eval_hilbert(hilbert_geodesic(line, t), hilbert_velocity(line, t))
              .total;
      EXPECT_NEAR(speed, 1.0, 1e-12) << "t=" << t;
      for (int j = -10; j < k; j += 4) {
        const double s = 0.5 * j;
        EXPECT_NEAR(hilbert_distance(hilbert_geodesic(line, s),
                                     hilbert_geodesic(line, t)),
                    t - s, 1e-10);
      }
    }
  }
}

TEST(HilbertKTest, ReversalRatio) {
  Sampler rng(47);
  for (int i = 0; i < 1000; ++i) {
    const DiscPoint p(rng.disc_point(0.95));
    const TangentVector v = TangentVector::from(rng.unit_vector());
    const BoundaryPoint y = forward_hit(p, v);
    const double f = eval_funk(p, v).total;
    EXPECT_NEAR(eval_funk(p, -v).total, hilbert_k(p, y) * f, 1e-12 * f);
  }
}

TEST(SampleTimesTest, Grid) {
  const auto ts = sample_times(0.0, 1.0, 5);
  ASSERT_EQ(ts.size(), 5u);
  EXPECT_EQ(ts.front(), 0.0);
  EXPECT_EQ(ts.back(), 1.0);
  EXPECT_EQ(ts[2], 0.5);
  EXPECT_EQ(sample_times(0.0, 2.0).size(), 256u);
  EXPECT_THROW(sample_times(0.0, 1.0, 1), DomainError);
}

TEST(ClassifyTest, Examples) {
  const GeodesicClass v = classify_image(ModelId::FU, SlopeChord{0.25, 0.25});
  EXPECT_EQ(v.kind, GeodesicKind::VERTICAL_RAY);
  EXPECT_NEAR(v.abscissa, 0.5, 1e-15);

  const GeodesicClass o = classify_image(ModelId::FP, VerticalChord{0.5});
  EXPECT_EQ(o.kind, GeodesicKind::ORTHO_ARC);
  EXPECT_NEAR(o.center.x1, 2.0, 1e-15);
  EXPECT_NEAR(o.center.x2, 0.0, 1e-15);
  EXPECT_NEAR(o.radius_sq, 3.0, 1e-15);
  EXPECT_NEAR(norm_sq(o.center), 1.0 + o.radius_sq, 1e-15);

  const GeodesicClass c = classify_image(ModelId::FU, VerticalChord{0.0});
  EXPECT_EQ(c.kind, GeodesicKind::CONCENTRIC_SEMICIRCLE);
  EXPECT_NEAR(c.radius_sq, 4.0, 1e-15);

  EXPECT_EQ(classify_image(ModelId::FP, SlopeChord{2.0, 0.0}).kind,
            GeodesicKind::DIAMETER);
  EXPECT_EQ(classify_image(ModelId::FB, VerticalChord{0.3}).kind,
            GeodesicKind::BAND_VERTICAL);
  EXPECT_EQ(classify_image(ModelId::FB, SlopeChord{0.3, 0.1}).kind,
            GeodesicKind::BAND_IMPLICIT);
  EXPECT_THROW(classify_image(ModelId::FU, SlopeChord{0.0, 2.0}),
               NoIntersectionError);
  EXPECT_THROW(classify_image(ModelId::FF, SlopeChord{0.0, 0.0}),
               UnsupportedModel);
}

TEST(ClassifyTest, PoincareCirclesAreOrthogonal) {
  Sampler rng(48);
  for (int i = 0; i < 500; ++i) {
    const DiscPoint p(rng.disc_point(0.9));
    const Chord ch = chord_through(p, rng.boundary_point());
    const GeodesicClass g = classify_image(ModelId::FP, ch);
    if (g.kind != GeodesicKind::ORTHO_ARC) continue;
    EXPECT_NEAR(norm_sq(g.center), 1.0 + g.radius_sq,
                1e-12 * (1.0 + g.radius_sq));
  }
}

// Images of sampled ray points lie on the classified curve.
TEST(ClassifyTest, ImagesOfRaysLieOnClassifiedCurves) {
  Sampler rng(49);
  const std::pair<ModelId, IsometryId> maps[] = {
      {ModelId::FU, IsometryId::G_MAP},
      {ModelId::FP, IsometryId::F_MAP},
      {ModelId::FB, IsometryId::XI}};
  for (int i = 0; i < 300; ++i) {
    const DiscPoint p(rng.disc_point(0.9));
    const BoundaryPoint y = rng.boundary_point();
    const FunkRay ray(p, y);
    const Chord ch = chord_through(p, y);
    for (const auto& [model, iso] : maps) {
      const GeodesicClass g = classify_image(model, ch);
      for (int k = 0; k < 8; ++k) {
        const ModelPoint X = apply(
            iso, ModelPoint::from_disc(ModelId::FF, funk_geodesic(ray, 0.5 * k)));
        const Vec2 Xp = X.planar();
        double scale = 1.0 + norm_sq(Xp);
        if (model == ModelId::FB) scale = 4.0 + std::exp(2.0 * Xp.x1);
        if (const auto* s = std::get_if<SlopeChord>(&ch)) {
          scale *= 1.0 + std::abs(s->m) + std::abs(s->c);
        }
        EXPECT_LT(std::abs(g.residual(Xp)), 1e-12 * scale)
            << to_string(model) << " " << to_string(g.kind);
      }
    }
  }
}

TEST(BandResidualTest, Examples) {
  // Chord x2 = 0.2 through 50 points.
  for (int i = 1; i <= 50; ++i) {
    const double x1 = -0.97 + 1.94 * i / 51.0;
    const ModelPoint X =
        apply(IsometryId::XI, ModelPoint::make(ModelId::FF, Vec2{x1, 0.2}));
    const BandResidual r = band_implicit_residual(0.0, 0.2, X);
    EXPECT_LT(r.value, 1e-10);
    EXPECT_EQ(r.branch, -1);
  }
  const ModelPoint X0 =
      apply(IsometryId::XI, ModelPoint::make(ModelId::FF, Vec2{0.4, 0.0}));
  EXPECT_EQ(band_implicit_residual(0.0, 0.0, X0).value, 0.0);
  EXPECT_THROW(band_implicit_residual(0, 0, ModelPoint::make(ModelId::FF, Vec2{0, 0})),
               DomainError);
}

TEST(BandResidualTest, RandomChords) {
  Sampler rng(50);
  for (int i = 0; i < 200; ++i) {
    const double m = rng.uniform(-3.0, 3.0);
    const double c = rng.uniform(-0.9, 0.9);
    // Chord x2 = m x1 + c meets the circle at x1 in (lo, hi).
    const double a = 1.0 + m * m;
    const double root = std::sqrt(a - c * c);
    const double lo = (-m * c - root) / a, hi = (-m * c + root) / a;
    for (int k = 1; k <= 20; ++k) {
      const double x1 = lo + (hi - lo) * k / 21.0;
      const Vec2 x{x1, m * x1 + c};
      if (one_minus_norm_sq(x) < 1e-6) continue;
      const ModelPoint X =
          apply(IsometryId::XI, ModelPoint::make(ModelId::FF, x));
      EXPECT_LT(band_implicit_residual(m, c, X).value, 1e-9);
    }
  }
}

TEST(ChordTest, ThroughAndResidual) {
  const Chord v = chord_through(DiscPoint(0.3, 0.1), BoundaryPoint(0.3, std::sqrt(0.91)));
  ASSERT_TRUE(std::holds_alternative<VerticalChord>(v));
  EXPECT_NEAR(std::get<VerticalChord>(v).k, 0.3, 1e-15);
  const Chord s = chord_through(DiscPoint(0, 0.2), BoundaryPoint(1, 0));
  ASSERT_TRUE(std::holds_alternative<SlopeChord>(s));
  EXPECT_NEAR(std::get<SlopeChord>(s).m, -0.2, 1e-15);
  EXPECT_NEAR(std::get<SlopeChord>(s).c, 0.2, 1e-15);
  EXPECT_NEAR(chord_residual(s, {0.5, 0.1}), 0.0, 1e-15);
}

}  // namespace
}  // namespace funkdisc
