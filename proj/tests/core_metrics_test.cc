#include "funkdisc/core_metrics.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "funkdisc/errors.h"
#include "funkdisc/isometries.h"
#include "funkdisc/sampling.h"
#include "oracles.h"

namespace funkdisc {
namespace {

TangentVector tv(double a, double b) { return {a, b}; }

TEST(DiscPointTest, RejectsBoundaryAndNonFinite) {
  EXPECT_THROW(DiscPoint(1.0, 0.0), DomainError);
  EXPECT_THROW(DiscPoint(0.6, 0.8), DomainError);
  EXPECT_THROW(DiscPoint(std::sqrt(1.0 - 5e-10), 0.0), DomainError);
  EXPECT_THROW(DiscPoint(NAN, 0.0), DomainError);
  EXPECT_NO_THROW(DiscPoint(std::sqrt(1.0 - 1e-8), 0.0));
}

TEST(DiscPointTest, DefectIsCompensated) {
  const DiscPoint x(0.6, 0.7999999);
  EXPECT_NEAR(x.defect(), 1.0 - (0.36 + 0.7999999 * 0.7999999), 1e-16);
  EXPECT_THROW(DiscPoint::with_defect({0.5, 0.0}, 0.5), DomainError);
}

TEST(ModelPointTest, ChartChecks) {
  EXPECT_THROW(ModelPoint::make(ModelId::FU, Vec2{0.0, -1.0}), DomainError);
  EXPECT_THROW(ModelPoint::make(ModelId::FB, Vec2{0.0, 1.6}), DomainError);
  EXPECT_THROW(ModelPoint::make(ModelId::FUH1, Coords{0.0, 0.0, 1.1}),
               DomainError);
  EXPECT_NO_THROW(ModelPoint::make(ModelId::FUH1, Coords{0.0, 0.0, 1.0}));
  EXPECT_THROW(ModelPoint::make(ModelId::FUS1, Coords{0.0, 0.0, -1.0}),
               DomainError);
  EXPECT_THROW(ModelPoint::make(ModelId::AMBIENT, Coords{0.0, 0.0, 0.0}),
               DomainError);
}

TEST(EvalFunkTest, Examples) {
  EXPECT_DOUBLE_EQ(eval_funk(DiscPoint(0, 0), tv(1, 0)).total, 1.0);
  const RandersValue f = eval_funk(DiscPoint(0.5, 0), tv(1, 0));
  EXPECT_NEAR(f.alpha, 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(f.beta, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(f.total, 2.0, 1e-15);
  const RandersValue b = eval_funk(DiscPoint(0.5, 0), tv(-1, 0));
  EXPECT_NEAR(b.alpha, 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(b.beta, -2.0 / 3.0, 1e-15);
  EXPECT_NEAR(b.total, 2.0 / 3.0, 1e-15);
  EXPECT_EQ(eval_funk(DiscPoint(0.3, 0.1), tv(0, 0)).total, 0.0);
}

TEST(EvalFunkTest, MatchesBoundaryHitOracle) {
  Sampler rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 x = rng.disc_point(0.95);
    const Vec2 v = rng.uniform(0.1, 3.0) * rng.unit_vector();
    const double f = eval_funk(DiscPoint(x), TangentVector::from(v)).total;
    const Vec2 a = oracle::boundary_hit(x, v);
    EXPECT_NEAR(f * norm(x - a), norm(v), 1e-12 * norm(v));
  }
}

TEST(EvalHilbertTest, Examples) {
  EXPECT_DOUBLE_EQ(eval_hilbert(DiscPoint(0, 0), tv(1, 0)).total, 1.0);
  const RandersValue h = eval_hilbert(DiscPoint(0.5, 0), tv(1, 0));
  EXPECT_NEAR(h.total, 4.0 / 3.0, 1e-15);
  EXPECT_EQ(h.beta, 0.0);
}

TEST(EvalHilbertTest, ReversibleSymmetrization) {
  Sampler rng(12);
  for (int i = 0; i < 1000; ++i) {
    const DiscPoint x(rng.disc_point(0.95));
    const TangentVector v = TangentVector::from(rng.unit_vector());
    const double h = eval_hilbert(x, v).total;
    EXPECT_EQ(h, eval_hilbert(x, -v).total);
    EXPECT_NEAR(2.0 * h, eval_funk(x, v).total + eval_funk(x, -v).total,
                1e-14 * h);
  }
}

TEST(EvalModelTest, Examples) {
  EXPECT_NEAR(
      eval_model(ModelPoint::make(ModelId::FP, Vec2{0, 0}), {0, 1, 0}).total,
      2.0, 1e-15);
  const RandersValue u =
      eval_model(ModelPoint::make(ModelId::FU, Vec2{0, 2}), {1, 0, 0});
  EXPECT_NEAR(u.alpha, 0.5, 1e-15);
  EXPECT_NEAR(u.beta, 0.0, 1e-15);
  EXPECT_NEAR(u.total, 0.5, 1e-15);
  const RandersValue b = eval_model(
      ModelPoint::make(ModelId::FB, Vec2{std::numbers::ln2, 0}), {1, 0, 0});
  EXPECT_NEAR(b.alpha, 1.0, 1e-15);
  EXPECT_NEAR(b.beta, 0.0, 1e-15);
  EXPECT_NEAR(b.total, 1.0, 1e-15);
}

TEST(EvalModelTest, UpperHalfPlaneOneForm) {
  // beta_U = <w, v>/(x2 (4 + |x|^2)), w = (2 x1 x2, x2^2 - x1^2 - 4)
  const ModelPoint p = ModelPoint::make(ModelId::FU, Vec2{1.0, 3.0});
  const RandersValue r = eval_model(p, {0.5, -2.0, 0.0});
  const double w1 = 2.0 * 1.0 * 3.0, w2 = 9.0 - 1.0 - 4.0;
  EXPECT_NEAR(r.beta, (w1 * 0.5 + w2 * -2.0) / (3.0 * 14.0), 1e-15);
  EXPECT_NEAR(r.alpha, std::hypot(0.5, 2.0) / 3.0, 1e-15);
}

TEST(EvalModelTest, SurfaceTangency) {
  const ModelPoint h = ModelPoint::make(ModelId::FUH1, Coords{0, 0, 1});
  EXPECT_THROW(eval_model(h, {0, 0, 1}), TangencyError);
  EXPECT_NO_THROW(eval_model(h, {1, 0, 0}));
  const ModelPoint s = ModelPoint::make(ModelId::FUS1, Coords{0, 0, 1});
  EXPECT_THROW(eval_model(s, {0, 0.1, 1}), TangencyError);
}

TEST(EvalModelTest, LorentzRandersRejectsTimelike) {
  EXPECT_THROW(eval_lorentz_randers({0, 0, 1}, {0, 0, 1}), DomainError);
  const RandersValue r = eval_lorentz_randers({0, 0, 2}, {3, 4, 0});
  EXPECT_DOUBLE_EQ(r.alpha, 5.0);
  EXPECT_DOUBLE_EQ(r.beta, 0.0);
}

TEST(EvalModelTest, HalfSpaceMayBeNegative) {
  const RandersValue r = eval_halfspace_randers({0, 0, 1}, {0, 0, 1});
  EXPECT_DOUBLE_EQ(r.total, 0.0);
  EXPECT_LT(eval_halfspace_randers({0, 0, 1}, {0.1, 0, 1}).beta, 0.0);
}

ModelPoint sample_point(Sampler& rng, ModelId model) {
  const Vec2 x = rng.disc_point(0.9);
  switch (model) {
    case ModelId::FU:
      return apply(IsometryId::G_MAP, ModelPoint::make(ModelId::FF, x));
    case ModelId::FB:
      return apply(IsometryId::XI, ModelPoint::make(ModelId::FF, x));
    default:
      return ModelPoint::make(model, x);
  }
}

class PlanarModelTest : public ::testing::TestWithParam<ModelId> {};

TEST_P(PlanarModelTest, Homogeneity) {
  Sampler rng(21);
  for (int i = 0; i < 300; ++i) {
    const ModelPoint p = sample_point(rng, GetParam());
    const Vec2 v = rng.unit_vector();
    const double lambda = rng.uniform(0.01, 50.0);
    const double f = eval_model(p, {v.x1, v.x2, 0}).total;
    const double g = eval_model(p, {lambda * v.x1, lambda * v.x2, 0}).total;
    EXPECT_NEAR(g, lambda * f, 1e-12 * lambda * std::abs(f));
  }
}

TEST_P(PlanarModelTest, OneFormNormBelowOne) {
  Sampler rng(22);
  for (int i = 0; i < 300; ++i) {
    const ModelPoint p = sample_point(rng, GetParam());
    const double n = one_form_norm(p);
    EXPECT_LT(n, 1.0);
    EXPECT_NEAR(n, one_form_norm_from_tensor(p), 1e-12);
  }
}

TEST_P(PlanarModelTest, FundamentalTensorPositiveDefinite) {
  Sampler rng(23);
  for (int i = 0; i < 300; ++i) {
    const ModelPoint p = sample_point(rng, GetParam());
    const Vec2 v = rng.uniform(0.1, 2.0) * rng.unit_vector();
    const FundamentalTensor g = fundamental_tensor(p, v);
    EXPECT_TRUE(g.is_positive_definite());
    // g(v, v) = F^2
    const double f = eval_model(p, {v.x1, v.x2, 0}).total;
    EXPECT_NEAR(dot(v, g.apply(v)), f * f, 1e-6 * f * f);
  }
}

TEST_P(PlanarModelTest, PotentialGradientIsOneForm) {
  Sampler rng(24);
  const ModelId model = GetParam();
  for (int i = 0; i < 200; ++i) {
    const ModelPoint p = sample_point(rng, model);
    const Vec2 grad = oracle::gradient(
        [&](const Vec2& z) { return potential(ModelPoint::make(model, z)); },
        p.planar(), 1e-5);
    const Vec2 b = randers_data(p).b;
    EXPECT_NEAR(grad.x1, b.x1, 1e-6 * std::max(1.0, norm(b)));
    EXPECT_NEAR(grad.x2, b.x2, 1e-6 * std::max(1.0, norm(b)));
  }
}

INSTANTIATE_TEST_SUITE_P(Models, PlanarModelTest,
                         ::testing::Values(ModelId::FF, ModelId::FP,
                                           ModelId::FU, ModelId::FB),
                         [](const auto& info) {
                           return std::string(to_string(info.param));
                         });

TEST(PotentialTest, Examples) {
  EXPECT_EQ(potential(ModelPoint::make(ModelId::FF, Vec2{0, 0})), 0.0);
  EXPECT_EQ(potential(ModelPoint::make(ModelId::FP, Vec2{0, 0})), 0.0);
  const Vec2 g = oracle::gradient(
      [](const Vec2& z) { return potential(ModelPoint::make(ModelId::FF, z)); },
      {0.5, 0.0}, 1e-5);
  EXPECT_NEAR(g.x1, 2.0 / 3.0, 1e-9);
  EXPECT_NEAR(g.x2, 0.0, 1e-9);
  EXPECT_THROW(potential(ModelPoint::make(ModelId::HD, Vec2{0, 0})),
               UnsupportedModel);
  EXPECT_THROW(potential(ModelPoint::make(ModelId::FUH1, Coords{0, 0, 1})),
               UnsupportedModel);
}

TEST(OneFormNormTest, Examples) {
  EXPECT_EQ(one_form_norm(ModelPoint::make(ModelId::FF, Vec2{0, 0})), 0.0);
  EXPECT_NEAR(one_form_norm(ModelPoint::make(ModelId::FF, Vec2{0.5, 0})), 0.5,
              1e-15);
  EXPECT_NEAR(one_form_norm(ModelPoint::make(ModelId::FP, Vec2{0.5, 0})), 0.8,
              1e-15);
}

TEST(OneFormNormTest, UpperHalfPlaneNormIsFirstPower) {
  // a^{ij} b_i b_j = |w|^2/(4 + |x|^2)^2, so the norm is |w|/(4 + |x|^2).
  const ModelPoint p = ModelPoint::make(ModelId::FU, Vec2{1.0, 3.0});
  const double w = std::hypot(6.0, 4.0);
  EXPECT_NEAR(one_form_norm(p), w / 14.0, 1e-15);
  EXPECT_NEAR(one_form_norm_from_tensor(p), w / 14.0, 1e-15);
}

TEST(FundamentalTensorTest, IdentityAtOrigin) {
  for (ModelId m : {ModelId::FF, ModelId::HD}) {
    const FundamentalTensor g =
        fundamental_tensor(ModelPoint::make(m, Vec2{0, 0}), {1, 0});
    EXPECT_NEAR(g.g11, 1.0, 1e-6);
    EXPECT_NEAR(g.g12, 0.0, 1e-6);
    EXPECT_NEAR(g.g22, 1.0, 1e-6);
  }
  EXPECT_THROW(fundamental_tensor(ModelPoint::make(ModelId::FF, Vec2{0, 0}),
                                  {0, 0}),
               ZeroVectorError);
}

TEST(FundamentalTensorTest, MatchesIndependentHessian) {
  Sampler rng(25);
  for (int i = 0; i < 200; ++i) {
    const ModelPoint p = ModelPoint::make(ModelId::FF, rng.disc_point(0.9));
    const Vec2 v = rng.unit_vector();
    const FundamentalTensor g = fundamental_tensor(p, v);
    const oracle::Sym2 h = oracle::hessian(
        [&](const Vec2& w) {
          const double f = oracle::funk_metric(p.planar(), w);
          return 0.5 * f * f;
        },
        v, 1e-4);
    const double scale = std::max(1.0, g.trace());
    EXPECT_NEAR(g.g11, h.h11, 1e-5 * scale);
    EXPECT_NEAR(g.g12, h.h12, 1e-5 * scale);
    EXPECT_NEAR(g.g22, h.h22, 1e-5 * scale);
  }
}

}  // namespace
}  // namespace funkdisc
