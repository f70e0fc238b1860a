// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "plm/models.hpp"

using namespace plm;

namespace {

FrequencyGHz ghz(double f) { return FrequencyGHz(f); }
DistanceM m(double d) { return DistanceM(d); }

} // namespace

TEST(Fspl, ReferenceValues) {
  EXPECT_NEAR(fspl_1m(ghz(1.0)), 32.45, 0.01);
  EXPECT_NEAR(fspl_1m(ghz(28.0)), 61.39, 0.01);
  EXPECT_NEAR(fspl_1m(ghz(73.5)), 69.77, 0.01);
  // 20 log10(4 pi 28e9 / c) evaluated at extended precision.
  EXPECT_NEAR(fspl_1m(ghz(28.0)), 61.39094384872776, 1e-12);
}

TEST(Fspl, RejectsSubGigahertz) {
  EXPECT_THROW(FrequencyGHz(0.9), DomainError);
  EXPECT_THROW(DistanceM(0.5), DomainError);
  EXPECT_THROW(FrequencyGHz(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST(Fspl, FloatScalar) {
  EXPECT_NEAR(fspl_1m(Frequency<float>(28.0f)), 61.39f, 0.01f);
  EXPECT_NEAR(fspl_1m(Frequency<long double>(28.0L)), 61.39094384872776L, 1e-12L);
}

TEST(EvalFi, Examples) {
  EXPECT_NEAR(eval_fi(FiParamsd{2.5, 80.6}, m(100.0)), 130.6, 1e-9);
  EXPECT_DOUBLE_EQ(eval_fi(FiParamsd{7.3, 42.0}, m(1.0)), 42.0);
  EXPECT_DOUBLE_EQ(eval_fi(FiParamsd{0.0, 50.0}, m(1000.0)), 50.0);
}

TEST(EvalCi, Examples) {
  EXPECT_NEAR(eval_ci(CiParamsd{3.4}, ghz(28.0), m(100.0)), 129.39, 0.02);
  EXPECT_DOUBLE_EQ(eval_ci(CiParamsd{5.0}, ghz(28.0), m(1.0)), fspl_1m(ghz(28.0)));
  EXPECT_NEAR(eval_ci(CiParamsd{2.0}, ghz(28.0), m(10.0)), 81.39, 0.02);
}

TEST(EvalAbg, Examples) {
  EXPECT_NEAR(eval_abg(AbgParamsd{2.8, 46.7, 1.9}, ghz(28.0), m(100.0)), 130.20, 0.02);
  EXPECT_DOUBLE_EQ(eval_abg(AbgParamsd{2.8, 46.7, 1.9}, ghz(1.0), m(1.0)), 46.7);
  for (double f : {1.0, 28.0, 73.5, 100.0})
    for (double d : {1.0, 10.0, 250.0})
      EXPECT_NEAR(eval_abg(AbgParamsd{2.9, 32.45, 2.0}, ghz(f), m(d)), eval_ci(CiParamsd{2.9}, ghz(f), m(d)), 0.01);
}

TEST(EvalCif, Examples) {
  const CifParamsd p{3.0, 0.21, ghz(51.0)};
  EXPECT_NEAR(eval_cif(p, ghz(73.5), m(10.0)), 102.55, 0.05);
  EXPECT_DOUBLE_EQ(eval_cif(p, ghz(51.0), m(37.0)), eval_ci(CiParamsd{3.0}, ghz(51.0), m(37.0)));
  EXPECT_EQ(eval_cif(CifParamsd{3.0, 0.0, ghz(51.0)}, ghz(28.0), m(37.0)),
            eval_ci(CiParamsd{3.0}, ghz(28.0), m(37.0)));
}

TEST(ComputeF0, Examples) {
  const std::pair<FrequencyGHz, std::int64_t> equal[] = {{ghz(28.0), 5}, {ghz(73.5), 5}};
  EXPECT_EQ(compute_f0(equal).ghz(), 51.0);
  const std::pair<FrequencyGHz, std::int64_t> single[] = {{ghz(28.0), 7}};
  EXPECT_EQ(compute_f0(single).ghz(), 28.0);
  const std::pair<FrequencyGHz, std::int64_t> skewed[] = {{ghz(28.0), 3}, {ghz(73.5), 1}};
  EXPECT_EQ(compute_f0(skewed).ghz(), 39.0);
}

TEST(ComputeF0, HalfwayRoundsAwayFromZero) {
  const std::pair<FrequencyGHz, std::int64_t> half[] = {{ghz(28.0), 1}, {ghz(29.0), 1}};
  EXPECT_EQ(compute_f0(half).ghz(), 29.0);
}

TEST(ComputeF0, Errors) {
  EXPECT_THROW(compute_f0({}), DomainError);
  const std::pair<FrequencyGHz, std::int64_t> zero[] = {{ghz(28.0), 0}};
  EXPECT_THROW(compute_f0(zero), DomainError);
}

TEST(ModelVariant, DispatchAndAnchors) {
  const FrequencyGHz f = ghz(73.5);
  const Model models[] = {FiParamsd{2.9, 80.6}, CiParamsd{3.4}, AbgParamsd{2.8, 46.7, 1.9},
                          CifParamsd{3.0, 0.21, ghz(51.0)}};
  for (const auto& model : models) {
    EXPECT_DOUBLE_EQ(evaluate(model, f, m(1.0)), anchor_value(model, f)) << model_name(kind_of(model));
    // Ten times the distance adds 10 * slope dB.
    EXPECT_NEAR(evaluate(model, f, m(20.0)) - evaluate(model, f, m(2.0)), 10.0 * distance_slope(model, f), 1e-9);
  }
  EXPECT_EQ(model_from_token("abg"), ModelKind::abg);
  EXPECT_THROW(model_from_token("ab"), DomainError);
}

TEST(Vectorized, MatchesScalarPath) {
  Eigen::ArrayXd d(4);
  d << 1.0, 3.9, 45.9, 190.0;
  const auto ci = eval_ci(CiParamsd{2.9}, ghz(28.0), d);
  const auto cif = eval_cif(CifParamsd{3.0, 0.21, ghz(51.0)}, ghz(73.5), d);
  const auto abg = eval_abg(AbgParamsd{3.1, 1.3, 3.8}, ghz(73.5), d);
  const auto fi = eval_fi(FiParamsd{2.5, 80.6}, d);
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    EXPECT_NEAR(ci(i), eval_ci(CiParamsd{2.9}, ghz(28.0), m(d(i))), 1e-12);
    EXPECT_NEAR(cif(i), eval_cif(CifParamsd{3.0, 0.21, ghz(51.0)}, ghz(73.5), m(d(i))), 1e-12);
    EXPECT_NEAR(abg(i), eval_abg(AbgParamsd{3.1, 1.3, 3.8}, ghz(73.5), m(d(i))), 1e-12);
    EXPECT_NEAR(fi(i), eval_fi(FiParamsd{2.5, 80.6}, m(d(i))), 1e-12);
  }
  d(0) = 0.5;
  EXPECT_THROW(eval_ci(CiParamsd{2.0}, ghz(28.0), d), DomainError);
}

// Randomized invariants over the validity domain.
class ModelProperties : public ::testing::Test {
protected:
  std::mt19937_64 rng{20160410};
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
};

TEST_F(ModelProperties, AbgReducesToCiWithFreeSpaceParameters) {
  const double beta = abg_ci_equivalent_beta<double>();
  EXPECT_NEAR(beta, 32.44778322188338, 1e-12);
  for (int i = 0; i < 1000; ++i) {
    const double n = uniform(0.5, 5.0);
    const auto f = ghz(uniform(1.0, 100.0));
    const auto d = m(std::pow(10.0, uniform(0.0, 3.0)));
    EXPECT_LT(std::abs(eval_abg(AbgParamsd{n, beta, 2.0}, f, d) - eval_ci(CiParamsd{n}, f, d)), 1e-9);
  }
}

TEST_F(ModelProperties, CifWithZeroBIsBitIdenticalToCi) {
  for (int i = 0; i < 1000; ++i) {
    const double n = uniform(0.5, 5.0);
    const auto f = ghz(uniform(1.0, 100.0));
    const auto f0 = ghz(uniform(1.0, 100.0));
    const auto d = m(std::pow(10.0, uniform(0.0, 3.0)));
    EXPECT_EQ(eval_cif(CifParamsd{n, 0.0, f0}, f, d), eval_ci(CiParamsd{n}, f, d));
  }
}

TEST_F(ModelProperties, DecadeRule) {
  for (int i = 0; i < 500; ++i) {
    const double n = uniform(0.5, 5.0);
    const auto f = ghz(uniform(1.0, 100.0));
    const double d = std::pow(10.0, uniform(0.0, 3.0));
    EXPECT_NEAR(eval_ci(CiParamsd{n}, f, m(10.0 * d)) - eval_ci(CiParamsd{n}, f, m(d)), 10.0 * n, 1e-9);
  }
}

TEST_F(ModelProperties, StrictlyIncreasingForPositiveSlope) {
  for (int i = 0; i < 500; ++i) {
    const auto f = ghz(uniform(1.0, 100.0));
    const double d1 = std::pow(10.0, uniform(0.0, 3.0));
    const double d2 = d1 * (1.0 + uniform(0.01, 3.0));
    const Model models[] = {FiParamsd{uniform(0.1, 5.0), uniform(0.0, 100.0)}, CiParamsd{uniform(0.1, 5.0)},
                            AbgParamsd{uniform(0.1, 5.0), uniform(0.0, 100.0), uniform(-1.0, 4.0)},
                            CifParamsd{uniform(0.5, 5.0), uniform(-0.5, 0.5), ghz(uniform(20.0, 80.0))}};
    for (const auto& model : models) {
      ASSERT_GT(distance_slope(model, f), 0.0);
      EXPECT_LT(evaluate(model, f, m(d1)), evaluate(model, f, m(d2)));
    }
  }
}
