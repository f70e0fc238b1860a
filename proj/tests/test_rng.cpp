// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "plm/errors.hpp"
#include "plm/rng.hpp"

using namespace plm;

TEST(InverseNormalCdf, MatchesReferenceQuantiles) {
  // Reference quantiles from scipy.special.ndtri.
  struct Case {
    double p, z;
  };
  const Case cases[] = {
      {1e-20, -9.262340089798409},    {1e-10, -6.361340902404056},  {0.001, -3.090232306167813},
      {0.02425, -1.972961051311885},  {0.1, -1.2815515655446004},   {0.3, -0.5244005127080409},
      {0.5, 0.0},                     {0.7, 0.5244005127080407},    {0.975, 1.959963984540054},
      {0.999999, 4.753424308817087},  {1 - 1e-12, 7.0344869100478356},
  };
  for (const auto& c : cases)
    EXPECT_NEAR(inverse_normal_cdf(c.p), c.z, 1e-13 * std::max(1.0, std::abs(c.z)) + 1e-9 * (c.p < 1e-9))
        << "p = " << c.p;
  EXPECT_NEAR(inverse_normal_cdf(1e-300), -37.0470962993612, 1e-9);
}

TEST(InverseNormalCdf, RejectsClosedEndpoints) {
  EXPECT_THROW(inverse_normal_cdf(0.0), DomainError);
  EXPECT_THROW(inverse_normal_cdf(1.0), DomainError);
}

TEST(CounterRng, DrawsDependOnlyOnSeedAndCounter) {
  const CounterRng a(42), b(42), c(43);
  for (std::uint64_t k : {0ull, 1ull, 999ull, 1ull << 40}) {
    EXPECT_EQ(a.bits(k), b.bits(k));
    EXPECT_NE(a.bits(k), c.bits(k));
  }
  // SplitMix64 from state 0: first output.
  EXPECT_EQ(CounterRng(0).bits(0), 0xE220A8397B1DCDAFULL);
}

TEST(CounterRng, UniformAndNormalMoments) {
  const CounterRng rng(7);
  const int n = 200000;
  double su = 0.0, sz = 0.0, szz = 0.0;
  for (int k = 0; k < n; ++k) {
    const double u = rng.uniform(k);
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    su += u;
    const double z = rng.normal(k + n);
    sz += z;
    szz += z * z;
  }
  EXPECT_NEAR(su / n, 0.5, 0.005);
  EXPECT_NEAR(sz / n, 0.0, 0.01);
  EXPECT_NEAR(szz / n, 1.0, 0.02);
}
