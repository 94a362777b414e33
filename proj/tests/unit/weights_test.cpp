// Copyright 2026 The rqbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "rqbench/weights.hpp"

namespace rqbench {
namespace {

// E[W^i] from independence: E[w_i] prod_{k>i} (1 - E[w_k]) with
// E[w_k] = (H+1) / (H + n0 + k - 1 + 1).
double expected_weight_oracle(int i, int m, double H, double n0) {
  auto mean_rate = [&](int k) { return (H + 1.0) / (H + 1.0 + n0 + k - 1.0); };
  double v = i == 0 ? 1.0 : mean_rate(i);
  for (int k = i + 1; k <= m; ++k) v *= 1.0 - mean_rate(k);
  return v;
}

TEST(AggregatedWeights, SumToOne) {
  RandomStream stream(1);
  for (const double H : {1.0, 3.0, 10.0}) {
    for (const double kappa : {0.5, 1.0, 2.0}) {
      for (const double n0 : {0.01, 1.0, 5.0}) {
        for (const int m : {1, 20, 200}) {
          for (int rep = 0; rep < 20; ++rep) {
            const auto s = sample_aggregated(m, {H, kappa, n0, false}, stream);
            ASSERT_EQ(s.weights.size(), static_cast<std::size_t>(m) + 1);
            ASSERT_NEAR(s.sum(), 1.0, 1e-9);
            for (const double w : s.weights) ASSERT_GE(w, 0.0);
          }
        }
      }
    }
  }
}

TEST(AggregatedWeights, SingleRateBaseCase) {
  RandomStream a(3), b(3);
  const WeightParams p{3.0, 1.0, 1.0, false};
  for (int rep = 0; rep < 50; ++rep) {
    const auto s = sample_aggregated(1, p, a);
    const double w = beta_sample({4.0, 1.0}, b);
    EXPECT_DOUBLE_EQ(s.weights[1], w);
    EXPECT_DOUBLE_EQ(s.weights[0], 1.0 - w);
  }
}

TEST(AggregatedWeights, StagedUsesUnitFirstShape) {
  RandomStream a(9), b(9);
  const WeightParams p{3.0, 2.0, 1.0, true};
  const auto s = sample_aggregated(2, p, a);
  const double w1 = beta_sample({0.5, 0.5}, b);
  const double w2 = beta_sample({0.5, 1.0}, b);
  EXPECT_DOUBLE_EQ(s.weights[2], w2);
  EXPECT_DOUBLE_EQ(s.weights[1], w1 * (1 - w2));
}

TEST(AggregatedWeights, RejectsBadParams) {
  RandomStream s(1);
  EXPECT_THROW(sample_aggregated(0, {}, s), std::invalid_argument);
  EXPECT_THROW(sample_aggregated(3, {0.0, 1.0, 1.0, false}, s), std::invalid_argument);
  EXPECT_THROW(sample_aggregated(3, {1.0, 0.0, 1.0, false}, s), std::invalid_argument);
  EXPECT_THROW(sample_aggregated(3, {1.0, 1.0, 0.0, false}, s), std::invalid_argument);
}

TEST(AlphaTable, MatchesIndependentOracle) {
  for (const double H : {1.0, 3.0, 10.0}) {
    for (const double n0 : {0.01, 1.0, 5.0}) {
      for (const int m : {1, 7, 50}) {
        const AlphaTable t = alpha_table(m, H, n0);
        double sum = 0.0;
        for (int i = 0; i <= m; ++i) {
          const double oracle = expected_weight_oracle(i, m, H, n0);
          EXPECT_NEAR(t.alpha[i], oracle, 1e-13 * std::max(1.0, oracle)) << H << " " << n0 << " " << m;
          EXPECT_NEAR(moment_closed_form(i, m, 1, H, 1.0, n0), t.alpha[i], 1e-12 * t.alpha[i] + 1e-300);
          EXPECT_NEAR(moment_closed_form(i, m, 1, H, 0.37, n0), t.alpha[i], 1e-12 * t.alpha[i] + 1e-300);
          sum += t.alpha[i];
        }
        EXPECT_NEAR(sum, 1.0, 1e-12);
        EXPECT_NEAR(t.alpha[m], (H + 1) / (H + n0 + m), 1e-15);
      }
    }
  }
}

TEST(AlphaTable, EmptyAndErrors) {
  EXPECT_EQ(alpha_table(0, 2.0, 1.0).alpha, std::vector<double>{1.0});
  EXPECT_THROW(alpha_table(-1, 2.0, 1.0), std::invalid_argument);
  EXPECT_THROW(moment_closed_form(5, 4, 1, 1, 1, 1), std::invalid_argument);
  EXPECT_THROW(moment_closed_form(1, 4, 0, 1, 1, 1), std::invalid_argument);
}

TEST(LogPochhammer, SmallCases) {
  EXPECT_DOUBLE_EQ(log_pochhammer(2.5, 0), 0.0);
  EXPECT_NEAR(log_pochhammer(2.5, 1), std::log(2.5), 1e-14);
  EXPECT_NEAR(log_pochhammer(2.5, 3), std::log(2.5 * 3.5 * 4.5), 1e-13);
}

TEST(WeightMoments, SecondMomentOracle) {
  // E[w^2] = a(a+1)/((a+b)(a+b+1)), E[(1-w)^2] likewise with a, b swapped.
  const double H = 3, kappa = 1, n0 = 1;
  const int m = 5, i = 2;
  auto shapes = [&](int k) { return std::pair{(H + 1) / kappa, (n0 + k - 1) / kappa}; };
  auto [a, b] = shapes(i);
  double expected = a * (a + 1) / ((a + b) * (a + b + 1));
  for (int k = i + 1; k <= m; ++k) {
    auto [ak, bk] = shapes(k);
    expected *= bk * (bk + 1) / ((ak + bk) * (ak + bk + 1));
  }
  EXPECT_NEAR(moment_closed_form(i, m, 2, H, kappa, n0), expected, 1e-14);
}

TEST(WeightMoments, MonteCarloMatchesAlphaTable) {
  const int m = 10;
  const auto est = estimate_moments(m, {3.0, 1.0, 1.0, false}, 200000, RandomStream(11));
  const AlphaTable t = alpha_table(m, 3.0, 1.0);
  for (int i = 0; i <= m; ++i) {
    EXPECT_NEAR(est.mean[i], t.alpha[i], 0.03 * t.alpha[i]) << "i=" << i;
  }
  EXPECT_LE(est.max_sum_error, 1e-12);
}

TEST(WeightMoments, MonteCarloSecondMoment) {
  const auto est = estimate_moments(5, {3.0, 1.0, 1.0, false}, 500000, RandomStream(12));
  const double closed = moment_closed_form(2, 5, 2, 3.0, 1.0, 1.0);
  EXPECT_NEAR(est.second[2], closed, 0.05 * closed);
}

TEST(WeightMoments, GridWithinFiveStandardErrors) {
  int index = 0;
  for (const double H : {1.0, 3.0, 5.0}) {
    for (const double kappa : {0.5, 1.0, 2.0}) {
      for (const double n0 : {0.01, 1.0, 5.0}) {
        for (const int m : {1, 5, 20}) {
          const auto est =
              estimate_moments(m, {H, kappa, n0, false}, 400000, RandomStream(100 + index++));
          for (int i = 0; i <= m; ++i) {
            const double m1 = moment_closed_form(i, m, 1, H, kappa, n0);
            const double m2 = moment_closed_form(i, m, 2, H, kappa, n0);
            EXPECT_LE(std::fabs(est.mean[i] - m1), 5 * est.mean_stderr[i] + 1e-12)
                << H << " " << kappa << " " << n0 << " " << m << " i=" << i;
            EXPECT_LE(std::fabs(est.second[i] - m2), 5 * est.second_stderr[i] + 1e-12)
                << H << " " << kappa << " " << n0 << " " << m << " i=" << i;
          }
        }
      }
    }
  }
}

TEST(WeightMoments, IndependentOfThreadCount) {
  const WeightParams p{3.0, 1.0, 0.5, false};
  const auto one = estimate_moments(8, p, 5000, RandomStream(4), 1);
  const auto many = estimate_moments(8, p, 5000, RandomStream(4), 7);
  EXPECT_EQ(one.mean, many.mean);
  EXPECT_EQ(one.second, many.second);
}

const BoundCheck& find_check(const BoundsReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("missing check " + name);
}

TEST(Bounds, ModerateConfigurationPasses) {
  const BoundsReport r = verify_bounds(50, 5.0, 1.0, 1.0);
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.value << " " << c.bound;
  EXPECT_TRUE(r.all_pass());
}

TEST(Bounds, SingleRateAttainsExpectationBound) {
  const BoundsReport r = verify_bounds(1, 3.0, 1.0, 1.0);
  const auto& c = find_check(r, "max_expectation");
  EXPECT_NEAR(c.value, c.bound, 1e-15);
  EXPECT_TRUE(c.pass);
}

TEST(Bounds, TailLimitForUnitHorizon) {
  const BoundsReport r = verify_bounds(10, 1.0, 1.0, 1.0);
  EXPECT_DOUBLE_EQ(find_check(r, "tail_monotone").bound, 2.0);
}

TEST(Bounds, NonTailChecksHoldOnGrid) {
  for (const double H : {1.0, 3.0, 10.0}) {
    for (const double kappa : {0.5, 1.0, 2.0}) {
      for (const double n0 : {0.01, 1.0, 5.0}) {
        for (const int m : {1, 20, 200}) {
          const BoundsReport r = verify_bounds(m, H, kappa, n0);
          for (const char* name : {"max_expectation", "variance_sum", "tail_monotone", "tail_bounded"}) {
            const auto& c = find_check(r, name);
            EXPECT_TRUE(c.pass) << name << " H=" << H << " kappa=" << kappa << " n0=" << n0
                                << " m=" << m << " value=" << c.value << " bound=" << c.bound;
          }
        }
      }
    }
  }
}

TEST(Concentration, ZeroLambdaVanishes) {
  const std::vector<int> ms{4, 8};
  const auto t = concentration_sweep(3, 1, 1, ms, 2000, LambdaMode::kZero, RandomStream(1));
  for (const auto& row : t.rows) EXPECT_EQ(row.percentile, 0.0);
  EXPECT_FALSE(t.pass);
}

TEST(Concentration, OnesLambdaIsNumericalNoise) {
  const std::vector<int> ms{4, 8};
  const auto t = concentration_sweep(3, 1, 1, ms, 2000, LambdaMode::kOnes, RandomStream(1));
  for (const auto& row : t.rows) EXPECT_LE(row.percentile, 1e-12);
}

TEST(Concentration, RandomSignsShrink) {
  const std::vector<int> ms{8, 16, 32, 64, 128};
  const auto t =
      concentration_sweep(3, 1, 1, ms, 20000, LambdaMode::kRandomSigns, RandomStream(2));
  ASSERT_EQ(t.rows.size(), ms.size());
  EXPECT_TRUE(t.strictly_decreasing);
  EXPECT_LE(t.slope, -0.4);
  EXPECT_TRUE(t.pass);
  EXPECT_DOUBLE_EQ(t.rows[0].scale, 3 + 1 + 8);
}

}  // namespace
}  // namespace rqbench
