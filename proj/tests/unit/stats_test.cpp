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

#include "rqbench/stats.hpp"

namespace rqbench {
namespace {

TEST(Stats, MeanAndVariance) {
  const std::vector<double> xs{1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(mean(xs), 2.5);
  EXPECT_DOUBLE_EQ(sample_variance(xs), 5.0 / 3.0);
  EXPECT_EQ(sample_variance(std::vector<double>{7}), 0.0);
  EXPECT_THROW(mean(std::vector<double>{}), std::invalid_argument);
}

TEST(Stats, StudentInterval) {
  const std::vector<double> xs{1, 2, 3};
  const Interval ci = student_t_interval(xs, 0.90);
  // t_{0.95, 2} = 2.919985580...
  const double half = 2.9199855803537 / std::sqrt(3.0);
  EXPECT_DOUBLE_EQ(ci.mean, 2.0);
  EXPECT_NEAR(ci.low, 2.0 - half, 1e-9);
  EXPECT_NEAR(ci.high, 2.0 + half, 1e-9);
  const Interval one = student_t_interval(std::vector<double>{5}, 0.90);
  EXPECT_EQ(one.low, 5.0);
  EXPECT_EQ(one.high, 5.0);
}

TEST(Stats, QuantileInterpolates) {
  const std::vector<double> xs{4, 1, 3, 2};
  EXPECT_DOUBLE_EQ(quantile(xs, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(quantile(xs, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(quantile(xs, 1.0), 4.0);
  EXPECT_NEAR(quantile(xs, 0.99), 3.97, 1e-12);
}

TEST(Stats, OlsSlope) {
  const std::vector<double> x{0, 1, 2, 3};
  const std::vector<double> y{1, -1, -3, -5};
  EXPECT_DOUBLE_EQ(ols_slope(x, y), -2.0);
  EXPECT_THROW(ols_slope(std::vector<double>{1}, std::vector<double>{1}), std::invalid_argument);
}

}  // namespace
}  // namespace rqbench
