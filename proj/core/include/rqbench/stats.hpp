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

#ifndef RQBENCH_STATS_HPP_
#define RQBENCH_STATS_HPP_

#include <span>
#include <vector>

namespace rqbench {

struct Interval {
  double mean;
  double low;
  double high;
};

double mean(std::span<const double> xs);
/// Unbiased sample variance; 0 for fewer than two values.
double sample_variance(std::span<const double> xs);

/// Two-sided Student-t interval for the mean at the given confidence.
/// A single value gives a zero-width interval.
Interval student_t_interval(std::span<const double> xs, double confidence = 0.90);

/// Empirical quantile with linear interpolation between order statistics
/// (type 7). Sorts a copy.
double quantile(std::vector<double> xs, double p);

/// Least-squares slope of y on x.
double ols_slope(std::span<const double> x, std::span<const double> y);

}  // namespace rqbench

#endif  // RQBENCH_STATS_HPP_
