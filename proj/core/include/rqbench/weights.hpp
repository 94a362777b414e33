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

#ifndef RQBENCH_WEIGHTS_HPP_
#define RQBENCH_WEIGHTS_HPP_

#include <span>
#include <string>
#include <vector>

#include "rqbench/random.hpp"

namespace rqbench {

// Aggregated learning-rate weights.
//
// After m updates x <- (1 - w_k) x + w_k y_k, k = 0..m-1, the value is
// sum_i W^i y_{i-1} plus W^0 times the initial value, with
//
//   W^0 = prod_{k=0}^{m-1} (1 - w_k),   W^i = w_{i-1} prod_{k=i}^{m-1} (1 - w_k).
//
// Rates are w_k ~ Beta((H+1)/kappa, (k+n0)/kappa), or Beta(1/kappa,
// (k+n0)/kappa) for the staged variant.

struct WeightParams {
  double horizon = 1.0;
  double kappa = 1.0;
  double prior_count = 1.0;
  bool staged = false;

  void validate() const;
};

struct AggregatedWeightSample {
  int m = 0;
  /// weights[i] is W^i for i in [0, m].
  std::vector<double> weights;
  WeightParams params;

  [[nodiscard]] double sum() const;
};

AggregatedWeightSample sample_aggregated(int m, const WeightParams& params, RandomStream& stream);

/// Closed-form expectations alpha^i = E[W^i] of the non-staged weights:
///   alpha^0 = prod_{k=1}^m (n0+k-1)/(H+n0+k)
///   alpha^i = (H+1)/(H+n0+i) prod_{k=i+1}^m (n0+k-1)/(H+n0+k)
struct AlphaTable {
  int m = 0;
  double horizon = 1.0;
  double prior_count = 1.0;
  std::vector<double> alpha;
};

AlphaTable alpha_table(int m, double horizon, double prior_count);

/// log of the rising factorial (x)_d = x (x+1) ... (x+d-1).
double log_pochhammer(double x, int d);

/// E[(W^i)^d] for the non-staged weights, evaluated as a sum of log-gamma
/// differences. For i >= 1 this is the product over j = i+1..m of
/// ((n0+j-1)/kappa)_d / ((H+n0+j)/kappa)_d times
/// ((H+1)/kappa)_d / ((H+n0+i)/kappa)_d. W^0 carries no rate factor, so for
/// i = 0 the trailing ratio is dropped.
double moment_closed_form(int i, int m, int d, double horizon, double kappa, double prior_count);

struct BoundCheck {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double bound = 0.0;
};

struct BoundsReport {
  int m = 0;
  WeightParams params;
  std::vector<BoundCheck> checks;

  [[nodiscard]] bool all_pass() const;
};

/// Closed-form checks for the weights after m updates:
///  - max_expectation:   max_{i>=1} E[W^i] <= (H+1)/(H+n0+m)
///  - variance_sum:      sum_{i>=1} Var[W^i] <= (H+1) kappa/(H+n0+m)
///  - tail_monotone:     partial sums sum_{t=i}^{T} E[W_t^i] increase in T
///  - tail_bounded:      every partial sum is at most 1 + 1/H
///  - tail_limit:        at T = i + 200 H the sum is within 1% of 1 + 1/H
/// The three tail checks use i = 1. Bounds carry a 1e-12 relative slack
/// for rounding.
BoundsReport verify_bounds(int m, double horizon, double kappa, double prior_count);

/// Monte-Carlo estimates of E[W^i] and E[(W^i)^2] with standard errors.
struct MomentEstimate {
  std::vector<double> mean;
  std::vector<double> mean_stderr;
  std::vector<double> second;
  std::vector<double> second_stderr;
  double max_sum_error = 0.0;
  long samples = 0;
};

/// Samples are drawn in fixed batches on split substreams, so results do
/// not depend on `threads`.
MomentEstimate estimate_moments(int m, const WeightParams& params, long samples,
                                const RandomStream& stream, unsigned threads = 0);

enum class LambdaMode {
  kOnes,         // lambda_i = 1; the statistic vanishes because the weights sum to 1
  kZero,         // lambda_i = 0
  kAlternating,  // lambda_i = (-1)^i
  kRandomSigns,  // independent +-1 signs redrawn for every sample
};

struct ConcentrationRow {
  int m = 0;
  double scale = 0.0;  // H + n0 + m
  double percentile = 0.0;
};

struct ConcentrationTable {
  std::vector<ConcentrationRow> rows;
  double quantile_level = 0.99;
  /// Least-squares slope of log(percentile) on log(H + n0 + m).
  double slope = 0.0;
  bool strictly_decreasing = false;
  /// slope <= -0.4
  bool pass = false;
};

ConcentrationTable concentration_sweep(double horizon, double kappa, double prior_count,
                                       std::span<const int> m_list, long samples,
                                       LambdaMode mode, const RandomStream& stream,
                                       double quantile_level = 0.99, unsigned threads = 0);

}  // namespace rqbench

#endif  // RQBENCH_WEIGHTS_HPP_
