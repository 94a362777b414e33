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

#include "rqbench/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rqbench/parallel.hpp"
#include "rqbench/stats.hpp"

namespace rqbench {

namespace {

constexpr std::size_t kBatches = 16;
constexpr double kRelativeSlack = 1e-12;

BetaParams rate_params(const WeightParams& p, int k) {
  const double first = p.staged ? 1.0 : p.horizon + 1.0;
  return {first / p.kappa, (k + p.prior_count) / p.kappa};
}

// Fills `weights` (size m + 1) from rates w_0..w_{m-1}.
void aggregate(std::span<const double> rates, std::span<double> weights) {
  const std::size_t m = rates.size();
  double tail = 1.0;  // prod_{k >= i} (1 - w_k)
  for (std::size_t i = m; i >= 1; --i) {
    weights[i] = rates[i - 1] * tail;
    tail *= 1.0 - rates[i - 1];
  }
  weights[0] = tail;
}

void draw(int m, const WeightParams& params, RandomStream& stream, std::vector<double>& rates,
          std::vector<double>& weights) {
  rates.resize(m);
  weights.resize(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k < m; ++k) rates[k] = beta_sample(rate_params(params, k), stream);
  aggregate(rates, weights);
}

long batch_size(long samples, std::size_t batch) {
  const long base = samples / static_cast<long>(kBatches);
  const long extra = samples % static_cast<long>(kBatches);
  return base + (static_cast<long>(batch) < extra ? 1 : 0);
}

}  // namespace

void WeightParams::validate() const {
  if (!(horizon > 0.0)) throw std::invalid_argument("weights: H must be positive");
  if (!(kappa > 0.0)) throw std::invalid_argument("weights: kappa must be positive");
  if (!(prior_count > 0.0)) throw std::invalid_argument("weights: n0 must be positive");
}

double AggregatedWeightSample::sum() const {
  double total = 0.0;
  for (const double w : weights) total += w;
  return total;
}

AggregatedWeightSample sample_aggregated(int m, const WeightParams& params, RandomStream& stream) {
  if (m < 1) throw std::invalid_argument("weights: m must be at least 1");
  params.validate();
  AggregatedWeightSample sample{m, {}, params};
  std::vector<double> rates;
  draw(m, params, stream, rates, sample.weights);
  return sample;
}

AlphaTable alpha_table(int m, double horizon, double prior_count) {
  if (m < 0) throw std::invalid_argument("alpha_table: m must be non-negative");
  AlphaTable table{m, horizon, prior_count, std::vector<double>(static_cast<std::size_t>(m) + 1)};
  // suffix = prod_{k=i+1}^m (n0+k-1)/(H+n0+k)
  double suffix = 1.0;
  for (int i = m; i >= 1; --i) {
    table.alpha[i] = (horizon + 1.0) / (horizon + prior_count + i) * suffix;
    suffix *= (prior_count + i - 1.0) / (horizon + prior_count + i);
  }
  table.alpha[0] = suffix;
  return table;
}

double log_pochhammer(double x, int d) { return std::lgamma(x + d) - std::lgamma(x); }

double moment_closed_form(int i, int m, int d, double horizon, double kappa, double prior_count) {
  if (m < 1 || i < 0 || i > m) throw std::invalid_argument("moment_closed_form: need 0 <= i <= m");
  if (d < 1) throw std::invalid_argument("moment_closed_form: moment order must be >= 1");
  double log_moment = 0.0;
  for (int j = i + 1; j <= m; ++j) {
    log_moment += log_pochhammer((prior_count + j - 1.0) / kappa, d) -
                  log_pochhammer((horizon + prior_count + j) / kappa, d);
  }
  if (i >= 1) {
    log_moment += log_pochhammer((horizon + 1.0) / kappa, d) -
                  log_pochhammer((horizon + prior_count + i) / kappa, d);
  }
  return std::exp(log_moment);
}

bool BoundsReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
}

BoundsReport verify_bounds(int m, double horizon, double kappa, double prior_count) {
  if (m < 1) throw std::invalid_argument("verify_bounds: m must be at least 1");
  WeightParams params{horizon, kappa, prior_count, false};
  params.validate();
  BoundsReport report{m, params, {}};

  double max_expectation = 0.0;
  double variance_sum = 0.0;
  for (int i = 1; i <= m; ++i) {
    const double first = moment_closed_form(i, m, 1, horizon, kappa, prior_count);
    const double second = moment_closed_form(i, m, 2, horizon, kappa, prior_count);
    max_expectation = std::max(max_expectation, first);
    variance_sum += second - first * first;
  }
  const double scale = horizon + prior_count + m;
  const double expectation_bound = (horizon + 1.0) / scale;
  const double variance_bound = (horizon + 1.0) * kappa / scale;
  report.checks.push_back({"max_expectation",
                           max_expectation <= expectation_bound * (1.0 + kRelativeSlack),
                           max_expectation, expectation_bound});
  report.checks.push_back({"variance_sum", variance_sum <= variance_bound * (1.0 + kRelativeSlack),
                           variance_sum, variance_bound});

  // Partial sums over t of E[W_t^i] at i = 1, using
  // E[W_{t+1}^i] = E[W_t^i] (n0 + t) / (H + n0 + t + 1).
  const int i = 1;
  const double limit = 1.0 + 1.0 / horizon;
  const long t_max = i + static_cast<long>(std::ceil(200.0 * horizon));
  double term = (horizon + 1.0) / (horizon + prior_count + i);
  double partial = 0.0;
  bool monotone = true;
  double largest = 0.0;
  for (long t = i; t <= t_max; ++t) {
    const double before = partial;
    partial += term;
    if (!(term > 0.0 && partial >= before)) monotone = false;
    largest = std::max(largest, partial);
    term *= (prior_count + t) / (horizon + prior_count + t + 1.0);
  }
  const double shortfall = (limit - partial) / limit;
  report.checks.push_back({"tail_monotone", monotone, partial, limit});
  report.checks.push_back({"tail_bounded", largest <= limit * (1.0 + kRelativeSlack), largest, limit});
  report.checks.push_back({"tail_limit", shortfall <= 0.01, shortfall, 0.01});
  return report;
}

MomentEstimate estimate_moments(int m, const WeightParams& params, long samples,
                                const RandomStream& stream, unsigned threads) {
  if (m < 1) throw std::invalid_argument("estimate_moments: m must be at least 1");
  if (samples < 2) throw std::invalid_argument("estimate_moments: need at least 2 samples");
  params.validate();
  const std::size_t width = static_cast<std::size_t>(m) + 1;
  struct Partial {
    std::vector<double> s1, s2, s4;
    double max_sum_error = 0.0;
  };
  std::vector<Partial> partials(kBatches);
  parallel_for(kBatches, threads, [&](std::size_t b) {
    Partial& p = partials[b];
    p.s1.assign(width, 0.0);
    p.s2.assign(width, 0.0);
    p.s4.assign(width, 0.0);
    RandomStream local = stream.split(b);
    std::vector<double> rates, weights;
    for (long n = batch_size(samples, b); n > 0; --n) {
      draw(m, params, local, rates, weights);
      double total = 0.0;
      for (std::size_t i = 0; i < width; ++i) {
        const double w = weights[i];
        const double w2 = w * w;
        p.s1[i] += w;
        p.s2[i] += w2;
        p.s4[i] += w2 * w2;
        total += w;
      }
      p.max_sum_error = std::max(p.max_sum_error, std::fabs(total - 1.0));
    }
  });

  MomentEstimate est;
  est.samples = samples;
  std::vector<double> s1(width, 0.0), s2(width, 0.0), s4(width, 0.0);
  for (const Partial& p : partials) {
    for (std::size_t i = 0; i < width; ++i) {
      s1[i] += p.s1[i];
      s2[i] += p.s2[i];
      s4[i] += p.s4[i];
    }
    est.max_sum_error = std::max(est.max_sum_error, p.max_sum_error);
  }
  const double n = static_cast<double>(samples);
  for (std::size_t i = 0; i < width; ++i) {
    const double m1 = s1[i] / n;
    const double m2 = s2[i] / n;
    const double m4 = s4[i] / n;
    est.mean.push_back(m1);
    est.second.push_back(m2);
    est.mean_stderr.push_back(std::sqrt(std::max(0.0, (m2 - m1 * m1) * n / (n - 1.0)) / n));
    est.second_stderr.push_back(std::sqrt(std::max(0.0, (m4 - m2 * m2) * n / (n - 1.0)) / n));
  }
  return est;
}

ConcentrationTable concentration_sweep(double horizon, double kappa, double prior_count,
                                       std::span<const int> m_list, long samples,
                                       LambdaMode mode, const RandomStream& stream,
                                       double quantile_level, unsigned threads) {
  if (m_list.empty()) throw std::invalid_argument("concentration_sweep: empty m list");
  if (samples < 1) throw std::invalid_argument("concentration_sweep: need samples >= 1");
  const WeightParams params{horizon, kappa, prior_count, false};
  params.validate();

  ConcentrationTable table;
  table.quantile_level = quantile_level;
  for (std::size_t idx = 0; idx < m_list.size(); ++idx) {
    const int m = m_list[idx];
    if (m < 1) throw std::invalid_argument("concentration_sweep: m must be at least 1");
    std::vector<double> expected(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
      expected[i] = moment_closed_form(i, m, 1, horizon, kappa, prior_count);
    }
    std::vector<std::vector<double>> stats(kBatches);
    const RandomStream sweep_stream = stream.split(static_cast<std::uint64_t>(m));
    parallel_for(kBatches, threads, [&](std::size_t b) {
      RandomStream local = sweep_stream.split(b);
      std::vector<double> rates, weights;
      auto& out = stats[b];
      const long count = batch_size(samples, b);
      out.reserve(count);
      for (long n = 0; n < count; ++n) {
        draw(m, params, local, rates, weights);
        double acc = 0.0;
        std::uint64_t bits = 0;
        for (int i = 0; i <= m; ++i) {
          double lambda = 1.0;
          switch (mode) {
            case LambdaMode::kOnes: lambda = 1.0; break;
            case LambdaMode::kZero: lambda = 0.0; break;
            case LambdaMode::kAlternating: lambda = (i % 2 == 0) ? 1.0 : -1.0; break;
            case LambdaMode::kRandomSigns:
              if (i % 64 == 0) bits = local.next_u64();
              lambda = ((bits >> (i % 64)) & 1u) ? 1.0 : -1.0;
              break;
          }
          acc += lambda * (weights[i] - expected[i]);
        }
        out.push_back(std::fabs(acc));
      }
    });
    std::vector<double> all;
    all.reserve(samples);
    for (const auto& part : stats) all.insert(all.end(), part.begin(), part.end());
    table.rows.push_back({m, horizon + prior_count + m, quantile(std::move(all), quantile_level)});
  }

  table.strictly_decreasing = true;
  for (std::size_t r = 1; r < table.rows.size(); ++r) {
    if (!(table.rows[r].percentile < table.rows[r - 1].percentile)) table.strictly_decreasing = false;
  }
  if (table.rows.size() >= 2) {
    std::vector<double> x, y;
    bool positive = true;
    for (const auto& row : table.rows) {
      if (!(row.percentile > 0.0)) positive = false;
      x.push_back(std::log(row.scale));
      y.push_back(std::log(std::max(row.percentile, 1e-300)));
    }
    table.slope = ols_slope(x, y);
    table.pass = positive && table.slope <= -0.4;
  }
  return table;
}

}  // namespace rqbench
