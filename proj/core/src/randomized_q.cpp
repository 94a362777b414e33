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

#include "rqbench/randomized_q.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rqbench {

std::vector<double> default_initial_values(int horizon) {
  std::vector<double> v(static_cast<std::size_t>(horizon) + 1);
  for (int h = 0; h <= horizon; ++h) v[h] = 2.0 * (horizon - h);
  return v;
}

RandomizedQParams RandomizedQParams::experiment_preset(int horizon, int states) {
  RandomizedQParams p;
  p.ensemble_size = 20;
  p.kappa = 1.0;
  p.prior_count = 1.0 / states;
  p.initial_values = default_initial_values(horizon);
  return p;
}

RandomizedQParams RandomizedQParams::theorem_schedule(const Dimensions& dims,
                                                      std::int64_t episodes, double delta,
                                                      double c) {
  if (episodes < 1) throw std::invalid_argument("theorem schedule needs T >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must be in (0, 1)");
  if (!(c > 0.0)) throw std::invalid_argument("schedule constant c must be positive");
  const double sah = static_cast<double>(dims.states) * dims.actions * dims.horizon;
  const double t = static_cast<double>(episodes);
  RandomizedQParams p;
  p.ensemble_size = static_cast<int>(std::ceil(c * std::log(sah * t / delta)));
  p.kappa = c * (std::log(sah / delta) + std::log(t));
  p.prior_count = std::ceil(c * std::log(t) * p.kappa);
  // log T = 0 at T = 1 would give n0 = 0.
  p.prior_count = std::max(p.prior_count, 1.0);
  p.ensemble_size = std::max(p.ensemble_size, 1);
  p.initial_values = default_initial_values(dims.horizon);
  return p;
}

void RandomizedQParams::validate(int horizon) const {
  if (ensemble_size < 1) throw std::invalid_argument("ensemble size J must be at least 1");
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw std::invalid_argument("kappa must be positive");
  if (!(prior_count > 0.0) || !std::isfinite(prior_count)) {
    throw std::invalid_argument("n0 must be positive");
  }
  if (initial_values.size() != static_cast<std::size_t>(horizon) + 1) {
    throw std::invalid_argument("initial values need H + 1 = " + std::to_string(horizon + 1) +
                                " entries, got " + std::to_string(initial_values.size()));
  }
  if (initial_values.back() != 0.0) throw std::invalid_argument("V0[H+1] must be 0");
  for (std::size_t h = 1; h < initial_values.size(); ++h) {
    if (initial_values[h] > initial_values[h - 1]) {
      throw std::invalid_argument("initial values must be non-increasing in h");
    }
  }
}

RandomizedQAgent::RandomizedQAgent(Dimensions dims, RandomizedQParams params, RandomStream stream,
                                   std::optional<std::span<const double>> rewards)
    : dims_(dims),
      params_(std::move(params)),
      stream_(std::move(stream)),
      schedule_(dims.horizon),
      rewards_known_(rewards.has_value()) {
  params_.validate(dims_.horizon);
  const std::size_t cells = dims_.cells();
  if (rewards && rewards->size() != cells) {
    throw std::invalid_argument("reward tensor does not match the agent dimensions");
  }
  const int H = dims_.horizon;
  const int J = params_.ensemble_size;
  const auto& v0 = params_.initial_values;
  const double fast_share = 1.0 - 1.0 / H;
  const double staged_share = 1.0 / H;

  reward_.assign(cells, 0.0);
  if (rewards) std::copy(rewards->begin(), rewards->end(), reward_.begin());
  reward_seen_.assign(cells, rewards_known_ ? 1 : 0);
  visits_.assign(cells, 0);
  stage_start_.assign(cells, 0);
  stage_.assign(cells, 0);
  temp_q_.resize(cells * J);
  staged_temp_q_.resize(cells * J);
  staged_q_.resize(cells);
  policy_q_.resize(cells);
  value_.assign(static_cast<std::size_t>(H + 1) * dims_.states, 0.0);
  staged_value_.assign(value_.size(), 0.0);
  policy_.assign(static_cast<std::size_t>(H) * dims_.states, 0);

  for (int h = 0; h < H; ++h) {
    for (int s = 0; s < dims_.states; ++s) {
      value_[state_index(h, s)] = v0[h];
      staged_value_[state_index(h, s)] = (1.0 + H) * v0[h];
      int best = 0;
      for (int a = 0; a < dims_.actions; ++a) {
        const std::size_t c = cell(h, s, a);
        const double r = reward_[c];
        const double fast = r + v0[h + 1];
        const double staged = r + (1.0 + H) * v0[h + 1];
        std::fill_n(temp_q_.begin() + c * J, J, fast);
        std::fill_n(staged_temp_q_.begin() + c * J, J, staged);
        staged_q_[c] = staged;
        policy_q_[c] = fast_share * fast + staged_share * staged;
        if (r > reward_[cell(h, s, best)]) best = a;
      }
      policy_[state_index(h, s)] = best;
    }
  }
}

int RandomizedQAgent::act(int h, int s) { return policy_[state_index(h, s)]; }

double RandomizedQAgent::max_temp_q(int h, int s, int a) const {
  const auto first = temp_q_.begin() + cell(h, s, a) * params_.ensemble_size;
  return *std::max_element(first, first + params_.ensemble_size);
}

double RandomizedQAgent::reset_target(int h, std::size_t c) const {
  return reward_[c] + (1.0 + dims_.horizon) * params_.initial_values[h + 1];
}

void RandomizedQAgent::observe(int h, int s, int a, double reward, int next) {
  if (h < 0 || h >= dims_.horizon || s < 0 || s >= dims_.states || a < 0 ||
      a >= dims_.actions || next < 0 || next >= dims_.states) {
    throw std::out_of_range("observe: index out of range");
  }
  const int H = dims_.horizon;
  const int J = params_.ensemble_size;
  const std::size_t c = cell(h, s, a);
  if (!reward_seen_[c]) {
    reward_[c] = reward;
    reward_seen_[c] = 1;
  }

  const std::int64_t m = visits_[c];
  const std::int64_t m_stage = m - stage_start_[c];
  const double target = reward + value_[state_index(h + 1, next)];
  const double staged_target = reward + staged_value_[state_index(h + 1, next)];
  const BetaParams fast_rate{(H + 1.0) / params_.kappa,
                             (static_cast<double>(m) + params_.prior_count) / params_.kappa};
  const BetaParams staged_rate{1.0 / params_.kappa,
                               (static_cast<double>(m_stage) + params_.prior_count) /
                                   params_.kappa};

  double* fast = &temp_q_[c * J];
  double* staged = &staged_temp_q_[c * J];
  double fast_max = -INFINITY;
  for (int j = 0; j < J; ++j) {
    const double w = beta_sample(fast_rate, stream_);
    const double w_staged = beta_sample(staged_rate, stream_);
    fast[j] = (1.0 - w) * fast[j] + w * target;
    staged[j] = (1.0 - w_staged) * staged[j] + w_staged * staged_target;
    fast_max = std::max(fast_max, fast[j]);
  }

  policy_q_[c] = (1.0 - 1.0 / H) * fast_max + (1.0 / H) * staged_q_[c];

  const std::size_t first = cell(h, s, 0);
  int best = 0;
  for (int b = 1; b < dims_.actions; ++b) {
    if (policy_q_[first + b] > policy_q_[first + best]) best = b;
  }
  policy_[state_index(h, s)] = best;
  value_[state_index(h, s)] = max_temp_q(h, s, best);

  visits_[c] = m + 1;

  if (m_stage + 1 == schedule_(stage_[c])) {
    staged_q_[c] = *std::max_element(staged, staged + J);
    staged_value_[state_index(h, s)] =
        *std::min_element(staged_q_.begin() + first, staged_q_.begin() + first + dims_.actions);
    stage_start_[c] = visits_[c];
    std::fill_n(staged, J, reset_target(h, c));
    ++stage_[c];
  }
}

Policy RandomizedQAgent::greedy_policy() const {
  Policy policy(dims_.horizon, dims_.states);
  for (int h = 0; h < dims_.horizon; ++h) {
    for (int s = 0; s < dims_.states; ++s) policy.set(h, s, policy_[state_index(h, s)]);
  }
  return policy;
}

}  // namespace rqbench
