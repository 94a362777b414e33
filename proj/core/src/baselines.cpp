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

#include "rqbench/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rqbench {

namespace {

void check_observation(const Dimensions& d, int h, int s, int a, int next) {
  if (h < 0 || h >= d.horizon || s < 0 || s >= d.states || a < 0 || a >= d.actions ||
      next < 0 || next >= d.states) {
    throw std::out_of_range("observe: index out of range");
  }
}

void check_rewards(const Dimensions& d, const std::optional<std::span<const double>>& rewards) {
  if (rewards && rewards->size() != d.cells()) {
    throw std::invalid_argument("reward tensor does not match the agent dimensions");
  }
}

// Lowest index among the maximisers of values[0, n).
int argmax_first(const double* values, int n) {
  int best = 0;
  for (int b = 1; b < n; ++b) {
    if (values[b] > values[best]) best = b;
  }
  return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// UCB-Q

void UcbQParams::validate() const {
  if (!(bonus_scale > 0.0)) throw std::invalid_argument("UCB-Q bonus scale must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("UCB-Q delta must be in (0, 1)");
  if (episodes < 1) throw std::invalid_argument("UCB-Q needs T >= 1");
}

double ucb_bonus(const UcbQParams& params, const Dimensions& dims, std::int64_t t) {
  const double H = dims.horizon;
  const double iota = std::log(static_cast<double>(dims.states) * dims.actions *
                               static_cast<double>(params.episodes) / params.delta);
  return params.bonus_scale * std::sqrt(H * H * H * iota / static_cast<double>(t));
}

UcbQAgent::UcbQAgent(Dimensions dims, UcbQParams params) : dims_(dims), params_(params) {
  params_.validate();
  iota_ = std::log(static_cast<double>(dims_.states) * dims_.actions *
                   static_cast<double>(params_.episodes) / params_.delta);
  q_.resize(dims_.cells());
  value_.assign(static_cast<std::size_t>(dims_.horizon + 1) * dims_.states, 0.0);
  visits_.assign(dims_.cells(), 0);
  policy_.assign(static_cast<std::size_t>(dims_.horizon) * dims_.states, 0);
  for (int h = 0; h < dims_.horizon; ++h) {
    const double cap = dims_.horizon - h;
    for (int s = 0; s < dims_.states; ++s) {
      value_[state_index(h, s)] = cap;
      std::fill_n(q_.begin() + cell(h, s, 0), dims_.actions, cap);
    }
  }
}

int UcbQAgent::act(int h, int s) { return policy_[state_index(h, s)]; }

void UcbQAgent::observe(int h, int s, int a, double reward, int next) {
  check_observation(dims_, h, s, a, next);
  const double H = dims_.horizon;
  const std::size_t c = cell(h, s, a);
  const std::int64_t t = ++visits_[c];
  const double w = (H + 1.0) / (H + static_cast<double>(t));
  const double bonus =
      params_.bonus_scale * std::sqrt(H * H * H * iota_ / static_cast<double>(t));
  q_[c] = (1.0 - w) * q_[c] + w * (reward + value_[state_index(h + 1, next)] + bonus);

  const double* row = &q_[cell(h, s, 0)];
  const int best = argmax_first(row, dims_.actions);
  policy_[state_index(h, s)] = best;
  double v = row[best];
  if (params_.clip_to_value_range) v = std::min(v, H - h);
  value_[state_index(h, s)] = v;
}

Policy UcbQAgent::greedy_policy() const {
  Policy policy(dims_.horizon, dims_.states);
  for (int h = 0; h < dims_.horizon; ++h) {
    for (int s = 0; s < dims_.states; ++s) policy.set(h, s, policy_[state_index(h, s)]);
  }
  return policy;
}

// ---------------------------------------------------------------------------
// RandQL

RandQlAgent::RandQlAgent(Dimensions dims, RandomizedQParams params, RandomStream stream,
                         std::optional<std::span<const double>> rewards)
    : dims_(dims), params_(std::move(params)), stream_(std::move(stream)) {
  params_.validate(dims_.horizon);
  check_rewards(dims_, rewards);
  const int J = params_.ensemble_size;
  const auto& v0 = params_.initial_values;
  visits_.assign(dims_.cells(), 0);
  temp_q_.resize(dims_.cells() * J);
  policy_q_.resize(dims_.cells());
  value_.assign(static_cast<std::size_t>(dims_.horizon + 1) * dims_.states, 0.0);
  policy_.assign(static_cast<std::size_t>(dims_.horizon) * dims_.states, 0);
  for (int h = 0; h < dims_.horizon; ++h) {
    for (int s = 0; s < dims_.states; ++s) {
      value_[state_index(h, s)] = v0[h];
      for (int a = 0; a < dims_.actions; ++a) {
        const std::size_t c = cell(h, s, a);
        const double r = rewards ? (*rewards)[c] : 0.0;
        std::fill_n(temp_q_.begin() + c * J, J, r + v0[h + 1]);
        policy_q_[c] = r + v0[h + 1];
      }
      if (rewards) {
        policy_[state_index(h, s)] = argmax_first(rewards->data() + cell(h, s, 0), dims_.actions);
      }
    }
  }
}

int RandQlAgent::act(int h, int s) { return policy_[state_index(h, s)]; }

void RandQlAgent::observe(int h, int s, int a, double reward, int next) {
  check_observation(dims_, h, s, a, next);
  const int J = params_.ensemble_size;
  const std::size_t c = cell(h, s, a);
  const BetaParams rate{(dims_.horizon + 1.0) / params_.kappa,
                        (static_cast<double>(visits_[c]) + params_.prior_count) / params_.kappa};
  const double target = reward + value_[state_index(h + 1, next)];
  double* ensemble = &temp_q_[c * J];
  double best_value = -INFINITY;
  for (int j = 0; j < J; ++j) {
    const double w = beta_sample(rate, stream_);
    ensemble[j] = (1.0 - w) * ensemble[j] + w * target;
    best_value = std::max(best_value, ensemble[j]);
  }
  policy_q_[c] = best_value;
  const double* row = &policy_q_[cell(h, s, 0)];
  const int best = argmax_first(row, dims_.actions);
  policy_[state_index(h, s)] = best;
  value_[state_index(h, s)] = row[best];
  ++visits_[c];
}

Policy RandQlAgent::greedy_policy() const {
  Policy policy(dims_.horizon, dims_.states);
  for (int h = 0; h < dims_.horizon; ++h) {
    for (int s = 0; s < dims_.states; ++s) policy.set(h, s, policy_[state_index(h, s)]);
  }
  return policy;
}

// ---------------------------------------------------------------------------
// Staged-RandQL

StagedRandQlAgent::StagedRandQlAgent(Dimensions dims, RandomizedQParams params,
                                     RandomStream stream,
                                     std::optional<std::span<const double>> rewards)
    : dims_(dims),
      params_(std::move(params)),
      stream_(std::move(stream)),
      schedule_(dims.horizon) {
  params_.validate(dims_.horizon);
  check_rewards(dims_, rewards);
  const int H = dims_.horizon;
  const int J = params_.ensemble_size;
  const auto& v0 = params_.initial_values;
  reward_.assign(dims_.cells(), 0.0);
  if (rewards) std::copy(rewards->begin(), rewards->end(), reward_.begin());
  reward_seen_.assign(dims_.cells(), rewards ? 1 : 0);
  visits_.assign(dims_.cells(), 0);
  stage_start_.assign(dims_.cells(), 0);
  stage_.assign(dims_.cells(), 0);
  temp_q_.resize(dims_.cells() * J);
  policy_q_.resize(dims_.cells());
  value_.assign(static_cast<std::size_t>(H + 1) * dims_.states, 0.0);
  policy_.assign(static_cast<std::size_t>(H) * dims_.states, 0);
  for (int h = 0; h < H; ++h) {
    for (int s = 0; s < dims_.states; ++s) {
      value_[state_index(h, s)] = (1.0 + H) * v0[h];
      for (int a = 0; a < dims_.actions; ++a) {
        const std::size_t c = cell(h, s, a);
        const double init = reward_[c] + (1.0 + H) * v0[h + 1];
        std::fill_n(temp_q_.begin() + c * J, J, init);
        policy_q_[c] = init;
      }
      policy_[state_index(h, s)] = argmax_first(&reward_[cell(h, s, 0)], dims_.actions);
    }
  }
}

int StagedRandQlAgent::act(int h, int s) { return policy_[state_index(h, s)]; }

void StagedRandQlAgent::observe(int h, int s, int a, double reward, int next) {
  check_observation(dims_, h, s, a, next);
  const int H = dims_.horizon;
  const int J = params_.ensemble_size;
  const std::size_t c = cell(h, s, a);
  if (!reward_seen_[c]) {
    reward_[c] = reward;
    reward_seen_[c] = 1;
  }
  const std::int64_t m_stage = visits_[c] - stage_start_[c];
  const BetaParams rate{1.0 / params_.kappa,
                        (static_cast<double>(m_stage) + params_.prior_count) / params_.kappa};
  const double target = reward + value_[state_index(h + 1, next)];
  double* ensemble = &temp_q_[c * J];
  for (int j = 0; j < J; ++j) {
    const double w = beta_sample(rate, stream_);
    ensemble[j] = (1.0 - w) * ensemble[j] + w * target;
  }
  ++visits_[c];

  if (m_stage + 1 == schedule_(stage_[c])) {
    policy_q_[c] = *std::max_element(ensemble, ensemble + J);
    std::fill_n(ensemble, J, reward_[c] + (1.0 + H) * params_.initial_values[h + 1]);
    const double* row = &policy_q_[cell(h, s, 0)];
    value_[state_index(h, s)] = *std::min_element(row, row + dims_.actions);
    policy_[state_index(h, s)] = argmax_first(row, dims_.actions);
    stage_start_[c] = visits_[c];
    ++stage_[c];
  }
}

Policy StagedRandQlAgent::greedy_policy() const {
  Policy policy(dims_.horizon, dims_.states);
  for (int h = 0; h < dims_.horizon; ++h) {
    for (int s = 0; s < dims_.states; ++s) policy.set(h, s, policy_[state_index(h, s)]);
  }
  return policy;
}

}  // namespace rqbench
