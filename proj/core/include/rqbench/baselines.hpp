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

#ifndef RQBENCH_BASELINES_HPP_
#define RQBENCH_BASELINES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rqbench/agent.hpp"
#include "rqbench/random.hpp"
#include "rqbench/randomized_q.hpp"
#include "rqbench/stage_schedule.hpp"

namespace rqbench {

struct UcbQParams {
  double bonus_scale = 1.0;
  double delta = 0.1;
  bool clip_to_value_range = true;
  /// Number of episodes T entering the log term.
  std::int64_t episodes = 1;

  void validate() const;
};

/// Hoeffding bonus c_b sqrt(H^3 iota / t) with iota = log(S A T / delta).
double ucb_bonus(const UcbQParams& params, const Dimensions& dims, std::int64_t t);

/// Q-learning with learning rate (H+1)/(H+t) and Hoeffding bonuses.
class UcbQAgent final : public Agent {
 public:
  UcbQAgent(Dimensions dims, UcbQParams params);

  int act(int h, int s) override;
  void observe(int h, int s, int a, double reward, int next) override;
  [[nodiscard]] Policy greedy_policy() const override;
  [[nodiscard]] std::string_view name() const override { return "ucbq"; }
  [[nodiscard]] const Dimensions& dims() const override { return dims_; }

  [[nodiscard]] double q(int h, int s, int a) const { return q_[cell(h, s, a)]; }
  [[nodiscard]] double value(int h, int s) const { return value_[state_index(h, s)]; }
  [[nodiscard]] std::int64_t visits(int h, int s, int a) const { return visits_[cell(h, s, a)]; }

 private:
  [[nodiscard]] std::size_t cell(int h, int s, int a) const {
    return (static_cast<std::size_t>(h) * dims_.states + s) * dims_.actions + a;
  }
  [[nodiscard]] std::size_t state_index(int h, int s) const {
    return static_cast<std::size_t>(h) * dims_.states + s;
  }

  Dimensions dims_;
  UcbQParams params_;
  double iota_;
  std::vector<double> q_;
  std::vector<double> value_;
  std::vector<std::int64_t> visits_;
  std::vector<int> policy_;
};

/// Randomized-rate Q-learning without stages or mixing: one ensemble of J
/// temporary Q-values updated with Beta((H+1)/kappa, (m+n0)/kappa) rates;
/// the policy Q-value is the ensemble maximum.
class RandQlAgent final : public Agent {
 public:
  RandQlAgent(Dimensions dims, RandomizedQParams params, RandomStream stream,
              std::optional<std::span<const double>> rewards = std::nullopt);

  int act(int h, int s) override;
  void observe(int h, int s, int a, double reward, int next) override;
  [[nodiscard]] Policy greedy_policy() const override;
  [[nodiscard]] std::string_view name() const override { return "randql"; }
  [[nodiscard]] const Dimensions& dims() const override { return dims_; }

  [[nodiscard]] double policy_q(int h, int s, int a) const { return policy_q_[cell(h, s, a)]; }
  [[nodiscard]] double temp_q(int h, int s, int a, int j) const {
    return temp_q_[cell(h, s, a) * params_.ensemble_size + j];
  }
  [[nodiscard]] double value(int h, int s) const { return value_[state_index(h, s)]; }

 private:
  [[nodiscard]] std::size_t cell(int h, int s, int a) const {
    return (static_cast<std::size_t>(h) * dims_.states + s) * dims_.actions + a;
  }
  [[nodiscard]] std::size_t state_index(int h, int s) const {
    return static_cast<std::size_t>(h) * dims_.states + s;
  }

  Dimensions dims_;
  RandomizedQParams params_;
  RandomStream stream_;
  std::vector<std::int64_t> visits_;
  std::vector<double> temp_q_;
  std::vector<double> policy_q_;
  std::vector<double> value_;
  std::vector<int> policy_;
};

/// Staged randomized Q-learning. Visits to each (h, s, a) are split into
/// stages of stage_length(q) visits. Inside a stage the temporary ensemble
/// moves toward r + Vstaged(h+1, s') with Beta(1/kappa, (m_stage+n0)/kappa)
/// rates; the policy Q-value, the staged value and the greedy action at
/// (h, s) change only when a stage of that cell ends.
class StagedRandQlAgent final : public Agent {
 public:
  StagedRandQlAgent(Dimensions dims, RandomizedQParams params, RandomStream stream,
                    std::optional<std::span<const double>> rewards = std::nullopt);

  int act(int h, int s) override;
  void observe(int h, int s, int a, double reward, int next) override;
  [[nodiscard]] Policy greedy_policy() const override;
  [[nodiscard]] std::string_view name() const override { return "staged-randql"; }
  [[nodiscard]] const Dimensions& dims() const override { return dims_; }

  [[nodiscard]] double policy_q(int h, int s, int a) const { return policy_q_[cell(h, s, a)]; }
  [[nodiscard]] double staged_value(int h, int s) const { return value_[state_index(h, s)]; }
  [[nodiscard]] int stage(int h, int s, int a) const { return stage_[cell(h, s, a)]; }
  [[nodiscard]] std::int64_t visits(int h, int s, int a) const { return visits_[cell(h, s, a)]; }

 private:
  [[nodiscard]] std::size_t cell(int h, int s, int a) const {
    return (static_cast<std::size_t>(h) * dims_.states + s) * dims_.actions + a;
  }
  [[nodiscard]] std::size_t state_index(int h, int s) const {
    return static_cast<std::size_t>(h) * dims_.states + s;
  }

  Dimensions dims_;
  RandomizedQParams params_;
  RandomStream stream_;
  StageSchedule schedule_;
  std::vector<double> reward_;
  std::vector<unsigned char> reward_seen_;
  std::vector<std::int64_t> visits_;
  std::vector<std::int64_t> stage_start_;
  std::vector<int> stage_;
  std::vector<double> temp_q_;
  std::vector<double> policy_q_;
  std::vector<double> value_;
  std::vector<int> policy_;
};

}  // namespace rqbench

#endif  // RQBENCH_BASELINES_HPP_
