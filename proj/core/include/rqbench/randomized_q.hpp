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

#ifndef RQBENCH_RANDOMIZED_Q_HPP_
#define RQBENCH_RANDOMIZED_Q_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rqbench/agent.hpp"
#include "rqbench/random.hpp"
#include "rqbench/stage_schedule.hpp"

namespace rqbench {

/// V0[h] = 2 (H - h) for zero-based h in [0, H]; V0[H] = 0.
std::vector<double> default_initial_values(int horizon);

/// Hyperparameters shared by the randomized-learning-rate agents.
struct RandomizedQParams {
  int ensemble_size = 20;
  double kappa = 1.0;
  double prior_count = 1.0;
  /// Optimistic initial values, one per step h in [0, H].
  std::vector<double> initial_values;

  /// J = 20, kappa = 1, n0 = 1/S and the default initial values.
  static RandomizedQParams experiment_preset(int horizon, int states);

  /// Schedule with J = ceil(c log(SAHT/delta)),
  /// kappa = c (log(SAH/delta) + log T), n0 = ceil(c log(T) kappa).
  static RandomizedQParams theorem_schedule(const Dimensions& dims, std::int64_t episodes,
                                            double delta, double c = 2.0);

  /// Throws std::invalid_argument unless J >= 1, kappa > 0, n0 > 0 and the
  /// initial values have H + 1 entries, end in 0 and never increase.
  void validate(int horizon) const;
};

/// Randomized Q-learning with two temporary ensembles and optimistic mixing.
///
/// Per visited (h, s, a) the agent keeps J fast temporary Q-values, updated
/// every visit with rates drawn from Beta((H+1)/kappa, (m+n0)/kappa), and J
/// staged temporary Q-values, updated with Beta(1/kappa, (m_stage+n0)/kappa)
/// and folded into the staged Q-value only when the visit's stage ends. The
/// policy Q-value mixes the two as
///
///   Q(h,s,a) = (1 - 1/H) max_j Qtmp_j(h,s,a) + (1/H) Qstaged(h,s,a)
///
/// and the greedy policy at (h, s) is refreshed after every step.
///
/// Stage bookkeeping: `stage_start` holds the visit count at the start of the
/// current stage, so visits - stage_start counts visits inside the stage; the
/// stage closes when that count reaches stage_length(q). The staged
/// ensemble is reset to r + (1+H) V0[h+1].
class RandomizedQAgent final : public Agent {
 public:
  /// `rewards`, when given, is the reward tensor indexed like TabularMdp
  /// cells; otherwise rewards start at 0 and each cell caches the reward it
  /// first observes.
  RandomizedQAgent(Dimensions dims, RandomizedQParams params, RandomStream stream,
                   std::optional<std::span<const double>> rewards = std::nullopt);

  int act(int h, int s) override;
  void observe(int h, int s, int a, double reward, int next) override;
  [[nodiscard]] Policy greedy_policy() const override;
  [[nodiscard]] std::string_view name() const override { return "randomizedq"; }
  [[nodiscard]] const Dimensions& dims() const override { return dims_; }

  [[nodiscard]] const RandomizedQParams& params() const { return params_; }
  /// True for H = 1, where the mix reduces to the staged Q-value alone.
  [[nodiscard]] bool degenerate_mixing() const { return dims_.horizon == 1; }

  [[nodiscard]] double policy_q(int h, int s, int a) const { return policy_q_[cell(h, s, a)]; }
  [[nodiscard]] double staged_q(int h, int s, int a) const { return staged_q_[cell(h, s, a)]; }
  [[nodiscard]] double temp_q(int h, int s, int a, int j) const {
    return temp_q_[cell(h, s, a) * params_.ensemble_size + j];
  }
  [[nodiscard]] double staged_temp_q(int h, int s, int a, int j) const {
    return staged_temp_q_[cell(h, s, a) * params_.ensemble_size + j];
  }
  [[nodiscard]] double max_temp_q(int h, int s, int a) const;
  /// Value estimates for h in [0, H]; row H is zero.
  [[nodiscard]] double value(int h, int s) const { return value_[state_index(h, s)]; }
  [[nodiscard]] double staged_value(int h, int s) const {
    return staged_value_[state_index(h, s)];
  }
  [[nodiscard]] std::int64_t visits(int h, int s, int a) const { return visits_[cell(h, s, a)]; }
  [[nodiscard]] std::int64_t stage_start(int h, int s, int a) const {
    return stage_start_[cell(h, s, a)];
  }
  [[nodiscard]] int stage(int h, int s, int a) const { return stage_[cell(h, s, a)]; }

 private:
  [[nodiscard]] std::size_t cell(int h, int s, int a) const {
    return (static_cast<std::size_t>(h) * dims_.states + s) * dims_.actions + a;
  }
  [[nodiscard]] std::size_t state_index(int h, int s) const {
    return static_cast<std::size_t>(h) * dims_.states + s;
  }
  [[nodiscard]] double reset_target(int h, std::size_t c) const;

  Dimensions dims_;
  RandomizedQParams params_;
  RandomStream stream_;
  StageSchedule schedule_;
  bool rewards_known_;

  std::vector<double> reward_;
  std::vector<unsigned char> reward_seen_;
  std::vector<std::int64_t> visits_;
  std::vector<std::int64_t> stage_start_;
  std::vector<int> stage_;
  std::vector<double> temp_q_;
  std::vector<double> staged_temp_q_;
  std::vector<double> staged_q_;
  std::vector<double> policy_q_;
  std::vector<double> value_;
  std::vector<double> staged_value_;
  std::vector<int> policy_;
};

}  // namespace rqbench

#endif  // RQBENCH_RANDOMIZED_Q_HPP_
