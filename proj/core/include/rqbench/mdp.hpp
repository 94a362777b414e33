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

#ifndef RQBENCH_MDP_HPP_
#define RQBENCH_MDP_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rqbench/random.hpp"

namespace rqbench {

/// Raised by validate() with the first violated invariant.
class InvalidMdp : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One nonzero entry of a transition row.
struct Transition {
  int next;
  double prob;
};

/// Horizon, state count and action count of an episodic problem.
struct Dimensions {
  int horizon;
  int states;
  int actions;

  [[nodiscard]] std::size_t cells() const {
    return static_cast<std::size_t>(horizon) * states * actions;
  }
  friend bool operator==(const Dimensions&, const Dimensions&) = default;
};

/// Finite-horizon tabular MDP with step-dependent transitions and
/// deterministic rewards in [0, 1].
///
/// Steps, states and actions are dense zero-based indices: step h runs over
/// [0, H). Transition rows are stored sparsely in increasing next-state order;
/// entries equal to zero are dropped. The object is immutable once built and
/// can be shared between threads.
class TabularMdp {
 public:
  /// `rewards` is indexed [(h * S + s) * A + a]; `rows` likewise, one sparse
  /// row per (h, s, a). Only sizes are checked here; call validate() for the
  /// probability and reward invariants.
  TabularMdp(Dimensions dims, int initial_state, std::vector<double> rewards,
             std::vector<std::vector<Transition>> rows);

  /// Builds from a dense tensor P[h][s][a][s'] flattened row-major.
  static TabularMdp from_dense(Dimensions dims, int initial_state, std::vector<double> rewards,
                               std::span<const double> dense_transitions);

  [[nodiscard]] const Dimensions& dims() const { return dims_; }
  [[nodiscard]] int horizon() const { return dims_.horizon; }
  [[nodiscard]] int states() const { return dims_.states; }
  [[nodiscard]] int actions() const { return dims_.actions; }
  [[nodiscard]] int initial_state() const { return initial_state_; }

  [[nodiscard]] std::size_t cell(int h, int s, int a) const {
    return (static_cast<std::size_t>(h) * dims_.states + s) * dims_.actions + a;
  }
  [[nodiscard]] double reward(int h, int s, int a) const { return rewards_[cell(h, s, a)]; }
  [[nodiscard]] std::span<const double> rewards() const { return rewards_; }
  [[nodiscard]] std::span<const Transition> row(int h, int s, int a) const;
  [[nodiscard]] double probability(int h, int s, int a, int next) const;

  /// Throws std::out_of_range unless all indices are valid.
  void check_indices(int h, int s, int a) const;

 private:
  Dimensions dims_;
  int initial_state_;
  std::vector<double> rewards_;
  std::vector<std::size_t> row_offsets_;
  std::vector<Transition> entries_;
};

/// Returns normally iff every row is a distribution (sum within 1e-12, no
/// negative entry), every reward is in [0, 1] and the initial state is in
/// range. Otherwise throws InvalidMdp naming the offending (h, s, a).
void validate(const TabularMdp& mdp);

struct TransitionOutcome {
  double reward;
  int next;
};

/// Reward of (h, s, a) and a next state drawn by inverse CDF over the row.
TransitionOutcome sample_transition(const TabularMdp& mdp, int h, int s, int a,
                                    RandomStream& stream);

}  // namespace rqbench

#endif  // RQBENCH_MDP_HPP_
