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

#ifndef RQBENCH_SOLVER_HPP_
#define RQBENCH_SOLVER_HPP_

#include <cstddef>
#include <vector>

#include "rqbench/mdp.hpp"
#include "rqbench/policy.hpp"

namespace rqbench {

/// State values for h in [0, H] (row H is identically zero) and action values
/// for h in [0, H).
struct ValueTables {
  Dimensions dims;
  std::vector<double> v;
  std::vector<double> q;

  [[nodiscard]] double value(int h, int s) const {
    return v[static_cast<std::size_t>(h) * dims.states + s];
  }
  [[nodiscard]] double q_value(int h, int s, int a) const {
    return q[(static_cast<std::size_t>(h) * dims.states + s) * dims.actions + a];
  }
};

/// Suboptimality gaps V*(h, s) - Q*(h, s, a) and their smallest positive entry.
struct GapTable {
  Dimensions dims;
  std::vector<double> delta;
  double delta_min = 0.0;
  /// Set when no gap exceeds the positivity threshold; delta_min is then 0.
  bool degenerate = false;

  [[nodiscard]] double gap(int h, int s, int a) const {
    return delta[(static_cast<std::size_t>(h) * dims.states + s) * dims.actions + a];
  }
};

inline constexpr double kGapThreshold = 1e-12;

/// Backward induction for the optimal values. Validates the MDP first.
ValueTables optimal_values(const TabularMdp& mdp);

/// Backward induction for a fixed deterministic policy.
ValueTables policy_evaluation(const TabularMdp& mdp, const Policy& policy);

/// Value of `policy` from the initial state only. Same recursion as
/// policy_evaluation without materialising the Q table.
double policy_value_at_start(const TabularMdp& mdp, const Policy& policy);

/// Greedy policy of a Q table, ties broken toward the smallest action.
Policy greedy_policy(const ValueTables& tables);

GapTable suboptimality_gaps(const TabularMdp& mdp);

}  // namespace rqbench

#endif  // RQBENCH_SOLVER_HPP_
