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

#include "rqbench/solver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace rqbench {

namespace {

double expected_next(const TabularMdp& mdp, int h, int s, int a, const double* v_next) {
  double sum = 0.0;
  for (const Transition& t : mdp.row(h, s, a)) sum += t.prob * v_next[t.next];
  return sum;
}

void check_policy(const TabularMdp& mdp, const Policy& policy) {
  if (policy.horizon() != mdp.horizon() || policy.states() != mdp.states()) {
    throw std::invalid_argument("policy shape does not match the MDP");
  }
  for (const int a : policy.actions()) {
    if (a < 0 || a >= mdp.actions()) {
      throw std::out_of_range("policy action " + std::to_string(a) + " out of range");
    }
  }
}

ValueTables empty_tables(const Dimensions& d) {
  ValueTables t{d, {}, {}};
  t.v.assign(static_cast<std::size_t>(d.horizon + 1) * d.states, 0.0);
  t.q.assign(d.cells(), 0.0);
  return t;
}

}  // namespace

ValueTables optimal_values(const TabularMdp& mdp) {
  validate(mdp);
  const Dimensions& d = mdp.dims();
  ValueTables t = empty_tables(d);
  for (int h = d.horizon - 1; h >= 0; --h) {
    const double* v_next = &t.v[static_cast<std::size_t>(h + 1) * d.states];
    for (int s = 0; s < d.states; ++s) {
      double best = -std::numeric_limits<double>::infinity();
      for (int a = 0; a < d.actions; ++a) {
        const double q = mdp.reward(h, s, a) + expected_next(mdp, h, s, a, v_next);
        t.q[mdp.cell(h, s, a)] = q;
        best = std::max(best, q);
      }
      t.v[static_cast<std::size_t>(h) * d.states + s] = best;
    }
  }
  return t;
}

ValueTables policy_evaluation(const TabularMdp& mdp, const Policy& policy) {
  check_policy(mdp, policy);
  const Dimensions& d = mdp.dims();
  ValueTables t = empty_tables(d);
  for (int h = d.horizon - 1; h >= 0; --h) {
    const double* v_next = &t.v[static_cast<std::size_t>(h + 1) * d.states];
    for (int s = 0; s < d.states; ++s) {
      for (int a = 0; a < d.actions; ++a) {
        t.q[mdp.cell(h, s, a)] = mdp.reward(h, s, a) + expected_next(mdp, h, s, a, v_next);
      }
      t.v[static_cast<std::size_t>(h) * d.states + s] = t.q[mdp.cell(h, s, policy(h, s))];
    }
  }
  return t;
}

double policy_value_at_start(const TabularMdp& mdp, const Policy& policy) {
  check_policy(mdp, policy);
  const Dimensions& d = mdp.dims();
  std::vector<double> next(d.states, 0.0);
  std::vector<double> current(d.states, 0.0);
  for (int h = d.horizon - 1; h >= 0; --h) {
    for (int s = 0; s < d.states; ++s) {
      const int a = policy(h, s);
      current[s] = mdp.reward(h, s, a) + expected_next(mdp, h, s, a, next.data());
    }
    std::swap(next, current);
  }
  return next[mdp.initial_state()];
}

Policy greedy_policy(const ValueTables& tables) {
  const Dimensions& d = tables.dims;
  Policy policy(d.horizon, d.states);
  for (int h = 0; h < d.horizon; ++h) {
    for (int s = 0; s < d.states; ++s) {
      int best = 0;
      for (int a = 1; a < d.actions; ++a) {
        if (tables.q_value(h, s, a) > tables.q_value(h, s, best)) best = a;
      }
      policy.set(h, s, best);
    }
  }
  return policy;
}

GapTable suboptimality_gaps(const TabularMdp& mdp) {
  const ValueTables t = optimal_values(mdp);
  const Dimensions& d = mdp.dims();
  GapTable gaps{d, std::vector<double>(d.cells(), 0.0), 0.0, false};
  double smallest = std::numeric_limits<double>::infinity();
  for (int h = 0; h < d.horizon; ++h) {
    for (int s = 0; s < d.states; ++s) {
      for (int a = 0; a < d.actions; ++a) {
        const double delta = t.value(h, s) - t.q_value(h, s, a);
        gaps.delta[mdp.cell(h, s, a)] = delta;
        if (delta > kGapThreshold) smallest = std::min(smallest, delta);
      }
    }
  }
  if (smallest == std::numeric_limits<double>::infinity()) {
    gaps.degenerate = true;
  } else {
    gaps.delta_min = smallest;
  }
  return gaps;
}

}  // namespace rqbench
