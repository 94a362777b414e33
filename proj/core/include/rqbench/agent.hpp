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

#ifndef RQBENCH_AGENT_HPP_
#define RQBENCH_AGENT_HPP_

#include <string_view>

#include "rqbench/mdp.hpp"
#include "rqbench/policy.hpp"

namespace rqbench {

/// Online episodic learner. The episode loop calls act(h, s) and then
/// observe() for the same (h, s) before moving to step h + 1. Agents own
/// their random stream, so a run is a pure function of the construction
/// arguments and the observed transitions.
class Agent {
 public:
  virtual ~Agent() = default;

  virtual int act(int h, int s) = 0;
  virtual void observe(int h, int s, int a, double reward, int next) = 0;

  /// The greedy policy currently in force.
  [[nodiscard]] virtual Policy greedy_policy() const = 0;
  [[nodiscard]] virtual std::string_view name() const = 0;
  [[nodiscard]] virtual const Dimensions& dims() const = 0;
};

}  // namespace rqbench

#endif  // RQBENCH_AGENT_HPP_
