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

#ifndef RQBENCH_EPISODE_HPP_
#define RQBENCH_EPISODE_HPP_

#include <vector>

#include "rqbench/agent.hpp"
#include "rqbench/mdp.hpp"
#include "rqbench/random.hpp"

namespace rqbench {

struct EpisodeStep {
  int h;  // zero-based step
  int s;
  int a;
  double reward;
  int next;
};

struct Trajectory {
  std::vector<EpisodeStep> steps;
  double return_total = 0.0;
};

/// Plays one episode of H steps from the initial state. The agent is queried
/// and updated at every step, in step order; `stream` drives the transitions.
Trajectory run_episode(const TabularMdp& mdp, Agent& agent, RandomStream& stream);

}  // namespace rqbench

#endif  // RQBENCH_EPISODE_HPP_
