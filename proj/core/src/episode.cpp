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

#include "rqbench/episode.hpp"

#include <stdexcept>

namespace rqbench {

Trajectory run_episode(const TabularMdp& mdp, Agent& agent, RandomStream& stream) {
  if (agent.dims() != mdp.dims()) {
    throw std::invalid_argument("agent dimensions do not match the MDP");
  }
  Trajectory trajectory;
  trajectory.steps.reserve(mdp.horizon());
  int s = mdp.initial_state();
  for (int h = 0; h < mdp.horizon(); ++h) {
    const int a = agent.act(h, s);
    const TransitionOutcome out = sample_transition(mdp, h, s, a, stream);
    agent.observe(h, s, a, out.reward, out.next);
    trajectory.steps.push_back({h, s, a, out.reward, out.next});
    trajectory.return_total += out.reward;
    s = out.next;
  }
  return trajectory;
}

}  // namespace rqbench
