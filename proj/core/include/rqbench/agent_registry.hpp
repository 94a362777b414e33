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

#ifndef RQBENCH_AGENT_REGISTRY_HPP_
#define RQBENCH_AGENT_REGISTRY_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rqbench/agent.hpp"
#include "rqbench/baselines.hpp"
#include "rqbench/config.hpp"
#include "rqbench/mdp.hpp"
#include "rqbench/randomized_q.hpp"

namespace rqbench {

/// Registry name plus user-supplied hyperparameters.
///
/// Randomized agents (randomizedq, randql, staged-randql) accept J, kappa,
/// n0 (a number or "auto" for 1/S) and rewards_known (default true). When
/// `theorem` is set, J, kappa and n0 come from the theorem schedule with keys
/// c (default 2), delta (default 0.1) and T (default: the run's episodes);
/// explicit entries in `params` still override the schedule.
///
/// ucbq accepts c_b, delta and clip.
struct AgentSpec {
  std::string name;
  ParamMap params;
  std::optional<ParamMap> theorem;
};

std::vector<std::string> agent_names();
bool is_agent_name(std::string_view name);

/// Throws ConfigError for unknown names, unknown keys or bad values.
RandomizedQParams resolve_randomized_params(const AgentSpec& spec, const Dimensions& dims,
                                            std::int64_t episodes);
UcbQParams resolve_ucbq_params(const AgentSpec& spec, std::int64_t episodes);

std::unique_ptr<Agent> make_agent(const AgentSpec& spec, const TabularMdp& mdp,
                                  std::int64_t episodes, RandomStream stream);

}  // namespace rqbench

#endif  // RQBENCH_AGENT_REGISTRY_HPP_
