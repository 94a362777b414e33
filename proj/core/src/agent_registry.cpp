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

#include "rqbench/agent_registry.hpp"

#include <algorithm>
#include <set>

namespace rqbench {

namespace {

void reject_unknown(const ParamMap& params, const std::set<std::string, std::less<>>& allowed,
                    std::string_view agent) {
  for (const auto& [key, value] : params) {
    if (!allowed.contains(key)) {
      throw ConfigError("unknown parameter '" + key + "' for agent " + std::string(agent));
    }
  }
}

bool rewards_known(const AgentSpec& spec) {
  const auto it = spec.params.find("rewards_known");
  return it == spec.params.end() ? true : parse_bool(it->first, it->second);
}

}  // namespace

std::vector<std::string> agent_names() { return {"randomizedq", "ucbq", "randql", "staged-randql"}; }

bool is_agent_name(std::string_view name) {
  const auto names = agent_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

RandomizedQParams resolve_randomized_params(const AgentSpec& spec, const Dimensions& dims,
                                            std::int64_t episodes) {
  reject_unknown(spec.params, {"J", "kappa", "n0", "rewards_known"}, spec.name);
  RandomizedQParams p = RandomizedQParams::experiment_preset(dims.horizon, dims.states);
  if (spec.theorem) {
    reject_unknown(*spec.theorem, {"c", "delta", "T"}, spec.name + " theorem schedule");
    double c = 2.0;
    double delta = 0.1;
    std::int64_t t = episodes;
    if (auto it = spec.theorem->find("c"); it != spec.theorem->end()) c = parse_double("c", it->second);
    if (auto it = spec.theorem->find("delta"); it != spec.theorem->end()) {
      delta = parse_double("delta", it->second);
    }
    if (auto it = spec.theorem->find("T"); it != spec.theorem->end()) t = parse_int("T", it->second);
    try {
      p = RandomizedQParams::theorem_schedule(dims, t, delta, c);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (auto it = spec.params.find("J"); it != spec.params.end()) {
    p.ensemble_size = static_cast<int>(parse_int("J", it->second));
  }
  if (auto it = spec.params.find("kappa"); it != spec.params.end()) {
    p.kappa = parse_double("kappa", it->second);
  }
  if (auto it = spec.params.find("n0"); it != spec.params.end()) {
    p.prior_count = it->second == "auto" ? 1.0 / dims.states : parse_double("n0", it->second);
  }
  try {
    p.validate(dims.horizon);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(spec.name) + ": " + e.what());
  }
  return p;
}

UcbQParams resolve_ucbq_params(const AgentSpec& spec, std::int64_t episodes) {
  reject_unknown(spec.params, {"c_b", "delta", "clip"}, spec.name);
  if (spec.theorem) throw ConfigError("ucbq does not take a theorem schedule");
  UcbQParams p;
  p.episodes = episodes;
  if (auto it = spec.params.find("c_b"); it != spec.params.end()) {
    p.bonus_scale = parse_double("c_b", it->second);
  }
  if (auto it = spec.params.find("delta"); it != spec.params.end()) {
    p.delta = parse_double("delta", it->second);
  }
  if (auto it = spec.params.find("clip"); it != spec.params.end()) {
    p.clip_to_value_range = parse_bool("clip", it->second);
  }
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("ucbq: ") + e.what());
  }
  return p;
}

std::unique_ptr<Agent> make_agent(const AgentSpec& spec, const TabularMdp& mdp,
                                  std::int64_t episodes, RandomStream stream) {
  const Dimensions& dims = mdp.dims();
  if (spec.name == "ucbq") {
    return std::make_unique<UcbQAgent>(dims, resolve_ucbq_params(spec, episodes));
  }
  if (!is_agent_name(spec.name)) throw ConfigError("unknown agent '" + spec.name + "'");

  RandomizedQParams params = resolve_randomized_params(spec, dims, episodes);
  std::optional<std::span<const double>> rewards;
  if (rewards_known(spec)) rewards = mdp.rewards();
  if (spec.name == "randomizedq") {
    return std::make_unique<RandomizedQAgent>(dims, std::move(params), std::move(stream), rewards);
  }
  if (spec.name == "randql") {
    return std::make_unique<RandQlAgent>(dims, std::move(params), std::move(stream), rewards);
  }
  return std::make_unique<StagedRandQlAgent>(dims, std::move(params), std::move(stream), rewards);
}

}  // namespace rqbench
