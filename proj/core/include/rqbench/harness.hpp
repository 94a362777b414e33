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

#ifndef RQBENCH_HARNESS_HPP_
#define RQBENCH_HARNESS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rqbench/agent_registry.hpp"
#include "rqbench/config.hpp"
#include "rqbench/episode.hpp"
#include "rqbench/mdp.hpp"
#include "rqbench/policy.hpp"

namespace rqbench {

enum class RegretMode {
  /// V*(s1) minus the realised return of the episode.
  kRealized,
  /// V*(s1) minus the exact value of the greedy policy at episode start.
  kPolicyEval,
};

std::string_view to_string(RegretMode mode);
RegretMode parse_regret_mode(std::string_view text);

/// One experiment: an environment, one or more agents, T episodes per seed.
/// Run seed k uses seed_base + k; its transitions come from substream 0 and
/// the agent's randomness from substream 1 of that seed's root stream.
struct RunConfig {
  std::string env = "chain15";
  std::vector<AgentSpec> agents;
  std::int64_t episodes = 3000;
  int seeds = 4;
  std::uint64_t seed_base = 0;
  RegretMode regret_mode = RegretMode::kRealized;
  std::filesystem::path out_path;
  /// Defaults to out_path with a .json extension.
  std::filesystem::path summary_path;
  unsigned threads = 0;

  /// Throws ConfigError.
  void validate() const;
  [[nodiscard]] std::filesystem::path resolved_summary_path() const;
};

/// Applies [env], [agent] and [run] sections onto `config`. [agent] takes
/// name (or names, comma separated) and passes every other key through as
/// an agent parameter; [run] takes episodes, seeds, seed_base, regret_mode,
/// out, summary and threads; [env] takes name.
void apply_config_sections(const ConfigSections& sections, RunConfig& config);

struct RegretRecord {
  std::string agent;
  std::string env;
  std::uint64_t seed = 0;
  std::int64_t episode = 0;  // 1-based
  double episodic_regret = 0.0;
  double cumulative_regret = 0.0;
};

struct SummaryStats {
  std::string agent;
  std::string env;
  double mean_final = 0.0;
  double ci90_low = 0.0;
  double ci90_high = 0.0;
  std::vector<double> seed_finals;
  double wall_time_seconds = 0.0;
};

struct GridResult {
  std::vector<RegretRecord> records;
  std::vector<SummaryStats> summaries;
};

/// A preset name or a path to a tensor file.
TabularMdp resolve_environment(std::string_view env);

double compute_regret_policy_eval(const TabularMdp& mdp, const Policy& snapshot);
double compute_regret_policy_eval(const TabularMdp& mdp, double optimal_start_value,
                                  const Policy& snapshot);
double compute_regret_realized(const TabularMdp& mdp, const Trajectory& trajectory);
double compute_regret_realized(double optimal_start_value, const Trajectory& trajectory);

/// T episodes of one agent on one seed.
std::vector<RegretRecord> run_cell(const TabularMdp& mdp, std::string_view env_name,
                                   const AgentSpec& agent, std::int64_t episodes,
                                   std::uint64_t seed, RegretMode mode);

/// Runs every (agent, seed) cell on the worker pool; records come back sorted
/// by (agent, env, seed, episode) whatever the scheduling.
GridResult run_grid(const RunConfig& config);

/// Columns agent,env,seed,episode,episodic_regret,cumulative_regret; floats
/// with 17 significant digits; LF line endings.
void write_records_csv(std::span<const RegretRecord> records, std::ostream& out);
std::vector<RegretRecord> read_records_csv(std::istream& in);

/// {"agent/env": {mean_final, ci90_low, ci90_high, seeds: [...], wall_time_s}}
void write_summary_json(std::span<const SummaryStats> summaries, std::ostream& out);

/// Runs the grid and writes the CSV and summary. Output is written to
/// "<out>.partial" first and renamed on success; on failure the .partial
/// file is left behind with an error line and the exception propagates.
GridResult run_and_write(const RunConfig& config);

}  // namespace rqbench

#endif  // RQBENCH_HARNESS_HPP_
