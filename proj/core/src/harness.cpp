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

#include "rqbench/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "json.hpp"

#include "rqbench/environments.hpp"
#include "rqbench/mdp_io.hpp"
#include "rqbench/parallel.hpp"
#include "rqbench/solver.hpp"
#include "rqbench/stats.hpp"

namespace rqbench {

namespace {

constexpr std::uint64_t kEnvLabel = 0;
constexpr std::uint64_t kAgentLabel = 1;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

std::string_view to_string(RegretMode mode) {
  return mode == RegretMode::kRealized ? "realized" : "policy-eval";
}

RegretMode parse_regret_mode(std::string_view text) {
  if (text == "realized") return RegretMode::kRealized;
  if (text == "policy-eval") return RegretMode::kPolicyEval;
  throw ConfigError("regret mode must be 'realized' or 'policy-eval', got '" + std::string(text) +
                    "'");
}

void RunConfig::validate() const {
  if (episodes < 1) throw ConfigError("episodes must be at least 1");
  if (seeds < 1) throw ConfigError("seeds must be at least 1");
  if (agents.empty()) throw ConfigError("no agent selected");
  for (const AgentSpec& a : agents) {
    if (!is_agent_name(a.name)) throw ConfigError("unknown agent '" + a.name + "'");
  }
  if (env.empty()) throw ConfigError("no environment selected");
  if (!is_preset(env) && !std::filesystem::exists(env)) {
    throw ConfigError("environment '" + env + "' is neither a preset nor a readable file");
  }
}

std::filesystem::path RunConfig::resolved_summary_path() const {
  if (!summary_path.empty()) return summary_path;
  std::filesystem::path p = out_path;
  return p.replace_extension(".json");
}

void apply_config_sections(const ConfigSections& sections, RunConfig& config) {
  for (const auto& [name, values] : sections) {
    if (name != "env" && name != "agent" && name != "run") {
      throw ConfigError("unknown config section [" + name + "]");
    }
  }
  if (auto it = sections.find("env"); it != sections.end()) {
    for (const auto& [key, value] : it->second) {
      if (key != "name") throw ConfigError("unknown key '" + key + "' in [env]");
      config.env = value;
    }
  }
  if (auto it = sections.find("agent"); it != sections.end()) {
    ParamMap params;
    std::vector<std::string> names;
    for (const auto& [key, value] : it->second) {
      if (key == "name" || key == "names") {
        std::string_view rest = value;
        while (!rest.empty()) {
          const auto comma = rest.find(',');
          std::string item(rest.substr(0, comma));
          item.erase(0, item.find_first_not_of(" \t"));
          item.erase(item.find_last_not_of(" \t") + 1);
          if (!item.empty()) names.push_back(item);
          if (comma == std::string_view::npos) break;
          rest.remove_prefix(comma + 1);
        }
      } else {
        params[key] = value;
      }
    }
    if (!names.empty()) {
      config.agents.clear();
      for (auto& n : names) config.agents.push_back({n, params, std::nullopt});
    } else {
      for (AgentSpec& a : config.agents) {
        for (const auto& [k, v] : params) a.params[k] = v;
      }
    }
  }
  if (auto it = sections.find("run"); it != sections.end()) {
    for (const auto& [key, value] : it->second) {
      if (key == "episodes") {
        config.episodes = parse_int(key, value);
      } else if (key == "seeds") {
        config.seeds = static_cast<int>(parse_int(key, value));
      } else if (key == "seed_base") {
        config.seed_base = static_cast<std::uint64_t>(parse_int(key, value));
      } else if (key == "regret_mode") {
        config.regret_mode = parse_regret_mode(value);
      } else if (key == "out") {
        config.out_path = value;
      } else if (key == "summary") {
        config.summary_path = value;
      } else if (key == "threads") {
        config.threads = static_cast<unsigned>(parse_int(key, value));
      } else {
        throw ConfigError("unknown key '" + key + "' in [run]");
      }
    }
  }
}

TabularMdp resolve_environment(std::string_view env) {
  if (is_preset(env)) return make_preset(env);
  const std::filesystem::path path{std::string(env)};
  if (!std::filesystem::exists(path)) {
    throw ConfigError("environment '" + std::string(env) + "' is neither a preset nor a file");
  }
  return load_mdp_file(path);
}

double compute_regret_policy_eval(const TabularMdp& mdp, const Policy& snapshot) {
  const ValueTables optimal = optimal_values(mdp);
  return compute_regret_policy_eval(mdp, optimal.value(0, mdp.initial_state()), snapshot);
}

double compute_regret_policy_eval(const TabularMdp& mdp, double optimal_start_value,
                                  const Policy& snapshot) {
  return optimal_start_value - policy_value_at_start(mdp, snapshot);
}

double compute_regret_realized(const TabularMdp& mdp, const Trajectory& trajectory) {
  const ValueTables optimal = optimal_values(mdp);
  return compute_regret_realized(optimal.value(0, mdp.initial_state()), trajectory);
}

double compute_regret_realized(double optimal_start_value, const Trajectory& trajectory) {
  return optimal_start_value - trajectory.return_total;
}

std::vector<RegretRecord> run_cell(const TabularMdp& mdp, std::string_view env_name,
                                   const AgentSpec& agent_spec, std::int64_t episodes,
                                   std::uint64_t seed, RegretMode mode) {
  const RandomStream root(seed);
  RandomStream env_stream = root.split(kEnvLabel);
  std::unique_ptr<Agent> agent = make_agent(agent_spec, mdp, episodes, root.split(kAgentLabel));
  const double v_star = optimal_values(mdp).value(0, mdp.initial_state());

  std::vector<RegretRecord> records;
  records.reserve(static_cast<std::size_t>(episodes));
  double cumulative = 0.0;
  for (std::int64_t t = 1; t <= episodes; ++t) {
    double regret = 0.0;
    if (mode == RegretMode::kPolicyEval) {
      const Policy snapshot = agent->greedy_policy();
      regret = compute_regret_policy_eval(mdp, v_star, snapshot);
      run_episode(mdp, *agent, env_stream);
    } else {
      regret = compute_regret_realized(v_star, run_episode(mdp, *agent, env_stream));
    }
    cumulative += regret;
    records.push_back({agent_spec.name, std::string(env_name), seed, t, regret, cumulative});
  }
  return records;
}

GridResult run_grid(const RunConfig& config) {
  config.validate();
  const TabularMdp mdp = resolve_environment(config.env);
  validate(mdp);

  struct Cell {
    std::size_t agent;
    int seed_index;
    std::vector<RegretRecord> records;
    double seconds = 0.0;
  };
  std::vector<Cell> cells;
  for (std::size_t a = 0; a < config.agents.size(); ++a) {
    for (int k = 0; k < config.seeds; ++k) cells.push_back({a, k, {}, 0.0});
  }
  // Resolve parameters up front so configuration errors surface before any work.
  for (const AgentSpec& spec : config.agents) {
    (void)make_agent(spec, mdp, config.episodes, RandomStream(0));
  }

  parallel_for(cells.size(), config.threads, [&](std::size_t i) {
    Cell& cell = cells[i];
    const auto start = std::chrono::steady_clock::now();
    cell.records = run_cell(mdp, config.env, config.agents[cell.agent], config.episodes,
                            config.seed_base + static_cast<std::uint64_t>(cell.seed_index),
                            config.regret_mode);
    cell.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });

  GridResult result;
  std::map<std::pair<std::string, std::string>, SummaryStats> summaries;
  for (Cell& cell : cells) {
    const RegretRecord& last = cell.records.back();
    SummaryStats& s = summaries[{last.agent, last.env}];
    s.agent = last.agent;
    s.env = last.env;
    s.seed_finals.push_back(last.cumulative_regret);
    s.wall_time_seconds += cell.seconds;
    result.records.insert(result.records.end(), std::make_move_iterator(cell.records.begin()),
                          std::make_move_iterator(cell.records.end()));
  }
  std::stable_sort(result.records.begin(), result.records.end(),
                   [](const RegretRecord& x, const RegretRecord& y) {
                     return std::tie(x.agent, x.env, x.seed, x.episode) <
                            std::tie(y.agent, y.env, y.seed, y.episode);
                   });
  for (auto& [key, s] : summaries) {
    const Interval ci = student_t_interval(s.seed_finals, 0.90);
    s.mean_final = ci.mean;
    s.ci90_low = ci.low;
    s.ci90_high = ci.high;
    result.summaries.push_back(std::move(s));
  }
  return result;
}

void write_records_csv(std::span<const RegretRecord> records, std::ostream& out) {
  out << "agent,env,seed,episode,episodic_regret,cumulative_regret\n";
  for (const RegretRecord& r : records) {
    out << r.agent << ',' << r.env << ',' << r.seed << ',' << r.episode << ','
        << format_double(r.episodic_regret) << ',' << format_double(r.cumulative_regret) << '\n';
  }
}

std::vector<RegretRecord> read_records_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "agent,env,seed,episode,episodic_regret,cumulative_regret") {
    throw std::runtime_error("regret CSV: missing or unexpected header");
  }
  std::vector<RegretRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 6) throw std::runtime_error("regret CSV: malformed row '" + line + "'");
    records.push_back({f[0], f[1], std::stoull(f[2]), std::stoll(f[3]), std::stod(f[4]),
                       std::stod(f[5])});
  }
  return records;
}

void write_summary_json(std::span<const SummaryStats> summaries, std::ostream& out) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const SummaryStats& s : summaries) {
    doc[s.agent + "/" + s.env] = {
        {"mean_final", s.mean_final},
        {"ci90_low", s.ci90_low},
        {"ci90_high", s.ci90_high},
        {"seeds", s.seed_finals},
        {"wall_time_s", s.wall_time_seconds},
    };
  }
  out << doc.dump(2) << '\n';
}

GridResult run_and_write(const RunConfig& config) {
  if (config.out_path.empty()) throw ConfigError("no output path given");
  const std::filesystem::path partial = config.out_path.string() + ".partial";
  if (config.out_path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(config.out_path.parent_path(), ec);
  }
  auto mark_failed = [&](const std::string& what) {
    std::ofstream marker(partial, std::ios::app);
    marker << "# incomplete: " << what << '\n';
  };
  GridResult result;
  try {
    result = run_grid(config);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    mark_failed(e.what());
    throw;
  }
  {
    std::ofstream csv(partial, std::ios::binary | std::ios::trunc);
    if (!csv) throw std::runtime_error("cannot write " + partial.string());
    write_records_csv(result.records, csv);
    if (!csv.flush()) {
      mark_failed("write error");
      throw std::runtime_error("write error on " + partial.string());
    }
  }
  std::filesystem::rename(partial, config.out_path);
  const auto summary_path = config.resolved_summary_path();
  std::ofstream json(summary_path, std::ios::binary | std::ios::trunc);
  if (!json) throw std::runtime_error("cannot write " + summary_path.string());
  write_summary_json(result.summaries, json);
  return result;
}

}  // namespace rqbench
