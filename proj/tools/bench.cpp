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

// bench: run regret experiments, solve environments and check learning-rate
// weights from the command line.
//
//   bench run     --env chain15 --agent randomizedq --episodes 3000 --out r.csv
//   bench compare --env chain15 --agents randomizedq,ucbq --out r.csv
//   bench solve   --env grid10 [--tables v.csv]
//   bench weights --H 3 --kappa 1 --n0 1 --m 20 --samples 200000 --out w.json

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rqbench/agent_registry.hpp"
#include "rqbench/config.hpp"
#include "rqbench/harness.hpp"
#include "rqbench/mdp.hpp"
#include "rqbench/random.hpp"
#include "rqbench/solver.hpp"
#include "rqbench/weights.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct RunFlags {
  std::string env;
  std::string agent;
  std::string agents;
  std::int64_t episodes = 0;
  int seeds = 0;
  std::uint64_t seed_base = 0;
  std::string regret_mode;
  std::string params;
  std::string theorem_params;
  std::string config;
  std::string out;
  std::string summary;
  unsigned threads = 0;
};

void add_run_options(CLI::App& cmd, RunFlags& f, bool many_agents) {
  cmd.add_option("--env", f.env, "preset name (grid10, grid20, chain15, chain30) or MDP file");
  if (many_agents) {
    cmd.add_option("--agents", f.agents, "comma-separated agent names");
  } else {
    cmd.add_option("--agent", f.agent, "randomizedq, ucbq, randql or staged-randql");
  }
  cmd.add_option("--episodes", f.episodes, "episodes per seed");
  cmd.add_option("--seeds", f.seeds, "number of seeds");
  cmd.add_option("--seed-base", f.seed_base, "seed of the first run");
  cmd.add_option("--regret-mode", f.regret_mode, "realized or policy-eval");
  cmd.add_option("--params", f.params, "agent parameters, e.g. J=20,kappa=1,n0=auto");
  cmd.add_option("--theorem-params", f.theorem_params,
                 "select the theoretical schedule, e.g. c=2,delta=0.1,T=2000");
  cmd.add_option("--config", f.config, "config file with [env], [agent] and [run] sections");
  cmd.add_option("--out", f.out, "regret CSV path");
  cmd.add_option("--summary", f.summary, "summary JSON path (default: --out with .json)");
  cmd.add_option("--threads", f.threads, "worker threads, 0 for all cores");
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> names;
  std::string item;
  for (const char c : text + ",") {
    if (c == ',') {
      if (!item.empty()) names.push_back(item);
      item.clear();
    } else if (c != ' ') {
      item += c;
    }
  }
  return names;
}

rqbench::RunConfig build_run_config(const CLI::App& cmd, const RunFlags& f) {
  rqbench::RunConfig config;
  if (!f.config.empty()) rqbench::apply_config_sections(rqbench::load_config_file(f.config), config);
  auto given = [&](const char* flag) {
    const CLI::Option* opt = cmd.get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };

  if (given("--env")) config.env = f.env;
  std::vector<std::string> names;
  if (given("--agent")) names = {f.agent};
  if (given("--agents")) names = split_names(f.agents);
  if (!names.empty()) {
    rqbench::ParamMap shared = config.agents.empty() ? rqbench::ParamMap{} : config.agents[0].params;
    config.agents.clear();
    for (const auto& n : names) config.agents.push_back({n, shared, std::nullopt});
  }
  if (config.agents.empty()) config.agents.push_back({"randomizedq", {}, std::nullopt});
  if (given("--params")) {
    for (auto& a : config.agents) {
      for (const auto& [k, v] : rqbench::parse_param_list(f.params)) a.params[k] = v;
    }
  }
  if (given("--theorem-params")) {
    const auto theorem = rqbench::parse_param_list(f.theorem_params);
    for (auto& a : config.agents) a.theorem = theorem;
  }
  if (given("--episodes")) config.episodes = f.episodes;
  if (given("--seeds")) config.seeds = f.seeds;
  if (given("--seed-base")) config.seed_base = f.seed_base;
  if (given("--regret-mode")) config.regret_mode = rqbench::parse_regret_mode(f.regret_mode);
  if (given("--out")) config.out_path = f.out;
  if (given("--summary")) config.summary_path = f.summary;
  if (given("--threads")) config.threads = f.threads;
  return config;
}

int do_run(const CLI::App& cmd, const RunFlags& flags) {
  const rqbench::RunConfig config = build_run_config(cmd, flags);
  config.validate();
  if (config.out_path.empty()) throw rqbench::ConfigError("--out is required");
  const rqbench::TabularMdp mdp = rqbench::resolve_environment(config.env);
  for (const auto& a : config.agents) {
    if (a.name == "randomizedq" && mdp.horizon() == 1) {
      std::fprintf(stderr,
                   "warning: H = 1, RandomizedQ mixing reduces to the staged Q-value only\n");
    }
  }
  const rqbench::GridResult result = rqbench::run_and_write(config);
  for (const auto& s : result.summaries) {
    std::printf("%s/%s  final regret %.4f  90%% CI [%.4f, %.4f]  %.2fs\n", s.agent.c_str(),
                s.env.c_str(), s.mean_final, s.ci90_low, s.ci90_high, s.wall_time_seconds);
  }
  return 0;
}

int do_solve(const std::string& env, const std::string& tables_path) {
  const rqbench::TabularMdp mdp = rqbench::resolve_environment(env);
  const rqbench::ValueTables v = rqbench::optimal_values(mdp);
  const rqbench::GapTable gaps = rqbench::suboptimality_gaps(mdp);
  const auto& d = mdp.dims();
  std::printf("H=%d S=%d A=%d s1=%d\n", d.horizon, d.states, d.actions, mdp.initial_state());
  std::printf("V*(s1) = %.17g\n", v.value(0, mdp.initial_state()));
  std::printf("delta_min = %.17g%s\n", gaps.delta_min, gaps.degenerate ? " (degenerate)" : "");
  if (!tables_path.empty()) {
    std::ofstream out(tables_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tables_path);
    const rqbench::Policy pi = rqbench::greedy_policy(v);
    out << "h,s,a,q_star,gap,greedy\n";
    char line[160];
    for (int h = 0; h < d.horizon; ++h) {
      for (int s = 0; s < d.states; ++s) {
        for (int a = 0; a < d.actions; ++a) {
          std::snprintf(line, sizeof(line), "%d,%d,%d,%.17g,%.17g,%d\n", h, s, a,
                        v.q_value(h, s, a), gaps.gap(h, s, a), pi(h, s) == a ? 1 : 0);
          out << line;
        }
      }
    }
  }
  return 0;
}

struct WeightFlags {
  double horizon = 3.0;
  double kappa = 1.0;
  double n0 = 1.0;
  int m = 20;
  long samples = 200000;
  std::string out;
  bool staged = false;
  std::uint64_t seed_base = 0;
  unsigned threads = 0;
};

int do_weights(const WeightFlags& f) {
  if (f.m < 1) throw rqbench::ConfigError("--m must be at least 1");
  if (f.samples < 2) throw rqbench::ConfigError("--samples must be at least 2");
  const rqbench::WeightParams params{f.horizon, f.kappa, f.n0, f.staged};
  try {
    params.validate();
  } catch (const std::invalid_argument& e) {
    throw rqbench::ConfigError(e.what());
  }
  const rqbench::RandomStream root(f.seed_base);
  const auto est = rqbench::estimate_moments(f.m, params, f.samples, root, f.threads);

  nlohmann::ordered_json doc;
  doc["H"] = f.horizon;
  doc["kappa"] = f.kappa;
  doc["n0"] = f.n0;
  doc["m"] = f.m;
  doc["samples"] = f.samples;
  doc["staged"] = f.staged;
  doc["max_sum_error"] = est.max_sum_error;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  int outside = 0;
  for (int i = 0; i <= f.m; ++i) {
    nlohmann::ordered_json row{{"i", i},
                               {"mc_mean", est.mean[i]},
                               {"mc_mean_se", est.mean_stderr[i]},
                               {"mc_second", est.second[i]},
                               {"mc_second_se", est.second_stderr[i]}};
    if (!f.staged) {
      const double m1 = rqbench::moment_closed_form(i, f.m, 1, f.horizon, f.kappa, f.n0);
      const double m2 = rqbench::moment_closed_form(i, f.m, 2, f.horizon, f.kappa, f.n0);
      row["closed_mean"] = m1;
      row["closed_second"] = m2;
      const double z1 = est.mean_stderr[i] > 0 ? std::fabs(est.mean[i] - m1) / est.mean_stderr[i] : 0;
      const double z2 =
          est.second_stderr[i] > 0 ? std::fabs(est.second[i] - m2) / est.second_stderr[i] : 0;
      row["z_mean"] = z1;
      row["z_second"] = z2;
      if (z1 > 5.0 || z2 > 5.0) ++outside;
    }
    rows.push_back(row);
  }
  doc["moments"] = rows;
  if (!f.staged) {
    const auto report = rqbench::verify_bounds(f.m, f.horizon, f.kappa, f.n0);
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"value", c.value}, {"bound", c.bound}});
    }
    doc["bounds"] = checks;
    doc["moments_outside_5se"] = outside;
    std::printf("bounds %s, %d moment(s) outside 5 standard errors, max |sum - 1| = %.3g\n",
                report.all_pass() ? "pass" : "FAIL", outside, est.max_sum_error);
  } else {
    std::printf("max |sum - 1| = %.3g\n", est.max_sum_error);
  }
  if (!f.out.empty()) {
    std::ofstream out(f.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + f.out);
    out << doc.dump(2) << '\n';
  } else {
    std::cout << doc.dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tabular episodic RL benchmark"};
  app.require_subcommand(1);

  RunFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "run one agent over several seeds");
  add_run_options(*run, run_flags, false);

  RunFlags compare_flags;
  CLI::App* compare = app.add_subcommand("compare", "run several agents on one environment");
  add_run_options(*compare, compare_flags, true);

  std::string solve_env = "chain15";
  std::string tables;
  CLI::App* solve = app.add_subcommand("solve", "print optimal values and gaps");
  solve->add_option("--env", solve_env, "preset name or MDP file");
  solve->add_option("--tables", tables, "write Q*, gaps and the greedy policy as CSV");

  WeightFlags wf;
  CLI::App* weights = app.add_subcommand("weights", "Monte-Carlo check of aggregated weights");
  weights->add_option("--H", wf.horizon, "horizon");
  weights->add_option("--kappa", wf.kappa, "inflation coefficient");
  weights->add_option("--n0", wf.n0, "prior count");
  weights->add_option("--m", wf.m, "number of updates");
  weights->add_option("--samples", wf.samples, "Monte-Carlo samples");
  weights->add_option("--out", wf.out, "JSON report path (default: stdout)");
  weights->add_flag("--staged", wf.staged, "use the staged rate Beta(1/kappa, .)");
  weights->add_option("--seed-base", wf.seed_base, "root seed");
  weights->add_option("--threads", wf.threads, "worker threads, 0 for all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) return do_run(*run, run_flags);
    if (*compare) return do_run(*compare, compare_flags);
    if (*solve) return do_solve(solve_env, tables);
    if (*weights) return do_weights(wf);
  } catch (const rqbench::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
  return 0;
}
