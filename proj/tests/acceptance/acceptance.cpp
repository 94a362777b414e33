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

// Acceptance checks. Each criterion prints one line:
//   criterion N: PASS|FAIL  <details>  (<seconds> s)
// Usage: rqbench_acceptance <n|all> [--bench path] [--scratch dir]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rqbench/episode.hpp"
#include "rqbench/harness.hpp"
#include "rqbench/mdp_io.hpp"
#include "rqbench/randomized_q.hpp"
#include "rqbench/solver.hpp"
#include "rqbench/stats.hpp"
#include "rqbench/weights.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using namespace rqbench;

namespace {

struct Outcome {
  bool pass = false;
  std::string details;
};

struct Context {
  std::string bench;
  fs::path scratch;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

const std::vector<double> kHorizons{1, 3, 10};
const std::vector<double> kKappas{0.5, 1, 2};
const std::vector<double> kPriors{0.01, 1, 5};
const std::vector<int> kLengths{1, 20, 200};

Outcome sum_identity(const Context&) {
  RandomStream stream(20260101);
  double worst = 0.0;
  long count = 0;
  for (double H : kHorizons)
    for (double kappa : kKappas)
      for (double n0 : kPriors)
        for (int m : kLengths) {
          RandomStream cell = stream.split(static_cast<std::uint64_t>(count));
          for (int k = 0; k < 1000; ++k) {
            const auto s = sample_aggregated(m, {H, kappa, n0, false}, cell);
            worst = std::max(worst, std::fabs(s.sum() - 1.0));
          }
          ++count;
        }
  return {worst <= 1e-9, "grid points=" + std::to_string(count) + " samples/point=1000 max|sum-1|=" + fmt(worst)};
}

Outcome moment_agreement(const Context&) {
  bool pass = true;
  double worst_z = 0.0;
  std::string where;
  for (auto [H, m] : std::vector<std::pair<double, int>>{{3, 10}, {5, 20}}) {
    const auto est = estimate_moments(m, {H, 1.0, 1.0, false}, 200000, RandomStream(7).split(m));
    for (int i = 0; i <= m; ++i) {
      const double closed = moment_closed_form(i, m, 1, H, 1.0, 1.0);
      const double z = std::fabs(est.mean[i] - closed) / est.mean_stderr[i];
      if (z > worst_z) {
        worst_z = z;
        where = "H=" + fmt(H) + " m=" + std::to_string(m) + " i=" + std::to_string(i);
      }
      if (!(z <= 5.0)) pass = false;
    }
  }
  return {pass, "max |z|=" + fmt(worst_z) + " at " + where + " (limit 5)"};
}

Outcome bounds(const Context&) {
  int total = 0, failed = 0;
  std::ostringstream fails;
  for (double H : kHorizons)
    for (double kappa : kKappas)
      for (double n0 : kPriors)
        for (int m : kLengths) {
          const BoundsReport r = verify_bounds(m, H, kappa, n0);
          for (const auto& c : r.checks) {
            ++total;
            if (!c.pass) {
              ++failed;
              fails << " [" << c.name << " H=" << H << " kappa=" << kappa << " n0=" << n0
                    << " m=" << m << " value=" << fmt(c.value) << " bound=" << fmt(c.bound) << "]";
            }
          }
        }
  return {failed == 0, "checks=" + std::to_string(total) + " failed=" + std::to_string(failed) + fails.str()};
}

Outcome concentration(const Context&) {
  const std::vector<int> ms{8, 16, 32, 64, 128};
  const auto t = concentration_sweep(3, 1, 1, ms, 100000, LambdaMode::kRandomSigns, RandomStream(44));
  std::ostringstream d;
  d << "slope=" << fmt(t.slope) << " (limit -0.4) p99:";
  for (const auto& row : t.rows) d << " m=" << row.m << ":" << fmt(row.percentile);
  return {t.slope <= -0.4, d.str()};
}

Outcome solver_oracle(const Context&) {
  double worst = 0.0;
  int count = 0;
  for (const auto& [name, mdp] : testing::small_mdp_corpus()) {
    const auto brute = testing::brute_force_optimal_values(mdp);
    const ValueTables opt = optimal_values(mdp);
    for (int h = 0; h < mdp.horizon(); ++h)
      for (int s = 0; s < mdp.states(); ++s)
        worst = std::max(worst, std::fabs(opt.value(h, s) - brute[h * mdp.states() + s]));
    ++count;
  }
  return {count > 0 && worst <= 1e-10, "mdps=" + std::to_string(count) + " max|diff|=" + fmt(worst)};
}

// Records, after each update, whether the policy value dominates Q*.
class OptimismProbe final : public Agent {
 public:
  OptimismProbe(RandomizedQAgent inner, const ValueTables& q_star) : inner_(std::move(inner)), q_star_(q_star) {}
  int act(int h, int s) override { return inner_.act(h, s); }
  void observe(int h, int s, int a, double r, int next) override {
    inner_.observe(h, s, a, r, next);
    ++visits;
    if (inner_.policy_q(h, s, a) >= q_star_.q_value(h, s, a) - 1e-9) ++optimistic;
  }
  [[nodiscard]] Policy greedy_policy() const override { return inner_.greedy_policy(); }
  [[nodiscard]] std::string_view name() const override { return "probe"; }
  [[nodiscard]] const Dimensions& dims() const override { return inner_.dims(); }
  long visits = 0;
  long optimistic = 0;

 private:
  RandomizedQAgent inner_;
  const ValueTables& q_star_;
};

Outcome optimism(const Context&) {
  const TabularMdp mdp = load_mdp_file(testing::data_dir() / "two_state.mdp");
  const ValueTables q_star = optimal_values(mdp);
  const std::int64_t T = 2000;
  const auto params = RandomizedQParams::theorem_schedule(mdp.dims(), T, 0.1, 2.0);
  double total = 0.0;
  double lowest = 1.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const RandomStream root(seed);
    RandomStream env = root.split(0);
    OptimismProbe probe(RandomizedQAgent(mdp.dims(), params, root.split(1), mdp.rewards()), q_star);
    for (std::int64_t t = 0; t < T; ++t) run_episode(mdp, probe, env);
    const double frac = static_cast<double>(probe.optimistic) / static_cast<double>(probe.visits);
    total += frac;
    lowest = std::min(lowest, frac);
  }
  const double avg = total / 10.0;
  return {avg >= 0.9, "mean fraction=" + fmt(avg) + " min seed=" + fmt(lowest) + " (limit 0.9) J=" +
                          std::to_string(params.ensemble_size) + " kappa=" + fmt(params.kappa) +
                          " n0=" + fmt(params.prior_count)};
}

Outcome chain_ordering(const Context&) {
  RunConfig c;
  c.env = "chain15";
  c.episodes = 3000;
  c.seeds = 4;
  c.seed_base = 0;
  for (const char* a : {"randomizedq", "staged-randql", "ucbq", "randql"}) c.agents.push_back({a, {}, std::nullopt});
  const GridResult r = run_grid(c);
  std::map<std::string, double> final;
  std::ostringstream d;
  for (const auto& s : r.summaries) {
    final[s.agent] = s.mean_final;
    d << s.agent << "=" << fmt(s.mean_final) << " ";
  }
  const bool vs_staged = final["randomizedq"] < final["staged-randql"];
  const bool vs_ucb = final["randomizedq"] < final["ucbq"];
  d << "rq<staged=" << (vs_staged ? "yes" : "no") << " rq<ucbq=" << (vs_ucb ? "yes" : "no");
  return {vs_staged && vs_ucb, d.str()};
}

Outcome sublinearity(const Context&) {
  RunConfig c;
  c.env = "grid10";
  c.episodes = 5000;
  c.seeds = 4;
  c.agents.push_back({"randomizedq", {}, std::nullopt});
  const GridResult r = run_grid(c);
  const std::int64_t tenth = c.episodes / 10;
  std::map<std::uint64_t, std::pair<double, double>> per_seed;
  for (const auto& rec : r.records) {
    if (rec.episode <= tenth) per_seed[rec.seed].first += rec.episodic_regret / tenth;
    if (rec.episode > c.episodes - tenth) per_seed[rec.seed].second += rec.episodic_regret / tenth;
  }
  double first = 0.0, last = 0.0;
  for (const auto& [seed, fl] : per_seed) {
    first += fl.first / per_seed.size();
    last += fl.second / per_seed.size();
  }
  return {last <= 0.5 * first, "first 10% mean=" + fmt(first) + " last 10% mean=" + fmt(last) +
                                   " ratio=" + fmt(last / first) + " (limit 0.5)"};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism(const Context& ctx) {
  if (ctx.bench.empty() || ctx.bench == "none" || !fs::exists(ctx.bench)) {
    return {false, "bench executable not available: '" + ctx.bench + "'"};
  }
  fs::create_directories(ctx.scratch);
  const std::string common =
      " --env chain15 --episodes 300 --seeds 3 --seed-base 11 --regret-mode realized";
  std::vector<fs::path> outs;
  const std::vector<std::string> variants{
      " run --agent randomizedq" + common + " --threads 1",
      " run --agent randomizedq" + common + " --threads 1",
      " run --agent randomizedq" + common + " --threads 4",
      " compare --agents randomizedq,ucbq,randql,staged-randql" + common + " --threads 2",
      " compare --agents randomizedq,ucbq,randql,staged-randql" + common + " --threads 3",
  };
  for (std::size_t k = 0; k < variants.size(); ++k) {
    const fs::path out = ctx.scratch / ("determinism_" + std::to_string(k) + ".csv");
    fs::remove(out);
    const std::string cmd = "\"" + ctx.bench + "\"" + variants[k] + " --out \"" + out.string() +
                            "\" > \"" + (ctx.scratch / "determinism.log").string() + "\" 2>&1";
    if (std::system(cmd.c_str()) != 0) return {false, "command failed: " + cmd};
    outs.push_back(out);
  }
  const std::string a = slurp(outs[0]);
  const bool run_same = !a.empty() && a == slurp(outs[1]) && a == slurp(outs[2]);
  const std::string c = slurp(outs[3]);
  const bool compare_same = !c.empty() && c == slurp(outs[4]);
  return {run_same && compare_same, "run bytes=" + std::to_string(a.size()) + " identical=" +
                                        (run_same ? "yes" : "no") + "; compare bytes=" +
                                        std::to_string(c.size()) + " identical=" + (compare_same ? "yes" : "no")};
}

struct Criterion {
  int number;
  double limit_seconds;  // <= 0: no runtime bound
  std::function<Outcome(const Context&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  Context ctx;
  ctx.scratch = fs::temp_directory_path() / "rqbench_acceptance";
  std::string which = "all";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--bench" && i + 1 < args.size()) {
      ctx.bench = args[++i];
    } else if (args[i] == "--scratch" && i + 1 < args.size()) {
      ctx.scratch = args[++i];
    } else {
      which = args[i];
    }
  }

  const std::vector<Criterion> criteria{
      {1, 5, sum_identity},   {2, 60, moment_agreement}, {3, 10, bounds},
      {4, 120, concentration}, {5, 0, solver_oracle},     {6, 30, optimism},
      {7, 300, chain_ordering}, {8, 0, sublinearity},    {9, 0, determinism},
  };

  bool all_pass = true;
  bool ran = false;
  for (const Criterion& c : criteria) {
    if (which != "all" && which != std::to_string(c.number)) continue;
    ran = true;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(ctx);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = fmt(secs) + " s";
    if (c.limit_seconds > 0) {
      timing += " of " + fmt(c.limit_seconds) + " s";
      if (secs > c.limit_seconds) {
        o.pass = false;
        o.details += " runtime over limit";
      }
    }
    all_pass = all_pass && o.pass;
    std::printf("criterion %d: %s  %s  (%s)\n", c.number, o.pass ? "PASS" : "FAIL", o.details.c_str(),
                timing.c_str());
    std::fflush(stdout);
  }
  if (!ran) {
    std::fprintf(stderr, "usage: rqbench_acceptance <1-9|all> [--bench path] [--scratch dir]\n");
    return 2;
  }
  return all_pass ? 0 : 1;
}
