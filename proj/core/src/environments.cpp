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

#include "rqbench/environments.hpp"

#include <map>
#include <stdexcept>

namespace rqbench {

namespace {

void add_mass(std::vector<Transition>& row, int next, double p) {
  for (Transition& t : row) {
    if (t.next == next) {
      t.prob += p;
      return;
    }
  }
  row.push_back({next, p});
}

int grid_move(int state, int action, int side) {
  int row = state / side;
  int col = state % side;
  switch (action) {
    case kLeft: col = col > 0 ? col - 1 : col; break;
    case kRight: col = col + 1 < side ? col + 1 : col; break;
    case kUp: row = row > 0 ? row - 1 : row; break;
    case kDown: row = row + 1 < side ? row + 1 : row; break;
    default: throw std::out_of_range("grid action");
  }
  return row * side + col;
}

}  // namespace

TabularMdp make_gridworld(const GridWorldSpec& spec) {
  if (spec.side < 2) throw std::invalid_argument("grid side must be at least 2");
  if (spec.horizon < 1) throw std::invalid_argument("grid horizon must be positive");
  if (!(spec.slip >= 0.0 && spec.slip < 1.0)) {
    throw std::invalid_argument("grid slip probability must be in [0, 1)");
  }
  const int side = spec.side;
  const Dimensions dims{spec.horizon, side * side, 4};
  const int goal = dims.states - 1;

  // The dynamics do not depend on h; build one layer and replicate it.
  std::vector<std::vector<Transition>> layer(static_cast<std::size_t>(dims.states) * 4);
  std::vector<double> layer_rewards(layer.size(), 0.0);
  for (int s = 0; s < dims.states; ++s) {
    for (int a = 0; a < 4; ++a) {
      auto& row = layer[static_cast<std::size_t>(s) * 4 + a];
      if (s == goal) layer_rewards[static_cast<std::size_t>(s) * 4 + a] = 1.0;
      if (s == goal && spec.absorbing_goal) {
        row.push_back({goal, 1.0});
        continue;
      }
      if (spec.slip_excludes_intended) {
        add_mass(row, grid_move(s, a, side), 1.0 - spec.slip);
        for (int other = 0; other < 4; ++other) {
          if (other != a) add_mass(row, grid_move(s, other, side), spec.slip / 3.0);
        }
      } else {
        add_mass(row, grid_move(s, a, side), 1.0 - spec.slip);
        for (int any = 0; any < 4; ++any) {
          add_mass(row, grid_move(s, any, side), spec.slip / 4.0);
        }
      }
    }
  }

  std::vector<std::vector<Transition>> rows;
  std::vector<double> rewards;
  rows.reserve(dims.cells());
  rewards.reserve(dims.cells());
  for (int h = 0; h < dims.horizon; ++h) {
    rows.insert(rows.end(), layer.begin(), layer.end());
    rewards.insert(rewards.end(), layer_rewards.begin(), layer_rewards.end());
  }
  return TabularMdp(dims, 0, std::move(rewards), std::move(rows));
}

TabularMdp make_chain(const ChainSpec& spec) {
  if (spec.length < 2) throw std::invalid_argument("chain length must be at least 2");
  if (spec.horizon < 1) throw std::invalid_argument("chain horizon must be positive");
  if (!(spec.p_success > 0.5 && spec.p_success <= 1.0)) {
    throw std::invalid_argument("chain p_success must be in (0.5, 1]");
  }
  if (!(spec.r_left >= 0.0 && spec.r_left < spec.r_right && spec.r_right <= 1.0)) {
    throw std::invalid_argument("chain rewards must satisfy 0 <= r_left < r_right <= 1");
  }
  const int n = spec.length;
  const Dimensions dims{spec.horizon, n, 2};
  std::vector<std::vector<Transition>> rows;
  std::vector<double> rewards;
  rows.reserve(dims.cells());
  rewards.reserve(dims.cells());
  for (int h = 0; h < dims.horizon; ++h) {
    for (int s = 0; s < n; ++s) {
      const int left = s > 0 ? s - 1 : s;
      const int right = s + 1 < n ? s + 1 : s;
      const double r = s == 0 ? spec.r_left : (s == n - 1 ? spec.r_right : 0.0);
      for (int a = 0; a < 2; ++a) {
        const int intended = a == kRight ? right : left;
        const int opposite = a == kRight ? left : right;
        std::vector<Transition> row;
        add_mass(row, intended, spec.p_success);
        if (spec.p_success < 1.0) add_mass(row, opposite, 1.0 - spec.p_success);
        rows.push_back(std::move(row));
        rewards.push_back(r);
      }
    }
  }
  return TabularMdp(dims, 0, std::move(rewards), std::move(rows));
}

std::vector<std::string> gridworld_state_labels(const GridWorldSpec& spec) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(spec.side) * spec.side);
  for (int row = 1; row <= spec.side; ++row) {
    for (int col = 1; col <= spec.side; ++col) {
      labels.push_back("(" + std::to_string(row) + "," + std::to_string(col) + ")");
    }
  }
  return labels;
}

std::vector<std::string> chain_state_labels(const ChainSpec& spec) {
  std::vector<std::string> labels;
  for (int s = 0; s < spec.length; ++s) labels.push_back("s" + std::to_string(s));
  return labels;
}

namespace {

const std::map<std::string, GridWorldSpec, std::less<>>& grid_presets() {
  static const std::map<std::string, GridWorldSpec, std::less<>> presets = {
      {"grid10", GridWorldSpec{10, 50, 0.2}},
      {"grid20", GridWorldSpec{20, 100, 0.2}},
  };
  return presets;
}

const std::map<std::string, ChainSpec, std::less<>>& chain_presets() {
  static const std::map<std::string, ChainSpec, std::less<>> presets = {
      {"chain15", ChainSpec{15, 30, 0.9, 0.05, 1.0}},
      {"chain30", ChainSpec{30, 50, 0.9, 0.05, 1.0}},
  };
  return presets;
}

}  // namespace

std::vector<std::string> preset_names() { return {"grid10", "grid20", "chain15", "chain30"}; }

bool is_preset(std::string_view name) {
  return grid_presets().contains(name) || chain_presets().contains(name);
}

TabularMdp make_preset(std::string_view name) {
  if (auto it = grid_presets().find(name); it != grid_presets().end()) {
    return make_gridworld(it->second);
  }
  if (auto it = chain_presets().find(name); it != chain_presets().end()) {
    return make_chain(it->second);
  }
  throw std::invalid_argument("unknown environment preset '" + std::string(name) + "'");
}

}  // namespace rqbench
