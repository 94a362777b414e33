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

#ifndef RQBENCH_ENVIRONMENTS_HPP_
#define RQBENCH_ENVIRONMENTS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "rqbench/mdp.hpp"

namespace rqbench {

/// Square grid world. Cells are (row, col) with 1-based coordinates; state
/// index is (row - 1) * side + (col - 1). Actions: 0 left, 1 right, 2 up,
/// 3 down. Moves off the grid leave the agent in place.
struct GridWorldSpec {
  int side = 10;
  int horizon = 50;
  double slip = 0.2;
  /// When set, a slip picks uniformly among the three other directions
  /// instead of all four.
  bool slip_excludes_intended = false;
  /// When set, the goal cell keeps the agent forever.
  bool absorbing_goal = false;
};

/// Chain of `length` states with actions 0 left and 1 right. The agent starts
/// at the leftmost state; moves off either end leave it in place.
struct ChainSpec {
  int length = 15;
  int horizon = 30;
  double p_success = 0.9;
  double r_left = 0.05;
  double r_right = 1.0;
};

inline constexpr int kLeft = 0;
inline constexpr int kRight = 1;
inline constexpr int kUp = 2;
inline constexpr int kDown = 3;

TabularMdp make_gridworld(const GridWorldSpec& spec);
TabularMdp make_chain(const ChainSpec& spec);

/// Labels "(row,col)" for every grid state.
std::vector<std::string> gridworld_state_labels(const GridWorldSpec& spec);
std::vector<std::string> chain_state_labels(const ChainSpec& spec);

/// Named configurations: grid10, grid20, chain15, chain30.
std::vector<std::string> preset_names();
bool is_preset(std::string_view name);
/// Throws std::invalid_argument for an unknown name.
TabularMdp make_preset(std::string_view name);

}  // namespace rqbench

#endif  // RQBENCH_ENVIRONMENTS_HPP_
