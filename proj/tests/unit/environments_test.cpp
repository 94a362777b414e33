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

#include <gtest/gtest.h>

#include "rqbench/environments.hpp"
#include "rqbench/mdp.hpp"

namespace rqbench {
namespace {

int count_nonzero_rewards(const TabularMdp& mdp) {
  int n = 0;
  for (const double r : mdp.rewards()) n += r != 0.0;
  return n;
}

TEST(GridWorld, PresetShapes) {
  const TabularMdp g10 = make_preset("grid10");
  EXPECT_EQ(g10.dims(), (Dimensions{50, 100, 4}));
  EXPECT_EQ(g10.initial_state(), 0);
  EXPECT_EQ(make_preset("grid20").dims(), (Dimensions{100, 400, 4}));
  EXPECT_NO_THROW(validate(g10));
}

TEST(GridWorld, RewardOnlyAtGoal) {
  const TabularMdp g = make_preset("grid10");
  EXPECT_EQ(count_nonzero_rewards(g), 4 * 50);
  for (int h = 0; h < 50; h += 7) {
    for (int a = 0; a < 4; ++a) EXPECT_EQ(g.reward(h, 99, a), 1.0);
    EXPECT_EQ(g.reward(h, 98, 0), 0.0);
  }
  EXPECT_EQ(gridworld_state_labels({}).back(), "(10,10)");
}

TEST(GridWorld, CornerAndSlip) {
  const TabularMdp g = make_gridworld({});
  // Left and up from (1,1) stay put: 0.8 intended plus half the slip.
  EXPECT_NEAR(g.probability(0, 0, kLeft, 0), 0.8 + 0.1, 1e-15);
  EXPECT_NEAR(g.probability(0, 0, kLeft, 1), 0.05, 1e-15);
  EXPECT_NEAR(g.probability(0, 0, kLeft, 10), 0.05, 1e-15);
  // Interior cell, right.
  const int s = 5 * 10 + 5;
  EXPECT_NEAR(g.probability(3, s, kRight, s + 1), 0.85, 1e-15);
  EXPECT_NEAR(g.probability(3, s, kRight, s - 1), 0.05, 1e-15);
  EXPECT_NEAR(g.probability(3, s, kRight, s - 10), 0.05, 1e-15);
  EXPECT_NEAR(g.probability(3, s, kRight, s + 10), 0.05, 1e-15);
  for (int h = 0; h < 50; h += 10) {
    for (int st = 0; st < 100; ++st) {
      for (int a = 0; a < 4; ++a) EXPECT_LE(g.row(h, st, a).size(), 4u);
    }
  }
  // Goal is not absorbing by default.
  EXPECT_LT(g.probability(0, 99, kLeft, 99), 1.0);
}

TEST(GridWorld, Variants) {
  GridWorldSpec spec;
  spec.slip_excludes_intended = true;
  spec.absorbing_goal = true;
  const TabularMdp g = make_gridworld(spec);
  const int s = 55;
  EXPECT_NEAR(g.probability(0, s, kRight, s + 1), 0.8, 1e-15);
  EXPECT_NEAR(g.probability(0, s, kRight, s - 1), 0.2 / 3, 1e-15);
  EXPECT_EQ(g.probability(0, 99, kLeft, 99), 1.0);
  EXPECT_NO_THROW(validate(g));
  EXPECT_THROW(make_gridworld({1, 5, 0.2}), std::invalid_argument);
  EXPECT_THROW(make_gridworld({10, 5, 1.0}), std::invalid_argument);
}

TEST(Chain, PresetShapes) {
  const TabularMdp c = make_preset("chain15");
  EXPECT_EQ(c.dims(), (Dimensions{30, 15, 2}));
  EXPECT_EQ(make_preset("chain30").dims(), (Dimensions{50, 30, 2}));
  EXPECT_EQ(c.reward(0, 0, kLeft), 0.05);
  EXPECT_EQ(c.reward(7, 14, kRight), 1.0);
  EXPECT_EQ(c.reward(7, 7, kRight), 0.0);
  EXPECT_EQ(count_nonzero_rewards(c), 2 * 2 * 30);
  EXPECT_NO_THROW(validate(c));
}

TEST(Chain, Dynamics) {
  const TabularMdp c = make_preset("chain15");
  EXPECT_NEAR(c.probability(0, 0, kRight, 1), 0.9, 1e-15);
  EXPECT_NEAR(c.probability(0, 0, kRight, 0), 0.1, 1e-15);
  // Left at the wall stays put; the slip still moves right.
  EXPECT_NEAR(c.probability(0, 0, kLeft, 0), 0.9, 1e-15);
  EXPECT_NEAR(c.probability(0, 0, kLeft, 1), 0.1, 1e-15);
  EXPECT_NEAR(c.probability(0, 14, kRight, 14), 0.9, 1e-15);
  EXPECT_NEAR(c.probability(0, 6, kLeft, 5), 0.9, 1e-15);
  EXPECT_NEAR(c.probability(0, 6, kLeft, 7), 0.1, 1e-15);
  for (int s = 0; s < 15; ++s) EXPECT_LE(c.row(3, s, kLeft).size(), 2u);

  const TabularMdp two = make_chain({2, 4, 0.9, 0.05, 1.0});
  EXPECT_NEAR(two.probability(0, 0, kRight, 1), 0.9, 1e-15);
  EXPECT_NEAR(two.probability(0, 0, kRight, 0), 0.1, 1e-15);
  EXPECT_THROW(make_chain({15, 30, 0.5, 0.05, 1.0}), std::invalid_argument);
  EXPECT_THROW(make_chain({15, 30, 0.9, 1.0, 1.0}), std::invalid_argument);
}

TEST(Presets, Names) {
  for (const auto& name : preset_names()) {
    EXPECT_TRUE(is_preset(name));
    EXPECT_NO_THROW(validate(make_preset(name)));
  }
  EXPECT_FALSE(is_preset("grid11"));
  EXPECT_THROW(make_preset("grid11"), std::invalid_argument);
}

}  // namespace
}  // namespace rqbench
