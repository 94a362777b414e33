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

#ifndef RQBENCH_POLICY_HPP_
#define RQBENCH_POLICY_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace rqbench {

/// Deterministic step-dependent policy: one action per (h, s).
class Policy {
 public:
  Policy(int horizon, int states, int default_action = 0)
      : horizon_(horizon),
        states_(states),
        actions_(static_cast<std::size_t>(horizon) * states, default_action) {}

  [[nodiscard]] int operator()(int h, int s) const { return actions_[index(h, s)]; }
  void set(int h, int s, int a) { actions_[index(h, s)] = a; }

  [[nodiscard]] int horizon() const { return horizon_; }
  [[nodiscard]] int states() const { return states_; }
  [[nodiscard]] std::span<const int> actions() const { return actions_; }

  friend bool operator==(const Policy&, const Policy&) = default;

 private:
  [[nodiscard]] std::size_t index(int h, int s) const {
    return static_cast<std::size_t>(h) * states_ + s;
  }

  int horizon_;
  int states_;
  std::vector<int> actions_;
};

}  // namespace rqbench

#endif  // RQBENCH_POLICY_HPP_
