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

#include "rqbench/mdp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rqbench {

namespace {

constexpr double kRowSumTolerance = 1e-12;

std::string where(int h, int s, int a) {
  std::ostringstream out;
  out << "(h=" << h << ", s=" << s << ", a=" << a << ")";
  return out.str();
}

}  // namespace

TabularMdp::TabularMdp(Dimensions dims, int initial_state, std::vector<double> rewards,
                       std::vector<std::vector<Transition>> rows)
    : dims_(dims), initial_state_(initial_state), rewards_(std::move(rewards)) {
  if (dims_.horizon < 1 || dims_.states < 1 || dims_.actions < 1) {
    throw InvalidMdp("MDP dimensions must be positive");
  }
  if (rewards_.size() != dims_.cells()) {
    throw InvalidMdp("reward tensor has " + std::to_string(rewards_.size()) +
                     " entries, expected " + std::to_string(dims_.cells()));
  }
  if (rows.size() != dims_.cells()) {
    throw InvalidMdp("transition tensor has " + std::to_string(rows.size()) +
                     " rows, expected " + std::to_string(dims_.cells()));
  }
  row_offsets_.reserve(rows.size() + 1);
  row_offsets_.push_back(0);
  for (auto& row : rows) {
    std::sort(row.begin(), row.end(),
              [](const Transition& x, const Transition& y) { return x.next < y.next; });
    for (const Transition& t : row) {
      if (t.next < 0 || t.next >= dims_.states) {
        throw InvalidMdp("transition target " + std::to_string(t.next) + " out of range");
      }
      if (t.prob == 0.0) continue;
      if (entries_.size() > row_offsets_.back() && entries_.back().next == t.next) {
        entries_.back().prob += t.prob;
      } else {
        entries_.push_back(t);
      }
    }
    row_offsets_.push_back(entries_.size());
  }
}

TabularMdp TabularMdp::from_dense(Dimensions dims, int initial_state, std::vector<double> rewards,
                                  std::span<const double> dense) {
  const std::size_t cells = dims.cells();
  if (dense.size() != cells * static_cast<std::size_t>(dims.states)) {
    throw InvalidMdp("dense transition tensor has " + std::to_string(dense.size()) +
                     " entries, expected " + std::to_string(cells * dims.states));
  }
  std::vector<std::vector<Transition>> rows(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    for (int next = 0; next < dims.states; ++next) {
      const double p = dense[c * dims.states + next];
      if (p != 0.0) rows[c].push_back({next, p});
    }
  }
  return TabularMdp(dims, initial_state, std::move(rewards), std::move(rows));
}

std::span<const Transition> TabularMdp::row(int h, int s, int a) const {
  const std::size_t c = cell(h, s, a);
  return std::span<const Transition>(entries_).subspan(row_offsets_[c],
                                                       row_offsets_[c + 1] - row_offsets_[c]);
}

double TabularMdp::probability(int h, int s, int a, int next) const {
  for (const Transition& t : row(h, s, a)) {
    if (t.next == next) return t.prob;
    if (t.next > next) break;
  }
  return 0.0;
}

void TabularMdp::check_indices(int h, int s, int a) const {
  if (h < 0 || h >= dims_.horizon) throw std::out_of_range("step index " + std::to_string(h));
  if (s < 0 || s >= dims_.states) throw std::out_of_range("state index " + std::to_string(s));
  if (a < 0 || a >= dims_.actions) throw std::out_of_range("action index " + std::to_string(a));
}

void validate(const TabularMdp& mdp) {
  const int s1 = mdp.initial_state();
  if (s1 < 0 || s1 >= mdp.states()) {
    throw InvalidMdp("initial state " + std::to_string(s1) + " out of range");
  }
  for (int h = 0; h < mdp.horizon(); ++h) {
    for (int s = 0; s < mdp.states(); ++s) {
      for (int a = 0; a < mdp.actions(); ++a) {
        const double r = mdp.reward(h, s, a);
        if (!(r >= 0.0 && r <= 1.0)) {
          std::ostringstream msg;
          msg << "reward out of [0,1] at " << where(h, s, a) << ": " << r;
          throw InvalidMdp(msg.str());
        }
        double sum = 0.0;
        for (const Transition& t : mdp.row(h, s, a)) {
          if (!(t.prob >= 0.0)) {
            std::ostringstream msg;
            msg << "negative transition probability at " << where(h, s, a) << " -> " << t.next
                << ": " << t.prob;
            throw InvalidMdp(msg.str());
          }
          sum += t.prob;
        }
        if (!(std::fabs(sum - 1.0) <= kRowSumTolerance)) {
          std::ostringstream msg;
          msg.precision(17);
          msg << "transition row at " << where(h, s, a) << " sums to " << sum;
          throw InvalidMdp(msg.str());
        }
      }
    }
  }
}

TransitionOutcome sample_transition(const TabularMdp& mdp, int h, int s, int a,
                                    RandomStream& stream) {
  mdp.check_indices(h, s, a);
  const auto row = mdp.row(h, s, a);
  if (row.empty()) throw InvalidMdp("empty transition row at " + where(h, s, a));
  const double u = stream.uniform();
  double cumulative = 0.0;
  for (const Transition& t : row) {
    cumulative += t.prob;
    if (u < cumulative) return {mdp.reward(h, s, a), t.next};
  }
  return {mdp.reward(h, s, a), row.back().next};
}

}  // namespace rqbench
