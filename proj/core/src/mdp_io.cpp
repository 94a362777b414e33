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

#include "rqbench/mdp_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace rqbench {

namespace {

class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  bool next(std::string& token) {
    for (;;) {
      if (line_ >> token) return true;
      std::string raw;
      if (!std::getline(in_, raw)) return false;
      if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      line_.clear();
      line_.str(raw);
    }
  }

  double number(const char* what) {
    std::string token;
    if (!next(token)) throw InvalidMdp(std::string("unexpected end of MDP file reading ") + what);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw InvalidMdp("malformed number '" + token + "' in " + what);
    return value;
  }

  int integer(const char* what) {
    const double v = number(what);
    if (v != static_cast<double>(static_cast<int>(v))) {
      throw InvalidMdp(std::string(what) + " must be an integer");
    }
    return static_cast<int>(v);
  }

 private:
  std::istream& in_;
  std::istringstream line_;
};

}  // namespace

TabularMdp read_mdp_text(std::istream& in) {
  TokenReader reader(in);
  Dimensions dims{};
  dims.horizon = reader.integer("H");
  dims.states = reader.integer("S");
  dims.actions = reader.integer("A");
  const int s1 = reader.integer("s1");
  if (dims.horizon < 1 || dims.states < 1 || dims.actions < 1) {
    throw InvalidMdp("MDP header dimensions must be positive");
  }
  std::vector<double> rewards(dims.cells());
  for (double& r : rewards) r = reader.number("rewards");
  std::vector<double> dense(dims.cells() * dims.states);
  for (double& p : dense) p = reader.number("transitions");
  std::string extra;
  if (reader.next(extra)) throw InvalidMdp("trailing data in MDP file: '" + extra + "'");
  TabularMdp mdp = TabularMdp::from_dense(dims, s1, std::move(rewards), dense);
  validate(mdp);
  return mdp;
}

TabularMdp load_mdp_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidMdp("cannot open MDP file " + path.string());
  return read_mdp_text(in);
}

void write_mdp_text(const TabularMdp& mdp, std::ostream& out) {
  const Dimensions& d = mdp.dims();
  char buf[32];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf;
  };
  out << d.horizon << ' ' << d.states << ' ' << d.actions << ' ' << mdp.initial_state() << '\n';
  out << "# rewards\n";
  for (int h = 0; h < d.horizon; ++h) {
    for (int s = 0; s < d.states; ++s) {
      for (int a = 0; a < d.actions; ++a) {
        if (a > 0) out << ' ';
        put(mdp.reward(h, s, a));
      }
      out << '\n';
    }
  }
  out << "# transitions\n";
  for (int h = 0; h < d.horizon; ++h) {
    for (int s = 0; s < d.states; ++s) {
      for (int a = 0; a < d.actions; ++a) {
        for (int next = 0; next < d.states; ++next) {
          if (next > 0) out << ' ';
          put(mdp.probability(h, s, a, next));
        }
        out << '\n';
      }
    }
  }
}

}  // namespace rqbench
