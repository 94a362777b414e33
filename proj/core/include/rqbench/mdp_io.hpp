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

#ifndef RQBENCH_MDP_IO_HPP_
#define RQBENCH_MDP_IO_HPP_

#include <filesystem>
#include <iosfwd>

#include "rqbench/mdp.hpp"

namespace rqbench {

// Plain-text tensor format. Whitespace-separated tokens; '#' starts a
// comment that runs to the end of the line.
//
//   H S A s1
//   r[h][s][a]        H*S*A values, row-major (h slowest, a fastest)
//   P[h][s][a][s']    H*S*A*S values, row-major (s' fastest)
//
// Indices are zero-based. The loaded MDP is validated before it is returned.

TabularMdp read_mdp_text(std::istream& in);
TabularMdp load_mdp_file(const std::filesystem::path& path);

/// Writes the dense form with 17 significant digits, so that
/// read_mdp_text(write_mdp_text(m)) reproduces m exactly.
void write_mdp_text(const TabularMdp& mdp, std::ostream& out);

}  // namespace rqbench

#endif  // RQBENCH_MDP_IO_HPP_
