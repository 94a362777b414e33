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

#include "rqbench/stage_schedule.hpp"

#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace rqbench {

std::int64_t stage_length(int q, int horizon) {
  if (q < 0) throw std::invalid_argument("stage index must be non-negative");
  if (horizon < 1) throw std::invalid_argument("horizon must be positive");
  if (q == 0) return horizon;
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::pow;
  const cpp_int num = pow(cpp_int(horizon + 1), static_cast<unsigned>(q));
  const cpp_int den = pow(cpp_int(horizon), static_cast<unsigned>(q - 1));
  const cpp_int length = num / den;
  if (length > std::numeric_limits<std::int64_t>::max()) {
    return std::numeric_limits<std::int64_t>::max();
  }
  return length.convert_to<std::int64_t>();
}

StageSchedule::StageSchedule(int horizon) : horizon_(horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be positive");
}

std::int64_t StageSchedule::operator()(int q) {
  while (static_cast<int>(lengths_.size()) <= q) {
    lengths_.push_back(stage_length(static_cast<int>(lengths_.size()), horizon_));
  }
  return lengths_[q];
}

}  // namespace rqbench
