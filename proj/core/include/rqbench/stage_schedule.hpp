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

#ifndef RQBENCH_STAGE_SCHEDULE_HPP_
#define RQBENCH_STAGE_SCHEDULE_HPP_

#include <cstdint>
#include <vector>

namespace rqbench {

/// Length of stage q: floor((1 + 1/H)^q * H), computed in exact integer
/// arithmetic as floor((H + 1)^q / H^(q - 1)). Saturates at INT64_MAX.
std::int64_t stage_length(int q, int horizon);

/// Memoised stage lengths for one horizon.
class StageSchedule {
 public:
  explicit StageSchedule(int horizon);

  std::int64_t operator()(int q);
  [[nodiscard]] int horizon() const { return horizon_; }

 private:
  int horizon_;
  std::vector<std::int64_t> lengths_;
};

}  // namespace rqbench

#endif  // RQBENCH_STAGE_SCHEDULE_HPP_
