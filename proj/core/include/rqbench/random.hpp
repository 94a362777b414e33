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

#ifndef RQBENCH_RANDOM_HPP_
#define RQBENCH_RANDOM_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rqbench {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3"). Exposed for known-answer testing.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/// Deterministic, splittable random stream.
///
/// A stream is identified by a 64-bit seed and a path of integer labels; the
/// pair is hashed into a Philox key and a 64-bit stream id, and draws are the
/// Philox outputs for consecutive counters. Splitting depends only on
/// (seed, path), never on how many values the parent has produced, so
/// children can be handed to workers in any order.
///
/// A stream is single-owner. Copying it duplicates the sequence.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  /// Child stream whose path is this path extended by `label`.
  [[nodiscard]] RandomStream split(std::uint64_t label) const;

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Uniform on the open interval (0, 1).
  double uniform_open();

  /// Standard normal draw (Marsaglia polar method).
  double normal();

  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] std::span<const std::uint64_t> path() const { return path_; }
  [[nodiscard]] std::uint64_t draws() const { return produced_; }

 private:
  RandomStream(std::uint64_t seed, std::vector<std::uint64_t> path);
  void derive_key();
  void refill();

  std::uint64_t seed_;
  std::vector<std::uint64_t> path_;
  std::array<std::uint32_t, 2> key_{};
  std::uint64_t stream_id_ = 0;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  std::size_t buffered_ = 0;
  std::uint64_t produced_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_normal_ = false;
};

struct BetaParams {
  double alpha;
  double beta;
};

/// Gamma(shape, 1) draw. Marsaglia-Tsang squeeze for shape >= 1, boosted
/// through Gamma(shape + 1) * U^(1/shape) below 1.
double gamma_sample(double shape, RandomStream& stream);

/// Natural log of a Gamma(shape, 1) draw. Stays finite for shapes far below
/// 1, where the draw itself can underflow to zero.
double log_gamma_sample(double shape, RandomStream& stream);

/// Beta(alpha, beta) draw as X / (X + Y) with independent Gamma variates,
/// evaluated from their logs. Exact 0 or 1 is moved to the nearest
/// representable interior value, so the result is always in (0, 1).
double beta_sample(BetaParams params, RandomStream& stream);

/// Inverse-CDF draw over `probs` scanned in increasing index order.
std::size_t categorical_sample(std::span<const double> probs, RandomStream& stream);

}  // namespace rqbench

#endif  // RQBENCH_RANDOM_HPP_
