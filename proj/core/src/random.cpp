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

#include "rqbench/random.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rqbench {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

void check_shape(double shape, const char* what) {
  if (!(shape > 0.0) || !std::isfinite(shape)) {
    throw std::invalid_argument(std::string(what) + " must be positive and finite, got " +
                                std::to_string(shape));
  }
}

// log of a Gamma(shape) draw for shape >= 1 (Marsaglia and Tsang, 2000).
double log_gamma_large(double shape, RandomStream& stream) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = 0.0;
    double v = 0.0;
    do {
      x = stream.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = stream.uniform_open();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return std::log(d * v);
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return std::log(d * v);
  }
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kPhiloxW0;
      key[1] += kPhiloxW1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
    mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

RandomStream::RandomStream(std::uint64_t seed) : RandomStream(seed, {}) {}

RandomStream::RandomStream(std::uint64_t seed, std::vector<std::uint64_t> path)
    : seed_(seed), path_(std::move(path)) {
  derive_key();
}

void RandomStream::derive_key() {
  std::uint64_t a = mix64(seed_ ^ 0x6A09E667F3BCC908ull);
  std::uint64_t b = mix64(seed_ + 0x3C6EF372FE94F82Bull);
  for (const std::uint64_t label : path_) {
    a = mix64(a ^ mix64(label + 0x9E3779B97F4A7C15ull));
    b = mix64(b + mix64(label ^ 0xA54FF53A5F1D36F1ull) + 0x510E527FADE682D1ull);
  }
  // The path length participates so that [x] and [x, 0] never collide.
  b = mix64(b ^ static_cast<std::uint64_t>(path_.size()));
  key_ = {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32)};
  stream_id_ = b;
}

RandomStream RandomStream::split(std::uint64_t label) const {
  std::vector<std::uint64_t> child = path_;
  child.push_back(label);
  return RandomStream(seed_, std::move(child));
}

void RandomStream::refill() {
  const std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
      static_cast<std::uint32_t>(stream_id_), static_cast<std::uint32_t>(stream_id_ >> 32)};
  const auto out = philox4x32_10(ctr, key_);
  buffer_[0] = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
  buffer_[1] = (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
  buffered_ = 2;
  ++block_;
}

std::uint64_t RandomStream::next_u64() {
  if (buffered_ == 0) refill();
  ++produced_;
  return buffer_[2 - buffered_--];
}

double RandomStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform_open() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::normal() {
  if (has_spare_normal_) {
    has_spare_normal_ = false;
    return spare_normal_;
  }
  double x, y, r2;
  do {
    x = 2.0 * uniform() - 1.0;
    y = 2.0 * uniform() - 1.0;
    r2 = x * x + y * y;
  } while (r2 >= 1.0 || r2 == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(r2) / r2);
  spare_normal_ = y * scale;
  has_spare_normal_ = true;
  return x * scale;
}

double log_gamma_sample(double shape, RandomStream& stream) {
  check_shape(shape, "gamma shape");
  if (shape >= 1.0) return log_gamma_large(shape, stream);
  const double boosted = log_gamma_large(shape + 1.0, stream);
  return boosted + std::log(stream.uniform_open()) / shape;
}

double gamma_sample(double shape, RandomStream& stream) {
  return std::exp(log_gamma_sample(shape, stream));
}

double beta_sample(BetaParams params, RandomStream& stream) {
  check_shape(params.alpha, "beta alpha");
  check_shape(params.beta, "beta beta");
  const double log_x = log_gamma_sample(params.alpha, stream);
  const double log_y = log_gamma_sample(params.beta, stream);
  // x / (x + y) = 1 / (1 + exp(log_y - log_x))
  const double w = 1.0 / (1.0 + std::exp(log_y - log_x));
  constexpr double kLowest = std::numeric_limits<double>::denorm_min();
  constexpr double kHighest = 1.0 - 0x1.0p-53;
  if (w <= 0.0) return kLowest;
  if (w >= 1.0) return kHighest;
  return w;
}

std::size_t categorical_sample(std::span<const double> probs, RandomStream& stream) {
  if (probs.empty()) throw std::invalid_argument("categorical_sample: empty distribution");
  const double u = stream.uniform();
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    cumulative += probs[i];
    last_positive = i;
    if (u < cumulative) return i;
  }
  // Rounding left the cumulative sum just below u.
  return last_positive;
}

}  // namespace rqbench
