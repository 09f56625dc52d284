/*
 * Copyright 2026 The gwrg-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Counter-based random streams. A stream is addressed by a 128-bit key (one
// per trial) plus three 64-bit lane coordinates, e.g. (round, boundary vertex,
// particle); the fourth counter word enumerates blocks within the stream. Any
// two distinct addresses give independent sequences, so results never depend
// on which worker consumed which stream.

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace gwrg {

struct Seed128 {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  bool operator==(const Seed128&) const = default;
  /// 32 lowercase hex digits.
  std::string hex() const;
};

/// Stable hash of (master seed, experiment name, n, trial index).
Seed128 derive_seed(std::uint64_t master, std::string_view experiment, std::uint64_t n,
                    std::uint64_t trial);

/// Philox4x64 with 10 rounds.
std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> counter,
                                        std::array<std::uint64_t, 2> key);

class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream(Seed128 key, std::uint64_t lane0, std::uint64_t lane1, std::uint64_t lane2)
      : key_{key.lo, key.hi}, counter_{0, lane0, lane1, lane2} {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    if (used_ == buffer_.size()) {
      buffer_ = philox4x64(counter_, key_);
      ++counter_[0];
      used_ = 0;
    }
    return buffer_[used_++];
  }

  /// Unbiased integer in [0, bound) (Lemire's multiply-and-reject).
  std::uint64_t uniform_index(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_;
  std::array<std::uint64_t, 4> buffer_{};
  std::size_t used_ = 4;
};

/// Hands out the streams of one trial.
class StreamSource {
 public:
  explicit StreamSource(Seed128 key) : key_(key) {}
  const Seed128& key() const { return key_; }
  RandomStream stream(std::uint64_t lane0, std::uint64_t lane1 = 0, std::uint64_t lane2 = 0) const {
    return RandomStream(key_, lane0, lane1, lane2);
  }

 private:
  Seed128 key_;
};

/// Poisson(mean) by sequential inversion; exact and platform independent.
/// Means above 500 are rejected (they never arise from bounded degrees).
std::uint64_t sample_poisson(RandomStream& rng, double mean);

}  // namespace gwrg
