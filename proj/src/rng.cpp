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

#include "gwrg/rng.hpp"

#include <cmath>
#include <cstdio>

#include "gwrg/error.hpp"

namespace gwrg {

namespace {

constexpr std::uint64_t kPhiloxM0 = 0xD2E7470EE14C6C93ull;
constexpr std::uint64_t kPhiloxM1 = 0xCA5A826395121157ull;
constexpr std::uint64_t kPhiloxW0 = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kPhiloxW1 = 0xBB67AE8584CAA73Bull;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Two independently keyed SplitMix-style absorbers folded together at the end.
class Hasher128 {
 public:
  void absorb(std::uint64_t x) {
    a_ = mix64(a_ ^ (x + 0x9e3779b97f4a7c15ull));
    b_ = mix64(b_ + ((x << 29) | (x >> 35)) + 0x6a09e667f3bcc909ull);
  }
  void absorb(std::string_view s) {
    absorb(s.size());
    std::uint64_t word = 0;
    std::size_t k = 0;
    for (unsigned char c : s) {
      word |= static_cast<std::uint64_t>(c) << (8 * k);
      if (++k == 8) {
        absorb(word);
        word = 0;
        k = 0;
      }
    }
    if (k) absorb(word);
  }
  Seed128 finish() const {
    return {mix64(a_ ^ mix64(b_)), mix64((b_ + 0x3c6ef372fe94f82bull) ^ a_)};
  }

 private:
  std::uint64_t a_ = 0x243f6a8885a308d3ull;
  std::uint64_t b_ = 0x13198a2e03707344ull;
};

}  // namespace

std::string Seed128::hex() const {
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(hi),
                static_cast<unsigned long long>(lo));
  return buf;
}

Seed128 derive_seed(std::uint64_t master, std::string_view experiment, std::uint64_t n,
                    std::uint64_t trial) {
  Hasher128 h;
  h.absorb(master);
  h.absorb(experiment);
  h.absorb(n);
  h.absorb(trial);
  return h.finish();
}

std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> ctr,
                                        std::array<std::uint64_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kPhiloxW0;
      key[1] += kPhiloxW1;
    }
    std::uint64_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
    mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

std::uint64_t RandomStream::uniform_index(std::uint64_t bound) {
  std::uint64_t x = (*this)();
  unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = (*this)();
      m = static_cast<unsigned __int128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t sample_poisson(RandomStream& rng, double mean) {
  if (!(mean >= 0.0) || mean > 500.0) {
    throw UsageError("Poisson mean out of supported range");
  }
  if (mean == 0.0) {
    return 0;
  }
  const double u = rng.uniform01();
  double p = std::exp(-mean);
  double cdf = p;
  std::uint64_t k = 0;
  while (u >= cdf) {
    ++k;
    p *= mean / static_cast<double>(k);
    cdf += p;
    if (p == 0.0 && cdf <= u) {
      break;  // u sits in the rounding gap above the computed CDF
    }
  }
  return k;
}

}  // namespace gwrg
