/*
 * Copyright 2026 The qcompare Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Counter-based deterministic random streams (Philox4x32-10).
//
// A stream is identified by (seed, stream id). Each 128-bit counter block
// yields four 32-bit words, so any position in any stream is reachable
// without replaying earlier draws; sub-streams for parallel shards are
// derived with fork().

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>

namespace qcompare {

class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += 0x9E3779B9u;
        key[1] += 0xBB67AE85u;
      }
      const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * ctr[2];
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const auto lo0 = static_cast<std::uint32_t>(p0);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const auto lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }
};

class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  // Independent stream for shard/trial `index`, a pure function of
  // (seed, stream, index).
  Rng fork(std::uint64_t index) const {
    return Rng(seed_, mix(stream_ ^ mix(index + 0x632BE59BD9B4E019ull)));
  }

  result_type operator()() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Standard complex normal: real and imaginary parts i.i.d. N(0, 1), drawn
  // by the Box-Muller transform.
  std::complex<double> complex_normal() {
    const double u1 = static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    return {r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2)};
  }

  double normal() { return complex_normal().real(); }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint32_t next_u32() {
    if (index_ == 4) {
      const Philox4x32::Counter ctr = {
          static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
          static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
      const Philox4x32::Key key = {static_cast<std::uint32_t>(seed_),
                                   static_cast<std::uint32_t>(seed_ >> 32)};
      buffer_ = Philox4x32::block(ctr, key);
      ++block_;
      index_ = 0;
    }
    return buffer_[index_++];
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  Philox4x32::Counter buffer_{};
  int index_ = 4;
};

}  // namespace qcompare
