// Copyright 2026 The rbwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <limits>

namespace rbwalk {

/// One step of the splitmix64 generator; also used as a 64-bit mixer.
std::uint64_t splitmix64(std::uint64_t& state);

/// Domain tags for seed derivation so that sequence and noise streams of the
/// same cell never collide.
enum class StreamTag : std::uint64_t { sequence = 0x5345510000000001ULL, noise = 0x4E4F490000000002ULL };

/// Deterministically maps a master seed and a path of coordinates to a 64-bit
/// seed. Each coordinate is folded in with splitmix64, so streams for
/// (master, i, j) do not depend on how many other rows or columns exist.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);

/// xoshiro256** pseudo-random stream. Satisfies UniformRandomBitGenerator.
class Stream {
 public:
  using result_type = std::uint64_t;

  explicit Stream(std::uint64_t seed = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform integer in [0, n) by rejection sampling. n > 0.
  std::uint64_t below(std::uint64_t n);

  /// Standard normal draw (Box-Muller; the second variate is cached).
  double normal();

 private:
  std::array<std::uint64_t, 4> s_{};
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace rbwalk
