// Copyright 2026 The pccycle Authors
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
//
// Seed handling and portable uniform draws. std::mt19937_64 output is
// pinned by the standard, and the rejection samplers below avoid the
// implementation-defined std::uniform_*_distribution, so identical seeds
// reproduce identical streams on every platform.

#ifndef PCCYCLE_RNG_HPP
#define PCCYCLE_RNG_HPP

#include <cstdint>
#include <random>

namespace pccycle {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline Rng make_rng(std::uint64_t seed) {
  return Rng{splitmix64(seed)};
}

/// Independent stream for (seed, stream, trial) triples; detectors use one
/// stream per component and one trial index per repetition.
inline Rng make_trial_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
  return Rng{splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ trial)};
}

/// Uniform integer in [lo, hi], unbiased via rejection.
inline std::uint64_t uniform_u64(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;  // hi == UINT64_MAX with lo == 0 not needed here
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + x % span;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Rng& rng, double p) {
  return uniform_unit(rng) < p;
}

}  // namespace pccycle

#endif  // PCCYCLE_RNG_HPP
