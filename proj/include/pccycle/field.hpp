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

#ifndef PCCYCLE_FIELD_HPP
#define PCCYCLE_FIELD_HPP

#include <cstdint>

#include "pccycle/rng.hpp"

namespace pccycle {

/// Default modulus: the Mersenne prime 2^61 - 1. Large enough that the
/// polynomial identity tests in this project have negligible per-trial
/// error, and it admits a fast reduction.
inline constexpr std::uint64_t kDefaultPrime = (1ULL << 61) - 1;

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Smallest prime strictly greater than n.
std::uint64_t smallest_prime_above(std::uint64_t n);

/// Arithmetic in Z_p for an odd prime p < 2^62. Elements are residues in
/// [0, p) stored as std::uint64_t.
class PrimeField {
 public:
  /// Throws std::invalid_argument unless p is an odd prime below 2^62.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    if (p_ == kDefaultPrime) {
      // Mersenne reduction: x mod (2^61-1) from the low/high 61-bit halves.
      std::uint64_t lo = static_cast<std::uint64_t>(prod & kDefaultPrime);
      std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
      std::uint64_t r = lo + hi;
      if (r >= p_) r -= p_;
      if (r >= p_) r -= p_;
      return r;
    }
    return static_cast<std::uint64_t>(prod % p_);
  }

  std::uint64_t pow(std::uint64_t base, std::uint64_t exponent) const;

  /// Multiplicative inverse; throws std::invalid_argument for 0.
  std::uint64_t inv(std::uint64_t a) const;

  /// Canonical residue of a possibly out-of-range value.
  std::uint64_t reduce(std::uint64_t a) const { return a % p_; }

  /// Uniform draw from [1, p), i.e. from S = F \ {0}.
  std::uint64_t uniform_nonzero(Rng& rng) const { return uniform_u64(rng, 1, p_ - 1); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

}  // namespace pccycle

#endif  // PCCYCLE_FIELD_HPP
