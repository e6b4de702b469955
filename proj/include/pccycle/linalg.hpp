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

#ifndef PCCYCLE_LINALG_HPP
#define PCCYCLE_LINALG_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pccycle/field.hpp"
#include "pccycle/graph.hpp"
#include "pccycle/rng.hpp"

namespace pccycle {

/// Square matrix over Z_p, row-major residues.
class FpMatrix {
 public:
  FpMatrix(int dim, PrimeField field);

  int dim() const { return dim_; }
  const PrimeField& field() const { return field_; }

  std::uint64_t at(int i, int j) const { return data_[static_cast<std::size_t>(i) * dim_ + j]; }
  void set(int i, int j, std::uint64_t value);

  bool is_skew_symmetric() const;

  static FpMatrix identity(int dim, PrimeField field);

 private:
  int dim_;
  PrimeField field_;
  std::vector<std::uint64_t> data_;
};

/// Determinant by Gaussian elimination with first-nonzero pivoting, O(n^3),
/// exact over Z_p.
std::uint64_t determinant(FpMatrix a);

/// A partition of {0..n-1} into pairs, pairs ascending and sorted by first
/// element, together with the signature of the permutation
/// (p0.first, p0.second, p1.first, ...).
struct PairPartition {
  std::vector<std::pair<int, int>> pairs;
  int sign = 1;
};

/// All (n-1)!! pair partitions of {0..n-1}; n must be even.
std::vector<PairPartition> enumerate_pair_partitions(int n);

/// Pfaffian as the signed sum over pair partitions. Intended as a test
/// oracle: throws std::invalid_argument beyond dim 12 or for non-skew input;
/// odd dimension yields 0.
std::uint64_t pfaffian_bruteforce(const FpMatrix& a);

/// Randomized identity-test parameters. The Schwartz-Zippel bound requires
/// the prime to exceed 4x the degree of the tested polynomial (the matrix
/// dimension here); that is checked where samples are drawn.
struct SZParams {
  std::uint64_t prime = kDefaultPrime;
  int trials = 10;
  std::uint64_t seed = 0;
};

/// A skew-symmetric sample of the Tutte matrix of a graph: one nonzero draw
/// r_ij per edge, stored under the vertex pair that produced it, plus the
/// sign mask of a designated edge set E0. The plain view realizes the Tutte
/// matrix at the draw; the flipped view negates the entries of E0 edges.
class SkewSample {
 public:
  SkewSample(FpMatrix plain, EdgeSet e0_mask,
             std::map<std::pair<int, int>, std::uint64_t> variable_map);

  int dim() const { return plain_.dim(); }
  const PrimeField& field() const { return plain_.field(); }
  const FpMatrix& plain_matrix() const { return plain_; }
  FpMatrix flipped_matrix() const;
  const EdgeSet& e0_mask() const { return e0_; }
  const std::map<std::pair<int, int>, std::uint64_t>& variable_map() const {
    return variables_;
  }

 private:
  FpMatrix plain_;
  EdgeSet e0_;
  std::map<std::pair<int, int>, std::uint64_t> variables_;
};

/// Draws a SkewSample for g with sign mask e0. Requires an even vertex
/// count, e0 a subset of the edges, and field.modulus() > 4 * |V(g)|.
SkewSample sample_tutte(const UncoloredGraph& g, const EdgeSet& e0, const PrimeField& field,
                        Rng& rng);

struct DetComparison {
  bool equal = false;
  std::uint64_t det_plain = 0;
  std::uint64_t det_flipped = 0;
};

/// Compares det of the plain and flipped views on the shared draws.
/// Equality of the underlying polynomials always yields equal; inequality is
/// detected except with probability <= dim/(p-1) per draw.
DetComparison dets_equal(const SkewSample& sample);

}  // namespace pccycle

#endif  // PCCYCLE_LINALG_HPP
