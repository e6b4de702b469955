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

#include "pccycle/linalg.hpp"

#include <stdexcept>

namespace pccycle {

FpMatrix::FpMatrix(int dim, PrimeField field)
    : dim_(dim), field_(field), data_(static_cast<std::size_t>(dim) * dim, 0) {
  if (dim < 0) {
    throw std::invalid_argument("matrix dimension must be non-negative");
  }
}

void FpMatrix::set(int i, int j, std::uint64_t value) {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_) {
    throw std::invalid_argument("matrix index out of range");
  }
  data_[static_cast<std::size_t>(i) * dim_ + j] = field_.reduce(value);
}

bool FpMatrix::is_skew_symmetric() const {
  for (int i = 0; i < dim_; ++i) {
    if (at(i, i) != 0) return false;
    for (int j = i + 1; j < dim_; ++j) {
      if (at(i, j) != field_.neg(at(j, i))) return false;
    }
  }
  return true;
}

FpMatrix FpMatrix::identity(int dim, PrimeField field) {
  FpMatrix m(dim, field);
  for (int i = 0; i < dim; ++i) {
    m.set(i, i, 1);
  }
  return m;
}

std::uint64_t determinant(FpMatrix a) {
  const PrimeField& f = a.field();
  const int n = a.dim();
  // Work on a raw copy of the rows; `a` is already ours by value.
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[i][j] = a.at(i, j);
    }
  }
  std::uint64_t det = 1;
  bool negate = false;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot == -1) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      negate = !negate;
    }
    det = f.mul(det, m[col][col]);
    const std::uint64_t pivot_inv = f.inv(m[col][col]);
    for (int row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const std::uint64_t factor = f.mul(m[row][col], pivot_inv);
      m[row][col] = 0;
      for (int j = col + 1; j < n; ++j) {
        if (m[col][j] != 0) {
          m[row][j] = f.sub(m[row][j], f.mul(factor, m[col][j]));
        }
      }
    }
  }
  return negate ? f.neg(det) : det;
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

void build_partitions(std::vector<bool>& used, std::vector<std::pair<int, int>>& current,
                      std::vector<PairPartition>& out) {
  const int n = static_cast<int>(used.size());
  int first = -1;
  for (int i = 0; i < n; ++i) {
    if (!used[i]) {
      first = i;
      break;
    }
  }
  if (first == -1) {
    std::vector<int> flat;
    flat.reserve(n);
    for (auto [a, b] : current) {
      flat.push_back(a);
      flat.push_back(b);
    }
    out.push_back(PairPartition{current, permutation_sign(flat)});
    return;
  }
  used[first] = true;
  for (int partner = first + 1; partner < n; ++partner) {
    if (used[partner]) continue;
    used[partner] = true;
    current.push_back({first, partner});
    build_partitions(used, current, out);
    current.pop_back();
    used[partner] = false;
  }
  used[first] = false;
}

}  // namespace

std::vector<PairPartition> enumerate_pair_partitions(int n) {
  if (n < 0 || n % 2 != 0) {
    throw std::invalid_argument("pair partitions need an even ground set");
  }
  std::vector<PairPartition> out;
  std::vector<bool> used(n, false);
  std::vector<std::pair<int, int>> current;
  build_partitions(used, current, out);
  return out;
}

std::uint64_t pfaffian_bruteforce(const FpMatrix& a) {
  if (!a.is_skew_symmetric()) {
    throw std::invalid_argument("pfaffian requires a skew-symmetric matrix");
  }
  const int n = a.dim();
  if (n % 2 != 0) return 0;
  if (n > 12) {
    throw std::invalid_argument("pfaffian oracle is capped at dimension 12");
  }
  const PrimeField& f = a.field();
  std::uint64_t total = 0;
  for (const PairPartition& partition : enumerate_pair_partitions(n)) {
    std::uint64_t term = 1;
    for (auto [i, j] : partition.pairs) {
      term = f.mul(term, a.at(i, j));
      if (term == 0) break;
    }
    total = (partition.sign > 0) ? f.add(total, term) : f.sub(total, term);
  }
  return total;
}

SkewSample::SkewSample(FpMatrix plain, EdgeSet e0_mask,
                       std::map<std::pair<int, int>, std::uint64_t> variable_map)
    : plain_(std::move(plain)), e0_(std::move(e0_mask)), variables_(std::move(variable_map)) {}

FpMatrix SkewSample::flipped_matrix() const {
  FpMatrix flipped = plain_;
  const PrimeField& f = plain_.field();
  for (auto [i, j] : e0_.pairs()) {
    flipped.set(i, j, f.neg(plain_.at(i, j)));
    flipped.set(j, i, f.neg(plain_.at(j, i)));
  }
  return flipped;
}

SkewSample sample_tutte(const UncoloredGraph& g, const EdgeSet& e0, const PrimeField& field,
                        Rng& rng) {
  const int n = g.vertex_count();
  if (n % 2 != 0) {
    throw std::invalid_argument("Tutte sampling requires an even vertex count");
  }
  for (auto [u, v] : e0.pairs()) {
    if (u < 0 || v >= n || !g.has_edge(u, v)) {
      throw std::invalid_argument("E0 must be a subset of the graph's edges");
    }
  }
  if (field.modulus() <= 4 * static_cast<std::uint64_t>(n)) {
    throw std::invalid_argument("field too small: need p > 4 * vertex count");
  }
  FpMatrix m(n, field);
  std::map<std::pair<int, int>, std::uint64_t> variables;
  for (auto [u, v] : g.edges()) {
    const std::uint64_t r = field.uniform_nonzero(rng);
    variables.emplace(std::make_pair(u, v), r);
    m.set(u, v, r);
    m.set(v, u, field.neg(r));
  }
  return SkewSample{std::move(m), e0, std::move(variables)};
}

DetComparison dets_equal(const SkewSample& sample) {
  DetComparison result;
  result.det_plain = determinant(sample.plain_matrix());
  result.det_flipped = determinant(sample.flipped_matrix());
  result.equal = result.det_plain == result.det_flipped;
  return result;
}

}  // namespace pccycle
