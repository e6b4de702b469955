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

#ifndef PCCYCLE_MATCHING_HPP
#define PCCYCLE_MATCHING_HPP

#include <utility>
#include <vector>

#include "pccycle/graph.hpp"

namespace pccycle {

/// A set of vertex-disjoint edges, stored as normalized (min,max) index
/// pairs sorted ascending.
struct Matching {
  std::vector<std::pair<int, int>> edges;

  int size() const { return static_cast<int>(edges.size()); }
  bool is_perfect(const UncoloredGraph& g) const {
    return 2 * size() == g.vertex_count();
  }
  bool contains(int u, int v) const;
};

enum class Parity { kEven, kOdd };

/// Parity of |M inter E0|.
Parity parity(const Matching& m, const EdgeSet& e0);

/// Throws std::invalid_argument unless m's edges exist in g and are
/// vertex-disjoint.
void validate_matching(const UncoloredGraph& g, const Matching& m);

/// Maximum-cardinality matching via Edmonds' blossom algorithm, O(V^3).
/// Deterministic: vertices and adjacency are scanned in input order.
Matching maximum_matching(const UncoloredGraph& g);

}  // namespace pccycle

#endif  // PCCYCLE_MATCHING_HPP
