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
// Exponential-time ground truth. Everything here is for tests, fixtures and
// the `oracle` CLI subcommand; the size caps fail loudly so these routines
// are never mistaken for production paths.

#ifndef PCCYCLE_ORACLE_HPP
#define PCCYCLE_ORACLE_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "pccycle/graph.hpp"
#include "pccycle/matching.hpp"
#include "pccycle/pc_cycle.hpp"

namespace pccycle {

/// Every properly colored cycle of g, each exactly once up to rotation and
/// reflection, in canonical form sorted by key. Includes the 2-cycles formed
/// by differently colored parallel edges. Throws std::invalid_argument above
/// 12 vertices.
std::vector<PcCycle> enumerate_pc_cycles(const EdgeColoredMultigraph& g);

struct CountedMatching {
  Matching matching;
  int e0_count = 0;
};

/// Every perfect matching of g with |M inter e0|, duplicate-free, branching
/// on the lowest-indexed uncovered vertex. The default cap of 20 vertices
/// may be raised explicitly by callers that know their instance is benign
/// (gadget graphs of small sources enumerate quickly despite their size).
std::vector<CountedMatching> enumerate_perfect_matchings(const UncoloredGraph& g,
                                                         const EdgeSet& e0,
                                                         int max_vertices = 20);

/// The set { r : some family of vertex-disjoint PC cycles of g totals r
/// edges }; always contains 0 (the empty family).
std::set<int> pc_cycle_subgraph_edge_counts(const EdgeColoredMultigraph& g);

/// Maximum matching size by exhaustive branching; small graphs only.
int maximum_matching_size_bruteforce(const UncoloredGraph& g);

struct InstanceGenSpec {
  int min_vertices = 1;
  int max_vertices = 8;
  int min_colors = 1;
  int max_colors = 3;
  double edge_prob = 0.4;
  double parallel_prob = 0.0;
  std::uint64_t seed = 0;
};

/// Random edge-colored multigraph, deterministic per seed. Vertices are
/// named v1..vn; parallel edges are added with a fresh color so the
/// no-duplicate invariant holds by construction.
EdgeColoredMultigraph generate_instance(const InstanceGenSpec& spec);

}  // namespace pccycle

#endif  // PCCYCLE_ORACLE_HPP
