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

#ifndef PCCYCLE_PC_CYCLE_HPP
#define PCCYCLE_PC_CYCLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pccycle/graph.hpp"

namespace pccycle {

/// One step of a cycle: the edge leaving vertices[i] towards vertices[i+1].
struct PcCycleEdge {
  std::string u;
  std::string v;
  int color = 0;

  friend bool operator==(const PcCycleEdge&, const PcCycleEdge&) = default;
};

/// A properly colored cycle: a cyclic vertex sequence without repeats, with
/// edges[i] joining vertices[i] and vertices[i+1 mod k], and no two cyclically
/// adjacent edges sharing a color. In a multigraph the shortest case is a
/// 2-cycle through a pair of differently colored parallel edges.
struct PcCycle {
  std::vector<std::string> vertices;
  std::vector<PcCycleEdge> edges;

  int length() const { return static_cast<int>(vertices.size()); }
  bool odd() const { return length() % 2 == 1; }

  friend bool operator==(const PcCycle&, const PcCycle&) = default;
};

/// Checks the PcCycle invariants against a host graph: every edge exists in
/// g with the stated color, the sequences interlock, no vertex repeats, and
/// adjacent edges (wrap-around included) have distinct colors. On failure
/// returns false and, when `why` is non-null, stores the reason.
bool validate_pc_cycle(const EdgeColoredMultigraph& g, const PcCycle& cycle,
                       std::string* why = nullptr);

/// Rotation/reflection-invariant key; two PcCycles describe the same cycle
/// iff their keys match.
std::string canonical_cycle_key(const PcCycle& cycle);

/// Normalizes to the traversal that realizes the canonical key.
PcCycle canonicalize(const PcCycle& cycle);

/// Splits an edge-id set into the PC cycles it consists of. Returns
/// std::nullopt unless every touched vertex has degree exactly 2 with two
/// distinct incident colors, i.e. unless the set is a PC cycle subgraph.
std::optional<std::vector<PcCycle>> decompose_pc_cycle_subgraph(
    const EdgeColoredMultigraph& g, const std::vector<int>& edge_ids);

}  // namespace pccycle

#endif  // PCCYCLE_PC_CYCLE_HPP
