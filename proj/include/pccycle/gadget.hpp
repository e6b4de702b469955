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
// Szeider's gadget construction. Every vertex x of a monochromatic-reduced
// edge-colored multigraph becomes a small uncolored gadget with one color
// port x_q and one selector x'_q per color q seen at x, plus a hub pair
// x''_a, x''_b:
//
//   vertices  {x_q, x'_q : q in chi(x)} + {x''_a, x''_b}
//   edges     {x''_a x''_b} + {x'_q x''_a, x'_q x''_b : q} + {x_q x'_q : q}
//
// The union of the gadgets is G*; its edge set splits into the internal
// edges E1 and the port-to-port edges E2 = {y_q z_q : yz an edge of color q}.
// A perfect matching of G* leaves each gadget matched across either 0 or
// exactly 2 ports of distinct colors, so the E2 edges it selects project to
// a subgraph of the source in which every touched vertex has degree 2 with
// two distinct colors: a disjoint union of properly colored cycles, with one
// source edge per matched E2 edge.

#ifndef PCCYCLE_GADGET_HPP
#define PCCYCLE_GADGET_HPP

#include <string>
#include <vector>

#include "pccycle/graph.hpp"
#include "pccycle/matching.hpp"

namespace pccycle {

enum class GadgetRole { kColorPort, kSelector, kHubA, kHubB };

struct GadgetVertexInfo {
  int source_vertex = -1;  // index into the source graph
  GadgetRole role = GadgetRole::kHubA;
  int color = 0;  // 0 for hubs
};

class GadgetGraph {
 public:
  GadgetGraph() = default;
  GadgetGraph(UncoloredGraph graph, EdgeColoredMultigraph source,
              std::vector<GadgetVertexInfo> roles, std::vector<int> e2_to_source_edge,
              std::vector<int> source_edge_to_e2);

  bool empty() const { return graph_.empty(); }
  const UncoloredGraph& graph() const { return graph_; }
  const EdgeColoredMultigraph& source() const { return source_; }
  const GadgetVertexInfo& role_of(int vertex) const { return roles_.at(vertex); }

  bool is_e2(int edge_id) const { return source_edge_of_.at(edge_id) != -1; }
  int e2_count() const;
  int e1_count() const { return graph_.edge_count() - e2_count(); }
  /// The E2 edges as an EdgeSet over graph()'s vertex indices.
  EdgeSet e2_edge_set() const;
  /// Source edge id of an E2 edge; throws std::invalid_argument for E1 ids.
  int source_edge_of(int edge_id) const;
  /// G* edge id realizing a source edge.
  int e2_edge_of_source(int source_edge_id) const { return e2_of_source_.at(source_edge_id); }

 private:
  UncoloredGraph graph_;
  EdgeColoredMultigraph source_;
  std::vector<GadgetVertexInfo> roles_;
  std::vector<int> e2_of_source_;    // source edge id -> G* edge id
  std::vector<int> source_edge_of_;  // G* edge id -> source edge id, -1 for E1
};

/// Builds G* from a monochromatic-reduced graph. Throws
/// std::invalid_argument if some vertex has |chi(v)| <= 1; the empty graph
/// yields the empty GadgetGraph.
GadgetGraph build_gadget_graph(const EdgeColoredMultigraph& reduced);

/// The canonical all-E1 perfect matching: per gadget, the hub pair plus each
/// port matched to its selector. Throws std::invalid_argument on an empty
/// GadgetGraph.
Matching gadget_internal_matching(const GadgetGraph& gg);

/// Projects a perfect matching of G* to the source edge ids of its matched
/// E2 edges; the result is a PC cycle subgraph of the source. Throws
/// std::invalid_argument unless m is a perfect matching of gg.graph().
std::vector<int> matching_to_pc_cycle_subgraph(const GadgetGraph& gg, const Matching& m);

/// gadget-dump text format: the vertices and edges of G* in the uncolored
/// format, E2 edges annotated with a trailing `e2`.
std::string serialize_gadget(const GadgetGraph& gg);

}  // namespace pccycle

#endif  // PCCYCLE_GADGET_HPP
