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

#ifndef PCCYCLE_GRAPH_HPP
#define PCCYCLE_GRAPH_HPP

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pccycle {

/// An edge of an edge-colored multigraph; endpoints are vertex indices and
/// the color is a positive integer.
struct ColoredEdge {
  int u = 0;
  int v = 0;
  int color = 0;

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Edge-colored multigraph. Vertices are opaque string tokens kept in
/// first-appearance order; parallel edges are allowed as long as their colors
/// differ; loops are rejected. Immutable after construction.
class EdgeColoredMultigraph {
 public:
  class Builder;

  EdgeColoredMultigraph() = default;

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return names_.empty(); }

  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name_of(int v) const { return names_.at(v); }
  bool has_vertex(const std::string& name) const;
  /// Index of a vertex token; throws std::invalid_argument for unknown names.
  int index_of(const std::string& name) const;

  const std::vector<ColoredEdge>& edges() const { return edges_; }
  const ColoredEdge& edge(int id) const { return edges_.at(id); }
  /// Edge ids incident to vertex v, in edge input order.
  const std::vector<int>& incident_edges(int v) const { return incidence_.at(v); }
  int degree(int v) const { return static_cast<int>(incidence_.at(v).size()); }

  /// The color set chi(v) of edges incident to v; empty for isolated v.
  std::set<int> color_set(int v) const;
  std::set<int> color_set(const std::string& name) const;
  /// max over vertices of |chi(v)|; 0 for the empty graph.
  int max_color_degree() const;

  /// The subgraph induced by the given vertex indices, keeping relative
  /// vertex order and edge input order.
  EdgeColoredMultigraph induced_subgraph(const std::vector<int>& vertices) const;
  /// A copy with one edge removed; vertex set unchanged.
  EdgeColoredMultigraph without_edge(int edge_id) const;
  /// Vertex indices grouped by connected component, each sorted ascending;
  /// components ordered by smallest member.
  std::vector<std::vector<int>> connected_components() const;

  friend bool operator==(const EdgeColoredMultigraph& a, const EdgeColoredMultigraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<ColoredEdge> edges_;
  std::vector<std::vector<int>> incidence_;
};

/// Incremental construction of an EdgeColoredMultigraph. Vertices register in
/// first-appearance order; invariants (no loops, no same-colored parallels,
/// positive colors) are enforced as edges are added.
class EdgeColoredMultigraph::Builder {
 public:
  /// Declares a vertex (idempotent); returns its index.
  int add_vertex(const std::string& name);
  /// Adds an edge, registering unseen endpoints. Throws std::invalid_argument
  /// on loops, non-positive colors, or a duplicate same-colored parallel edge.
  void add_edge(const std::string& u, const std::string& v, int color);
  void add_edge(int u, int v, int color);

  EdgeColoredMultigraph build();

 private:
  EdgeColoredMultigraph g_;
  std::set<std::tuple<int, int, int>> seen_;
};

/// Simple uncolored graph: ordered vertex set, no loops, no parallel edges.
/// Immutable after construction.
class UncoloredGraph {
 public:
  class Builder;

  UncoloredGraph() = default;

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return names_.empty(); }

  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name_of(int v) const { return names_.at(v); }
  bool has_vertex(const std::string& name) const;
  int index_of(const std::string& name) const;

  /// Edges as normalized (min,max) index pairs in input order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  bool has_edge(int u, int v) const;

  friend bool operator==(const UncoloredGraph& a, const UncoloredGraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::pair<int, int>> edges_;
  std::set<std::pair<int, int>> edge_set_;
  std::vector<std::vector<int>> adjacency_;
};

class UncoloredGraph::Builder {
 public:
  int add_vertex(const std::string& name);
  /// Throws std::invalid_argument on loops and duplicate edges.
  void add_edge(const std::string& u, const std::string& v);
  void add_edge(int u, int v);

  UncoloredGraph build();

 private:
  UncoloredGraph g_;
};

/// Directed graph without loops; arcs are ordered pairs.
class Digraph {
 public:
  class Builder;

  Digraph() = default;

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  bool empty() const { return names_.empty(); }

  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name_of(int v) const { return names_.at(v); }
  int index_of(const std::string& name) const;
  bool has_vertex(const std::string& name) const;

  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  const std::vector<int>& out_neighbors(int v) const { return out_.at(v); }
  const std::vector<int>& in_neighbors(int v) const { return in_.at(v); }

  /// Strongly connected components; each sorted ascending, components ordered
  /// by smallest member.
  std::vector<std::vector<int>> strongly_connected_components() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::pair<int, int>> arcs_;
  std::set<std::pair<int, int>> arc_set_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

class Digraph::Builder {
 public:
  int add_vertex(const std::string& name);
  /// Throws std::invalid_argument on loops and duplicate arcs.
  void add_arc(const std::string& u, const std::string& v);
  void add_arc(int u, int v);

  Digraph build();

 private:
  Digraph g_;
};

/// A set of unordered vertex-index pairs, used for the designated edge sets
/// (E0, E2) of the parity machinery.
class EdgeSet {
 public:
  EdgeSet() = default;

  void insert(int u, int v);
  bool contains(int u, int v) const;
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::set<std::pair<int, int>>& pairs() const { return pairs_; }

 private:
  std::set<std::pair<int, int>> pairs_;
};

/// Deletes monochromatic vertices (|chi(v)| <= 1, which includes isolated
/// vertices) until none remain. The fixed point is independent of deletion
/// order; any PC cycle of the input survives in the result.
EdgeColoredMultigraph reduce_monochromatic(const EdgeColoredMultigraph& g);

struct ReducedGraph {
  EdgeColoredMultigraph graph;
  std::vector<std::string> deleted;  // deletion order
};

/// Same as reduce_monochromatic but records the deleted vertices in order.
ReducedGraph reduce_monochromatic_traced(const EdgeColoredMultigraph& g);

}  // namespace pccycle

#endif  // PCCYCLE_GRAPH_HPP
