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

#include "pccycle/gadget.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pccycle {

GadgetGraph::GadgetGraph(UncoloredGraph graph, EdgeColoredMultigraph source,
                         std::vector<GadgetVertexInfo> roles,
                         std::vector<int> e2_to_source_edge, std::vector<int> source_edge_to_e2)
    : graph_(std::move(graph)),
      source_(std::move(source)),
      roles_(std::move(roles)),
      e2_of_source_(std::move(source_edge_to_e2)),
      source_edge_of_(std::move(e2_to_source_edge)) {}

int GadgetGraph::e2_count() const {
  return static_cast<int>(std::count_if(source_edge_of_.begin(), source_edge_of_.end(),
                                        [](int id) { return id != -1; }));
}

EdgeSet GadgetGraph::e2_edge_set() const {
  EdgeSet e2;
  for (int id = 0; id < graph_.edge_count(); ++id) {
    if (is_e2(id)) {
      e2.insert(graph_.edges()[id].first, graph_.edges()[id].second);
    }
  }
  return e2;
}

int GadgetGraph::source_edge_of(int edge_id) const {
  const int source_id = source_edge_of_.at(edge_id);
  if (source_id == -1) {
    throw std::invalid_argument("edge is in E1, not E2");
  }
  return source_id;
}

namespace {

std::string port_name(const std::string& source, int color) {
  return source + ":p:" + std::to_string(color);
}

std::string selector_name(const std::string& source, int color) {
  return source + ":s:" + std::to_string(color);
}

}  // namespace

GadgetGraph build_gadget_graph(const EdgeColoredMultigraph& reduced) {
  for (int v = 0; v < reduced.vertex_count(); ++v) {
    if (reduced.color_set(v).size() <= 1) {
      throw std::invalid_argument("gadget input must be monochromatic-reduced; vertex " +
                                  reduced.name_of(v) + " sees at most one color");
    }
  }

  UncoloredGraph::Builder b;
  std::vector<GadgetVertexInfo> roles;
  for (int x = 0; x < reduced.vertex_count(); ++x) {
    const std::string& name = reduced.name_of(x);
    const std::set<int> colors = reduced.color_set(x);
    for (int q : colors) {
      b.add_vertex(port_name(name, q));
      roles.push_back({x, GadgetRole::kColorPort, q});
      b.add_vertex(selector_name(name, q));
      roles.push_back({x, GadgetRole::kSelector, q});
    }
    b.add_vertex(name + ":ha");
    roles.push_back({x, GadgetRole::kHubA, 0});
    b.add_vertex(name + ":hb");
    roles.push_back({x, GadgetRole::kHubB, 0});
    b.add_edge(name + ":ha", name + ":hb");
    for (int q : colors) {
      b.add_edge(selector_name(name, q), name + ":ha");
      b.add_edge(selector_name(name, q), name + ":hb");
      b.add_edge(port_name(name, q), selector_name(name, q));
    }
  }

  std::vector<int> e2_of_source(reduced.edge_count(), -1);
  std::map<int, int> source_of_e2;
  {
    // E1 edges are in place; E2 edges follow in source input order.
    int next_edge_id = 0;
    for (int x = 0; x < reduced.vertex_count(); ++x) {
      next_edge_id += 1 + 3 * static_cast<int>(reduced.color_set(x).size());
    }
    for (int id = 0; id < reduced.edge_count(); ++id) {
      const ColoredEdge& e = reduced.edges()[id];
      b.add_edge(port_name(reduced.name_of(e.u), e.color),
                 port_name(reduced.name_of(e.v), e.color));
      e2_of_source[id] = next_edge_id;
      source_of_e2[next_edge_id] = id;
      ++next_edge_id;
    }
  }

  UncoloredGraph graph = b.build();
  std::vector<int> source_edge_of(graph.edge_count(), -1);
  for (auto [gadget_edge, source_edge] : source_of_e2) {
    source_edge_of[gadget_edge] = source_edge;
  }
  return GadgetGraph{std::move(graph), reduced, std::move(roles), std::move(source_edge_of),
                     std::move(e2_of_source)};
}

Matching gadget_internal_matching(const GadgetGraph& gg) {
  if (gg.empty()) {
    throw std::invalid_argument("no internal matching of an empty gadget graph");
  }
  const UncoloredGraph& graph = gg.graph();
  const EdgeColoredMultigraph& source = gg.source();
  Matching m;
  for (int x = 0; x < source.vertex_count(); ++x) {
    const std::string& name = source.name_of(x);
    const int ha = graph.index_of(name + ":ha");
    const int hb = graph.index_of(name + ":hb");
    m.edges.push_back({std::min(ha, hb), std::max(ha, hb)});
    for (int q : source.color_set(x)) {
      const int port = graph.index_of(port_name(name, q));
      const int sel = graph.index_of(selector_name(name, q));
      m.edges.push_back({std::min(port, sel), std::max(port, sel)});
    }
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

std::vector<int> matching_to_pc_cycle_subgraph(const GadgetGraph& gg, const Matching& m) {
  validate_matching(gg.graph(), m);
  if (!m.is_perfect(gg.graph())) {
    throw std::invalid_argument("matching does not cover the gadget graph");
  }
  std::vector<int> source_edges;
  for (int id = 0; id < gg.graph().edge_count(); ++id) {
    const auto [u, v] = gg.graph().edges()[id];
    if (gg.is_e2(id) && m.contains(u, v)) {
      source_edges.push_back(gg.source_edge_of(id));
    }
  }
  return source_edges;
}

std::string serialize_gadget(const GadgetGraph& gg) {
  std::ostringstream out;
  for (const std::string& name : gg.graph().vertex_names()) {
    out << "vertex " << name << "\n";
  }
  for (int id = 0; id < gg.graph().edge_count(); ++id) {
    const auto [u, v] = gg.graph().edges()[id];
    out << gg.graph().name_of(u) << " " << gg.graph().name_of(v);
    if (gg.is_e2(id)) {
      out << " e2";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace pccycle
