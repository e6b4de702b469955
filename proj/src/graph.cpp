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

#include "pccycle/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace pccycle {

namespace {

int lookup(const std::unordered_map<std::string, int>& index, const std::string& name) {
  auto it = index.find(name);
  if (it == index.end()) {
    throw std::invalid_argument("unknown vertex: " + name);
  }
  return it->second;
}

}  // namespace

// --- EdgeColoredMultigraph ---

bool EdgeColoredMultigraph::has_vertex(const std::string& name) const {
  return index_.count(name) != 0;
}

int EdgeColoredMultigraph::index_of(const std::string& name) const {
  return lookup(index_, name);
}

std::set<int> EdgeColoredMultigraph::color_set(int v) const {
  std::set<int> colors;
  for (int id : incidence_.at(v)) {
    colors.insert(edges_[id].color);
  }
  return colors;
}

std::set<int> EdgeColoredMultigraph::color_set(const std::string& name) const {
  return color_set(index_of(name));
}

int EdgeColoredMultigraph::max_color_degree() const {
  int c = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    c = std::max(c, static_cast<int>(color_set(v).size()));
  }
  return c;
}

EdgeColoredMultigraph EdgeColoredMultigraph::induced_subgraph(
    const std::vector<int>& vertices) const {
  std::vector<bool> keep(names_.size(), false);
  for (int v : vertices) {
    keep.at(v) = true;
  }
  Builder b;
  for (int v = 0; v < vertex_count(); ++v) {
    if (keep[v]) {
      b.add_vertex(names_[v]);
    }
  }
  for (const ColoredEdge& e : edges_) {
    if (keep[e.u] && keep[e.v]) {
      b.add_edge(names_[e.u], names_[e.v], e.color);
    }
  }
  return b.build();
}

EdgeColoredMultigraph EdgeColoredMultigraph::without_edge(int edge_id) const {
  if (edge_id < 0 || edge_id >= edge_count()) {
    throw std::invalid_argument("edge id out of range");
  }
  Builder b;
  for (const std::string& name : names_) {
    b.add_vertex(name);
  }
  for (int id = 0; id < edge_count(); ++id) {
    if (id != edge_id) {
      b.add_edge(names_[edges_[id].u], names_[edges_[id].v], edges_[id].color);
    }
  }
  return b.build();
}

std::vector<std::vector<int>> EdgeColoredMultigraph::connected_components() const {
  std::vector<int> comp(names_.size(), -1);
  int count = 0;
  for (int s = 0; s < vertex_count(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int id : incidence_[v]) {
        const ColoredEdge& e = edges_[id];
        int w = (e.u == v) ? e.v : e.u;
        if (comp[w] == -1) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  std::vector<std::vector<int>> result(count);
  for (int v = 0; v < vertex_count(); ++v) {
    result[comp[v]].push_back(v);
  }
  return result;
}

int EdgeColoredMultigraph::Builder::add_vertex(const std::string& name) {
  auto it = g_.index_.find(name);
  if (it != g_.index_.end()) {
    return it->second;
  }
  int idx = static_cast<int>(g_.names_.size());
  g_.names_.push_back(name);
  g_.index_.emplace(name, idx);
  g_.incidence_.emplace_back();
  return idx;
}

void EdgeColoredMultigraph::Builder::add_edge(const std::string& u, const std::string& v,
                                              int color) {
  // Register u before v: first-appearance order must follow the input.
  const int ui = add_vertex(u);
  const int vi = add_vertex(v);
  add_edge(ui, vi, color);
}

void EdgeColoredMultigraph::Builder::add_edge(int u, int v, int color) {
  if (u < 0 || u >= static_cast<int>(g_.names_.size()) || v < 0 ||
      v >= static_cast<int>(g_.names_.size())) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (u == v) {
    throw std::invalid_argument("loop edge at vertex " + g_.names_[u]);
  }
  if (color <= 0) {
    throw std::invalid_argument("edge color must be a positive integer");
  }
  auto key = std::make_tuple(std::min(u, v), std::max(u, v), color);
  if (!seen_.insert(key).second) {
    throw std::invalid_argument("duplicate parallel edge of color " + std::to_string(color) +
                                " between " + g_.names_[u] + " and " + g_.names_[v]);
  }
  int id = static_cast<int>(g_.edges_.size());
  g_.edges_.push_back(ColoredEdge{u, v, color});
  g_.incidence_[u].push_back(id);
  g_.incidence_[v].push_back(id);
}

EdgeColoredMultigraph EdgeColoredMultigraph::Builder::build() {
  return std::move(g_);
}

// --- UncoloredGraph ---

bool UncoloredGraph::has_vertex(const std::string& name) const {
  return index_.count(name) != 0;
}

int UncoloredGraph::index_of(const std::string& name) const {
  return lookup(index_, name);
}

bool UncoloredGraph::has_edge(int u, int v) const {
  return edge_set_.count({std::min(u, v), std::max(u, v)}) != 0;
}

int UncoloredGraph::Builder::add_vertex(const std::string& name) {
  auto it = g_.index_.find(name);
  if (it != g_.index_.end()) {
    return it->second;
  }
  int idx = static_cast<int>(g_.names_.size());
  g_.names_.push_back(name);
  g_.index_.emplace(name, idx);
  g_.adjacency_.emplace_back();
  return idx;
}

void UncoloredGraph::Builder::add_edge(const std::string& u, const std::string& v) {
  const int ui = add_vertex(u);
  const int vi = add_vertex(v);
  add_edge(ui, vi);
}

void UncoloredGraph::Builder::add_edge(int u, int v) {
  if (u < 0 || u >= static_cast<int>(g_.names_.size()) || v < 0 ||
      v >= static_cast<int>(g_.names_.size())) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (u == v) {
    throw std::invalid_argument("loop edge at vertex " + g_.names_[u]);
  }
  std::pair<int, int> key{std::min(u, v), std::max(u, v)};
  if (!g_.edge_set_.insert(key).second) {
    throw std::invalid_argument("duplicate edge between " + g_.names_[u] + " and " +
                                g_.names_[v]);
  }
  g_.edges_.push_back(key);
  g_.adjacency_[u].push_back(v);
  g_.adjacency_[v].push_back(u);
}

UncoloredGraph UncoloredGraph::Builder::build() {
  return std::move(g_);
}

// --- Digraph ---

int Digraph::index_of(const std::string& name) const {
  return lookup(index_, name);
}

bool Digraph::has_vertex(const std::string& name) const {
  return index_.count(name) != 0;
}

std::vector<std::vector<int>> Digraph::strongly_connected_components() const {
  // Kosaraju with explicit stacks.
  const int n = vertex_count();
  std::vector<int> order;
  order.reserve(n);
  std::vector<bool> visited(n, false);
  for (int s = 0; s < n; ++s) {
    if (visited[s]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    visited[s] = true;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < out_[v].size()) {
        int w = out_[v][next++];
        if (!visited[w]) {
          visited[w] = true;
          stack.push_back({w, 0});
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<int> comp(n, -1);
  int count = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != -1) continue;
    std::vector<int> stack{*it};
    comp[*it] = count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : in_[v]) {
        if (comp[w] == -1) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  std::vector<std::vector<int>> result(count);
  for (int v = 0; v < n; ++v) {
    result[comp[v]].push_back(v);
  }
  std::sort(result.begin(), result.end());
  return result;
}

int Digraph::Builder::add_vertex(const std::string& name) {
  auto it = g_.index_.find(name);
  if (it != g_.index_.end()) {
    return it->second;
  }
  int idx = static_cast<int>(g_.names_.size());
  g_.names_.push_back(name);
  g_.index_.emplace(name, idx);
  g_.out_.emplace_back();
  g_.in_.emplace_back();
  return idx;
}

void Digraph::Builder::add_arc(const std::string& u, const std::string& v) {
  const int ui = add_vertex(u);
  const int vi = add_vertex(v);
  add_arc(ui, vi);
}

void Digraph::Builder::add_arc(int u, int v) {
  if (u < 0 || u >= static_cast<int>(g_.names_.size()) || v < 0 ||
      v >= static_cast<int>(g_.names_.size())) {
    throw std::invalid_argument("arc endpoint out of range");
  }
  if (u == v) {
    throw std::invalid_argument("loop arc at vertex " + g_.names_[u]);
  }
  if (!g_.arc_set_.insert({u, v}).second) {
    throw std::invalid_argument("duplicate arc from " + g_.names_[u] + " to " + g_.names_[v]);
  }
  g_.arcs_.push_back({u, v});
  g_.out_[u].push_back(v);
  g_.in_[v].push_back(u);
}

Digraph Digraph::Builder::build() {
  return std::move(g_);
}

// --- EdgeSet ---

void EdgeSet::insert(int u, int v) {
  if (u == v) {
    throw std::invalid_argument("edge set entries must join distinct vertices");
  }
  pairs_.insert({std::min(u, v), std::max(u, v)});
}

bool EdgeSet::contains(int u, int v) const {
  return pairs_.count({std::min(u, v), std::max(u, v)}) != 0;
}

// --- monochromatic reduction ---

ReducedGraph reduce_monochromatic_traced(const EdgeColoredMultigraph& g) {
  EdgeColoredMultigraph current = g;
  std::vector<std::string> deleted;
  for (;;) {
    int victim = -1;
    for (int v = 0; v < current.vertex_count(); ++v) {
      if (current.color_set(v).size() <= 1) {
        victim = v;
        break;
      }
    }
    if (victim == -1) break;
    deleted.push_back(current.name_of(victim));
    std::vector<int> survivors;
    survivors.reserve(current.vertex_count() - 1);
    for (int v = 0; v < current.vertex_count(); ++v) {
      if (v != victim) survivors.push_back(v);
    }
    current = current.induced_subgraph(survivors);
  }
  return ReducedGraph{std::move(current), std::move(deleted)};
}

EdgeColoredMultigraph reduce_monochromatic(const EdgeColoredMultigraph& g) {
  return reduce_monochromatic_traced(g).graph;
}

}  // namespace pccycle
