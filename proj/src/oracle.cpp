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

#include "pccycle/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "pccycle/rng.hpp"

namespace pccycle {

namespace {

constexpr int kPcCycleCap = 12;

struct CycleSearch {
  const EdgeColoredMultigraph& g;
  std::vector<int> path_vertices;
  std::vector<int> path_edges;
  std::vector<bool> on_path;
  std::vector<PcCycle> found;

  explicit CycleSearch(const EdgeColoredMultigraph& graph)
      : g(graph), on_path(graph.vertex_count(), false) {}

  void emit(int closing_edge) {
    PcCycle cycle;
    const int k = static_cast<int>(path_vertices.size());
    std::vector<int> edges = path_edges;
    edges.push_back(closing_edge);
    for (int i = 0; i < k; ++i) {
      const ColoredEdge& e = g.edge(edges[i]);
      cycle.vertices.push_back(g.name_of(path_vertices[i]));
      cycle.edges.push_back(PcCycleEdge{g.name_of(path_vertices[i]),
                                        g.name_of(path_vertices[(i + 1) % k]), e.color});
    }
    found.push_back(canonicalize(cycle));
  }

  void extend() {
    const int anchor = path_vertices.front();
    const int current = path_vertices.back();
    const int last_color = path_edges.empty() ? 0 : g.edge(path_edges.back()).color;
    for (int id : g.incident_edges(current)) {
      const ColoredEdge& e = g.edge(id);
      const int next = (e.u == current) ? e.v : e.u;
      if (!path_edges.empty() && e.color == last_color) continue;
      if (next == anchor) {
        // Closing 2-cycles are enumerated separately; longer closings must
        // also be properly colored across the wrap-around.
        if (path_vertices.size() >= 3 && e.color != g.edge(path_edges.front()).color &&
            path_vertices[1] < path_vertices.back()) {
          emit(id);
        }
        continue;
      }
      if (next < anchor || on_path[next]) continue;
      path_vertices.push_back(next);
      path_edges.push_back(id);
      on_path[next] = true;
      extend();
      on_path[next] = false;
      path_edges.pop_back();
      path_vertices.pop_back();
    }
  }
};

}  // namespace

std::vector<PcCycle> enumerate_pc_cycles(const EdgeColoredMultigraph& g) {
  if (g.vertex_count() > kPcCycleCap) {
    throw std::invalid_argument("PC cycle enumeration is capped at " +
                                std::to_string(kPcCycleCap) + " vertices");
  }
  CycleSearch search{g};

  // 2-cycles: pairs of parallel edges (their colors differ by invariant).
  for (int id1 = 0; id1 < g.edge_count(); ++id1) {
    for (int id2 = id1 + 1; id2 < g.edge_count(); ++id2) {
      const ColoredEdge& a = g.edge(id1);
      const ColoredEdge& b = g.edge(id2);
      const bool parallel = (std::min(a.u, a.v) == std::min(b.u, b.v)) &&
                            (std::max(a.u, a.v) == std::max(b.u, b.v));
      if (!parallel) continue;
      const int u = std::min(a.u, a.v);
      const int v = std::max(a.u, a.v);
      PcCycle cycle;
      cycle.vertices = {g.name_of(u), g.name_of(v)};
      cycle.edges = {PcCycleEdge{g.name_of(u), g.name_of(v), a.color},
                     PcCycleEdge{g.name_of(v), g.name_of(u), b.color}};
      search.found.push_back(canonicalize(cycle));
    }
  }

  for (int s = 0; s < g.vertex_count(); ++s) {
    search.path_vertices = {s};
    search.path_edges.clear();
    search.on_path[s] = true;
    search.extend();
    search.on_path[s] = false;
  }

  for (const PcCycle& cycle : search.found) {
    std::string why;
    if (!validate_pc_cycle(g, cycle, &why)) {
      throw std::logic_error("enumerated cycle failed validation: " + why);
    }
  }
  std::sort(search.found.begin(), search.found.end(),
            [](const PcCycle& a, const PcCycle& b) {
              return canonical_cycle_key(a) < canonical_cycle_key(b);
            });
  return search.found;
}

namespace {

void enumerate_pm_rec(const UncoloredGraph& g, const EdgeSet& e0, std::vector<bool>& covered,
                      std::vector<std::pair<int, int>>& current, int e0_count,
                      std::vector<CountedMatching>& out) {
  int v = -1;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (!covered[i]) {
      v = i;
      break;
    }
  }
  if (v == -1) {
    out.push_back(CountedMatching{Matching{current}, e0_count});
    return;
  }
  covered[v] = true;
  for (int w : g.neighbors(v)) {
    if (covered[w]) continue;
    covered[w] = true;
    current.push_back({v, w});  // v is the lowest uncovered vertex, so v < w
    enumerate_pm_rec(g, e0, covered, current, e0_count + (e0.contains(v, w) ? 1 : 0), out);
    current.pop_back();
    covered[w] = false;
  }
  covered[v] = false;
}

}  // namespace

std::vector<CountedMatching> enumerate_perfect_matchings(const UncoloredGraph& g,
                                                         const EdgeSet& e0, int max_vertices) {
  if (g.vertex_count() > max_vertices) {
    throw std::invalid_argument("perfect matching enumeration is capped at " +
                                std::to_string(max_vertices) + " vertices");
  }
  if (g.vertex_count() % 2 != 0) {
    return {};
  }
  std::vector<CountedMatching> out;
  std::vector<bool> covered(g.vertex_count(), false);
  std::vector<std::pair<int, int>> current;
  enumerate_pm_rec(g, e0, covered, current, 0, out);
  return out;
}

namespace {

void subgraph_counts_rec(const std::vector<std::uint32_t>& masks,
                         const std::vector<int>& sizes, std::size_t from, std::uint32_t used,
                         int total, std::set<int>& out) {
  out.insert(total);
  for (std::size_t i = from; i < masks.size(); ++i) {
    if ((used & masks[i]) == 0) {
      subgraph_counts_rec(masks, sizes, i + 1, used | masks[i], total + sizes[i], out);
    }
  }
}

}  // namespace

std::set<int> pc_cycle_subgraph_edge_counts(const EdgeColoredMultigraph& g) {
  const std::vector<PcCycle> cycles = enumerate_pc_cycles(g);
  std::vector<std::uint32_t> masks;
  std::vector<int> sizes;
  for (const PcCycle& cycle : cycles) {
    std::uint32_t mask = 0;
    for (const std::string& name : cycle.vertices) {
      mask |= 1u << g.index_of(name);
    }
    masks.push_back(mask);
    sizes.push_back(cycle.length());
  }
  std::set<int> out;
  subgraph_counts_rec(masks, sizes, 0, 0, 0, out);
  return out;
}

namespace {

int max_matching_rec(const UncoloredGraph& g, int v, std::vector<bool>& covered) {
  const int n = g.vertex_count();
  while (v < n && covered[v]) ++v;
  if (v == n) return 0;
  covered[v] = true;
  int best = max_matching_rec(g, v + 1, covered);  // leave v unmatched
  for (int w : g.neighbors(v)) {
    if (w < v || covered[w]) continue;
    covered[w] = true;
    best = std::max(best, 1 + max_matching_rec(g, v + 1, covered));
    covered[w] = false;
  }
  covered[v] = false;
  return best;
}

}  // namespace

int maximum_matching_size_bruteforce(const UncoloredGraph& g) {
  if (g.vertex_count() > 14) {
    throw std::invalid_argument("brute-force matching is capped at 14 vertices");
  }
  std::vector<bool> covered(g.vertex_count(), false);
  return max_matching_rec(g, 0, covered);
}

EdgeColoredMultigraph generate_instance(const InstanceGenSpec& spec) {
  if (spec.min_vertices < 0 || spec.min_vertices > spec.max_vertices ||
      spec.min_colors < 1 || spec.min_colors > spec.max_colors) {
    throw std::invalid_argument("instance generator ranges must be nonempty");
  }
  if (spec.edge_prob < 0.0 || spec.edge_prob > 1.0 || spec.parallel_prob < 0.0 ||
      spec.parallel_prob > 1.0) {
    throw std::invalid_argument("instance generator probabilities must lie in [0,1]");
  }
  Rng rng = make_rng(spec.seed);
  const int n = static_cast<int>(uniform_u64(rng, spec.min_vertices, spec.max_vertices));
  const int colors = static_cast<int>(uniform_u64(rng, spec.min_colors, spec.max_colors));
  EdgeColoredMultigraph::Builder b;
  for (int i = 1; i <= n; ++i) {
    b.add_vertex("v" + std::to_string(i));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!bernoulli(rng, spec.edge_prob)) continue;
      const int c = static_cast<int>(uniform_u64(rng, 1, colors));
      b.add_edge("v" + std::to_string(i), "v" + std::to_string(j), c);
      if (colors >= 2 && bernoulli(rng, spec.parallel_prob)) {
        int c2 = static_cast<int>(uniform_u64(rng, 1, colors - 1));
        if (c2 >= c) ++c2;
        b.add_edge("v" + std::to_string(i), "v" + std::to_string(j), c2);
      }
    }
  }
  return b.build();
}

}  // namespace pccycle
