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

#include "pccycle/pc_cycle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pccycle {

namespace {

bool edge_in_graph(const EdgeColoredMultigraph& g, const std::string& u, const std::string& v,
                   int color) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) return false;
  const int ui = g.index_of(u);
  const int vi = g.index_of(v);
  for (int id : g.incident_edges(ui)) {
    const ColoredEdge& e = g.edge(id);
    if (e.color == color && ((e.u == ui && e.v == vi) || (e.u == vi && e.v == ui))) {
      return true;
    }
  }
  return false;
}

bool fail(std::string* why, const std::string& reason) {
  if (why != nullptr) *why = reason;
  return false;
}

// Renders one traversal as a whitespace-joined token sequence; vertex names
// are whitespace-free, so the rendering is unambiguous.
std::string render_traversal(const std::vector<std::string>& vs, const std::vector<int>& cs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    out << vs[i] << ' ' << cs[i] << ' ';
  }
  return out.str();
}

}  // namespace

bool validate_pc_cycle(const EdgeColoredMultigraph& g, const PcCycle& cycle, std::string* why) {
  const int k = cycle.length();
  if (k < 2) return fail(why, "cycle length must be at least 2");
  if (static_cast<int>(cycle.edges.size()) != k) {
    return fail(why, "edge count must equal vertex count");
  }
  std::set<std::string> seen(cycle.vertices.begin(), cycle.vertices.end());
  if (static_cast<int>(seen.size()) != k) return fail(why, "repeated vertex");
  for (int i = 0; i < k; ++i) {
    const PcCycleEdge& e = cycle.edges[i];
    const std::string& a = cycle.vertices[i];
    const std::string& b = cycle.vertices[(i + 1) % k];
    const bool joins = (e.u == a && e.v == b) || (e.u == b && e.v == a);
    if (!joins) {
      return fail(why, "edge " + std::to_string(i) + " does not join consecutive vertices");
    }
    if (!edge_in_graph(g, e.u, e.v, e.color)) {
      return fail(why, "edge " + e.u + "-" + e.v + " of color " + std::to_string(e.color) +
                           " is not in the graph");
    }
    if (e.color == cycle.edges[(i + 1) % k].color) {
      return fail(why, "adjacent edges share color " + std::to_string(e.color));
    }
  }
  return true;
}

std::string canonical_cycle_key(const PcCycle& cycle) {
  const PcCycle canon = canonicalize(cycle);
  std::vector<int> colors;
  colors.reserve(canon.edges.size());
  for (const PcCycleEdge& e : canon.edges) {
    colors.push_back(e.color);
  }
  return render_traversal(canon.vertices, colors);
}

PcCycle canonicalize(const PcCycle& cycle) {
  const int k = cycle.length();
  if (k == 0) return cycle;
  std::vector<std::string> best_vs;
  std::vector<int> best_cs;
  std::string best_key;
  for (int rotation = 0; rotation < k; ++rotation) {
    for (int direction : {+1, -1}) {
      std::vector<std::string> vs(k);
      std::vector<int> cs(k);
      for (int i = 0; i < k; ++i) {
        if (direction == +1) {
          vs[i] = cycle.vertices[(rotation + i) % k];
          cs[i] = cycle.edges[(rotation + i) % k].color;
        } else {
          vs[i] = cycle.vertices[(rotation - i + k) % k];
          cs[i] = cycle.edges[(rotation - 1 - i + 2 * k) % k].color;
        }
      }
      std::string key = render_traversal(vs, cs);
      if (best_key.empty() || key < best_key) {
        best_key = std::move(key);
        best_vs = std::move(vs);
        best_cs = std::move(cs);
      }
    }
  }
  PcCycle out;
  out.vertices = best_vs;
  for (int i = 0; i < k; ++i) {
    out.edges.push_back(PcCycleEdge{best_vs[i], best_vs[(i + 1) % k], best_cs[i]});
  }
  return out;
}

std::optional<std::vector<PcCycle>> decompose_pc_cycle_subgraph(
    const EdgeColoredMultigraph& g, const std::vector<int>& edge_ids) {
  std::set<int> ids(edge_ids.begin(), edge_ids.end());
  if (ids.size() != edge_ids.size()) return std::nullopt;

  std::map<int, std::vector<int>> chosen_at;  // vertex -> its two chosen edges
  for (int id : ids) {
    const ColoredEdge& e = g.edge(id);
    chosen_at[e.u].push_back(id);
    chosen_at[e.v].push_back(id);
  }
  for (const auto& [v, incident] : chosen_at) {
    if (incident.size() != 2) return std::nullopt;
    if (g.edge(incident[0]).color == g.edge(incident[1]).color) return std::nullopt;
  }

  std::vector<PcCycle> cycles;
  std::set<int> consumed;
  for (const auto& [start, incident] : chosen_at) {
    if (consumed.count(incident[0]) != 0) continue;
    PcCycle cycle;
    int current = start;
    int via = incident[0];
    do {
      const ColoredEdge& e = g.edge(via);
      const int next = (e.u == current) ? e.v : e.u;
      cycle.vertices.push_back(g.name_of(current));
      cycle.edges.push_back(PcCycleEdge{g.name_of(current), g.name_of(next), e.color});
      consumed.insert(via);
      const auto& at_next = chosen_at.at(next);
      via = (at_next[0] == via) ? at_next[1] : at_next[0];
      current = next;
    } while (current != start);
    cycles.push_back(canonicalize(cycle));
  }
  return cycles;
}

}  // namespace pccycle
