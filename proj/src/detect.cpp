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

#include "pccycle/detect.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pccycle/gadget.hpp"
#include "pccycle/rng.hpp"

namespace pccycle {

namespace {

void check_params(const SZParams& params) {
  if (params.trials < 1) {
    throw std::invalid_argument("trial count must be at least 1");
  }
  PrimeField probe{params.prime};  // rejects non-primes
  (void)probe;
}

// A vertex z is removable when, for every connected component of g - z, the
// edges joining z to that component all carry one color: no PC cycle can
// enter and leave z properly, so deleting z preserves PC-cycle existence.
int find_removable_vertex(const EdgeColoredMultigraph& g) {
  const int n = g.vertex_count();
  for (int z = 0; z < n; ++z) {
    std::vector<int> comp(n, -1);
    int comp_count = 0;
    for (int s = 0; s < n; ++s) {
      if (s == z || comp[s] != -1) continue;
      comp[s] = comp_count;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int id : g.incident_edges(v)) {
          const ColoredEdge& e = g.edge(id);
          int w = (e.u == v) ? e.v : e.u;
          if (w == z || comp[w] != -1) continue;
          comp[w] = comp_count;
          stack.push_back(w);
        }
      }
      ++comp_count;
    }
    std::map<int, int> color_seen;  // component -> color, -2 once mixed
    bool removable = true;
    for (int id : g.incident_edges(z)) {
      const ColoredEdge& e = g.edge(id);
      const int w = (e.u == z) ? e.v : e.u;
      auto [it, inserted] = color_seen.emplace(comp[w], e.color);
      if (!inserted && it->second != e.color) {
        removable = false;
        break;
      }
    }
    if (removable) return z;
  }
  return -1;
}

Rng call_rng(const SZParams& params, std::uint64_t stream, std::uint64_t trial) {
  return make_trial_rng(params.seed, stream, trial);
}

// Projects the odd-parity fallback matching down to an odd PC cycle: the
// matched E2 edges form a PC cycle subgraph whose cycle lengths sum to an
// odd number, so one of its cycles is odd.
PcCycle extract_odd_witness(const EdgeColoredMultigraph& component, const GadgetGraph& gg,
                            const Matching& m) {
  const std::vector<int> subgraph = matching_to_pc_cycle_subgraph(gg, m);
  const auto cycles = decompose_pc_cycle_subgraph(component, subgraph);
  if (!cycles.has_value()) {
    throw std::logic_error("matched E2 edges did not form a PC cycle subgraph");
  }
  for (const PcCycle& cycle : *cycles) {
    if (!cycle.odd()) continue;
    std::string why;
    if (!validate_pc_cycle(component, cycle, &why)) {
      throw std::logic_error("extracted witness failed validation: " + why);
    }
    return cycle;
  }
  throw std::logic_error("odd-parity matching produced no odd cycle");
}

}  // namespace

Decision pc_cycle_exists(const EdgeColoredMultigraph& g) {
  EdgeColoredMultigraph current = g;
  ReductionTrace trace;
  for (;;) {
    if (current.empty()) {
      return Decision{false, trace, SZParams{}, 0.0};
    }
    const int z = find_removable_vertex(current);
    if (z == -1) {
      return Decision{true, trace, SZParams{}, 0.0};
    }
    trace.deleted.push_back(current.name_of(z));
    std::vector<int> survivors;
    for (int v = 0; v < current.vertex_count(); ++v) {
      if (v != z) survivors.push_back(v);
    }
    current = current.induced_subgraph(survivors);
  }
}

Decision odd_pc_cycle_exists(const EdgeColoredMultigraph& g, const SZParams& params) {
  check_params(params);
  const PrimeField field{params.prime};
  ReducedGraph reduced = reduce_monochromatic_traced(g);
  if (reduced.graph.empty()) {
    return Decision{false, ReductionTrace{std::move(reduced.deleted)}, params, 0.0};
  }

  double total_bound = 0.0;
  Evidence no_evidence = ReductionTrace{reduced.deleted};
  const auto components = reduced.graph.connected_components();
  for (std::size_t comp_idx = 0; comp_idx < components.size(); ++comp_idx) {
    const EdgeColoredMultigraph component =
        reduced.graph.induced_subgraph(components[comp_idx]);
    const GadgetGraph gg = build_gadget_graph(component);
    const EdgeSet e2 = gg.e2_edge_set();
    const int dim = gg.graph().vertex_count();

    DetComparison last{};
    for (int trial = 0; trial < params.trials; ++trial) {
      Rng rng = call_rng(params, comp_idx, static_cast<std::uint64_t>(trial));
      const SkewSample sample = sample_tutte(gg.graph(), e2, field, rng);
      last = dets_equal(sample);
      if (!last.equal) {
        // Perfect matchings of both E2-parities exist, so some perfect
        // matching selects an odd number of E2 edges: an odd PC cycle.
        return Decision{true, DetPairEvidence{last.det_plain, last.det_flipped, std::nullopt},
                        params, 0.0};
      }
    }

    const Matching fallback = maximum_matching(gg.graph());
    if (!fallback.is_perfect(gg.graph())) {
      throw std::logic_error("gadget graph unexpectedly has no perfect matching");
    }
    if (parity(fallback, e2) == Parity::kOdd) {
      PcCycle witness = extract_odd_witness(component, gg, fallback);
      return Decision{true, std::move(witness), params, 0.0};
    }
    const double per_trial =
        static_cast<double>(dim) / static_cast<double>(params.prime - 1);
    total_bound += std::pow(per_trial, params.trials);
    no_evidence = DetPairEvidence{last.det_plain, last.det_flipped, Parity::kEven};
  }
  return Decision{false, std::move(no_evidence), params, std::min(1.0, total_bound)};
}

ParityClass parity_matching_decide(const UncoloredGraph& g, const EdgeSet& e0,
                                   const SZParams& params) {
  check_params(params);
  for (auto [u, v] : e0.pairs()) {
    if (u < 0 || v >= g.vertex_count() || !g.has_edge(u, v)) {
      throw std::invalid_argument("E0 must be a subset of the graph's edges");
    }
  }
  if (g.vertex_count() % 2 != 0) {
    return ParityClass::kNoPerfectMatching;
  }
  const Matching m = maximum_matching(g);
  if (!m.is_perfect(g)) {
    return ParityClass::kNoPerfectMatching;
  }
  const PrimeField field{params.prime};
  for (int trial = 0; trial < params.trials; ++trial) {
    Rng rng = call_rng(params, 0, static_cast<std::uint64_t>(trial));
    const SkewSample sample = sample_tutte(g, e0, field, rng);
    if (!dets_equal(sample).equal) {
      return ParityClass::kBothParities;
    }
  }
  return parity(m, e0) == Parity::kOdd ? ParityClass::kAllOdd : ParityClass::kAllEven;
}

namespace {

int ceil_log4(int m) {
  int k = 0;
  std::int64_t power = 1;
  while (power < m) {
    power *= 4;
    ++k;
  }
  return k;
}

}  // namespace

std::optional<PcCycle> find_odd_pc_cycle(const EdgeColoredMultigraph& g,
                                         const SZParams& params) {
  check_params(params);
  const EdgeColoredMultigraph reduced = reduce_monochromatic(g);
  const int edge_count = reduced.edge_count();

  // Boost per-call trials so the union bound over the <= |E|+1 oracle calls
  // still meets the caller's target.
  SZParams boosted = params;
  boosted.trials = params.trials + ceil_log4(std::max(1, edge_count + 1));

  if (!odd_pc_cycle_exists(g, boosted).yes) {
    return std::nullopt;
  }

  constexpr int kMaxAttempts = 5;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::uint64_t attempt_seed =
        (attempt == 0) ? params.seed : splitmix64(params.seed + static_cast<std::uint64_t>(attempt));
    std::vector<bool> removed(edge_count, false);
    for (int e = 0; e < edge_count; ++e) {
      EdgeColoredMultigraph::Builder b;
      for (const std::string& name : reduced.vertex_names()) {
        b.add_vertex(name);
      }
      for (int id = 0; id < edge_count; ++id) {
        if (removed[id] || id == e) continue;
        const ColoredEdge& edge = reduced.edges()[id];
        b.add_edge(reduced.name_of(edge.u), reduced.name_of(edge.v), edge.color);
      }
      SZParams call = boosted;
      call.seed = splitmix64(attempt_seed + 1000003ULL * static_cast<std::uint64_t>(e + 1));
      if (odd_pc_cycle_exists(b.build(), call).yes) {
        removed[e] = true;
      }
    }

    std::vector<int> kept;
    for (int id = 0; id < edge_count; ++id) {
      if (!removed[id]) kept.push_back(id);
    }
    const auto cycles = decompose_pc_cycle_subgraph(reduced, kept);
    if (cycles.has_value() && cycles->size() == 1 && (*cycles)[0].odd() &&
        validate_pc_cycle(g, (*cycles)[0])) {
      return (*cycles)[0];
    }
  }
  throw std::runtime_error(
      "randomness failure: odd PC cycle extraction exhausted its retry budget");
}

Decision pc_closed_walk_exists(const EdgeColoredMultigraph& g) {
  ReducedGraph reduced = reduce_monochromatic_traced(g);
  // A monochromatic vertex cannot lie on a PC closed walk, so the walks of g
  // are exactly the walks of the reduction; a nonempty reduction (no
  // monochromatic vertex at all) always carries one.
  const bool yes = !reduced.graph.empty();
  return Decision{yes, ReductionTrace{std::move(reduced.deleted)}, SZParams{}, 0.0};
}

Decision odd_dicycle_exists(const Digraph& d) {
  for (const std::vector<int>& scc : d.strongly_connected_components()) {
    if (scc.size() < 2) continue;
    std::map<int, std::vector<int>> adjacency;
    std::set<int> members(scc.begin(), scc.end());
    for (auto [u, v] : d.arcs()) {
      if (members.count(u) != 0 && members.count(v) != 0) {
        adjacency[u].push_back(v);
        adjacency[v].push_back(u);
      }
    }
    std::map<int, int> side;
    std::vector<int> stack{scc.front()};
    side[scc.front()] = 0;
    bool bipartite = true;
    while (!stack.empty() && bipartite) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adjacency[v]) {
        auto [it, inserted] = side.emplace(w, side[v] ^ 1);
        if (inserted) {
          stack.push_back(w);
        } else if (it->second == side[v]) {
          bipartite = false;
          break;
        }
      }
    }
    if (!bipartite) {
      ReductionTrace trace;
      for (int v : scc) trace.deleted.push_back(d.name_of(v));
      return Decision{true, std::move(trace), SZParams{}, 0.0};
    }
  }
  return Decision{false, ReductionTrace{}, SZParams{}, 0.0};
}

EdgeColoredMultigraph digraph_to_edge_colored(const Digraph& d) {
  EdgeColoredMultigraph::Builder b;
  std::set<std::string> used(d.vertex_names().begin(), d.vertex_names().end());
  for (const std::string& name : d.vertex_names()) {
    b.add_vertex(name);
  }
  for (auto [u, v] : d.arcs()) {
    std::string mid = d.name_of(u) + "->" + d.name_of(v);
    while (used.count(mid) != 0) {
      mid += "'";
    }
    used.insert(mid);
    b.add_edge(d.name_of(u), mid, 1);
    b.add_edge(mid, d.name_of(v), 2);
  }
  return b.build();
}

std::string describe(const Evidence& evidence) {
  struct Renderer {
    std::string operator()(const ReductionTrace& trace) const {
      if (trace.deleted.empty()) {
        return "reduction trace: (no vertices deleted)";
      }
      std::ostringstream out;
      out << "reduction trace:";
      for (const std::string& name : trace.deleted) {
        out << " " << name;
      }
      return out.str();
    }
    std::string operator()(const DetPairEvidence& pair) const {
      std::ostringstream out;
      out << "det plain=" << pair.det_plain << " flipped=" << pair.det_flipped;
      if (pair.fallback_parity.has_value()) {
        out << " fallback matching parity="
            << (*pair.fallback_parity == Parity::kOdd ? "odd" : "even");
      } else {
        out << " (determinants differ)";
      }
      return out.str();
    }
    std::string operator()(const PcCycle& cycle) const {
      std::ostringstream out;
      out << "witness cycle:";
      for (int i = 0; i < cycle.length(); ++i) {
        out << " " << cycle.vertices[i] << " -" << cycle.edges[i].color << "-";
      }
      out << " " << cycle.vertices[0] << " (length " << cycle.length() << ")";
      return out.str();
    }
  };
  return std::visit(Renderer{}, evidence);
}

std::string to_string(ParityClass c) {
  switch (c) {
    case ParityClass::kNoPerfectMatching:
      return "no_perfect_matching";
    case ParityClass::kAllEven:
      return "all_even";
    case ParityClass::kAllOdd:
      return "all_odd";
    case ParityClass::kBothParities:
      return "both_parities";
  }
  return "unknown";
}

}  // namespace pccycle
