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

#ifndef PCCYCLE_DETECT_HPP
#define PCCYCLE_DETECT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pccycle/graph.hpp"
#include "pccycle/linalg.hpp"
#include "pccycle/matching.hpp"
#include "pccycle/pc_cycle.hpp"

namespace pccycle {

/// Vertices removed on the way to a deterministic answer.
struct ReductionTrace {
  std::vector<std::string> deleted;
};

/// Outcome of the determinant comparison, plus the parity of the fallback
/// matching when the comparison never differed.
struct DetPairEvidence {
  std::uint64_t det_plain = 0;
  std::uint64_t det_flipped = 0;
  std::optional<Parity> fallback_parity;
};

using Evidence = std::variant<ReductionTrace, DetPairEvidence, PcCycle>;

/// A decision with its supporting evidence. `error_bound` bounds the
/// probability that a "no" answer is wrong; it is 0 for deterministic
/// branches, and every "yes" is correct.
struct Decision {
  bool yes = false;
  Evidence evidence;
  SZParams params;
  double error_bound = 0.0;
};

/// Does g contain a properly colored cycle? Deterministic: repeatedly
/// deletes a vertex z whose edges into each component of g - z carry a
/// single color (no PC cycle can pass such a z); the graph empties out iff
/// no PC cycle exists.
Decision pc_cycle_exists(const EdgeColoredMultigraph& g);

/// Does g contain an odd properly colored cycle? Randomized, one-sided: per
/// component of the monochromatic reduction, compares determinants of the
/// plain and E2-flipped Tutte samples of the gadget graph over
/// params.trials independent draws; a difference proves perfect matchings
/// of both E2-parities exist, hence an odd PC cycle. If every draw agrees,
/// falls back to the parity of one blossom-computed perfect matching.
Decision odd_pc_cycle_exists(const EdgeColoredMultigraph& g, const SZParams& params);

enum class ParityClass { kNoPerfectMatching, kAllEven, kAllOdd, kBothParities };

/// Classifies the E0-parities realized by perfect matchings of g.
/// kBothParities is always correct; kAllEven/kAllOdd carry a false-
/// classification probability of at most (|V|/(p-1))^trials.
ParityClass parity_matching_decide(const UncoloredGraph& g, const EdgeSet& e0,
                                   const SZParams& params);

/// Extracts an odd PC cycle by self-reduction on the decision oracle:
/// tentatively deletes edges of the reduced graph in input order, keeping a
/// deletion whenever the (trial-boosted) oracle still answers yes. The
/// terminal edge set is validated as a single odd PC cycle; a validation
/// failure triggers a retry with a fresh seed, and exhausting the retry
/// budget throws std::runtime_error rather than returning an unverified
/// witness.
std::optional<PcCycle> find_odd_pc_cycle(const EdgeColoredMultigraph& g,
                                         const SZParams& params);

/// Does g contain a properly colored closed walk? Deterministic: yes iff
/// the monochromatic reduction is nonempty.
Decision pc_closed_walk_exists(const EdgeColoredMultigraph& g);

/// Does d contain an odd directed cycle? Deterministic: yes iff some
/// strongly connected component is non-bipartite when viewed undirected.
Decision odd_dicycle_exists(const Digraph& d);

/// Replaces every arc uv by a path u - x - v with edge colors 1 and 2, so
/// that dicycles of d correspond to PC cycles of the image (with doubled
/// length).
EdgeColoredMultigraph digraph_to_edge_colored(const Digraph& d);

/// Rendering helpers for reports.
std::string describe(const Evidence& evidence);
std::string to_string(ParityClass c);

}  // namespace pccycle

#endif  // PCCYCLE_DETECT_HPP
