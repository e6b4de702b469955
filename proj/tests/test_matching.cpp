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

#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "pccycle/gadget.hpp"
#include "pccycle/matching.hpp"
#include "pccycle/oracle.hpp"
#include "pccycle/rng.hpp"

using namespace pccycle;

namespace {

UncoloredGraph random_graph(int n, double edge_prob, Rng& rng) {
  UncoloredGraph::Builder b;
  for (int i = 0; i < n; ++i) b.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (bernoulli(rng, edge_prob)) b.add_edge(i, j);
    }
  }
  return b.build();
}

}  // namespace

TEST_CASE("maximum_matching on small named graphs") {
  const Matching c4 = maximum_matching(fixtures::c4());
  CHECK(c4.size() == 2);
  CHECK(c4.is_perfect(fixtures::c4()));
  validate_matching(fixtures::c4(), c4);

  CHECK(maximum_matching(fixtures::path3()).size() == 1);

  const Matching petersen = maximum_matching(fixtures::petersen());
  CHECK(petersen.size() == 5);
  CHECK(petersen.is_perfect(fixtures::petersen()));
  validate_matching(fixtures::petersen(), petersen);
  CHECK(maximum_matching_size_bruteforce(fixtures::petersen()) == 5);
}

TEST_CASE("maximum_matching handles odd cycles and empty graphs") {
  UncoloredGraph::Builder b;
  b.add_edge("a", "b");
  b.add_edge("b", "c");
  b.add_edge("c", "a");
  CHECK(maximum_matching(b.build()).size() == 1);
  CHECK(maximum_matching(UncoloredGraph{}).size() == 0);
}

TEST_CASE("maximum_matching matches brute force on a random corpus") {
  Rng rng = make_rng(31);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = static_cast<int>(uniform_u64(rng, 1, 10));
    const UncoloredGraph g = random_graph(n, uniform_unit(rng), rng);
    const Matching m = maximum_matching(g);
    validate_matching(g, m);
    CHECK(m.size() == maximum_matching_size_bruteforce(g));

    // Perfect matchings are found whenever the enumerator finds one.
    if (n <= 10 && n % 2 == 0) {
      const bool has_perfect = !enumerate_perfect_matchings(g, EdgeSet{}).empty();
      CHECK(m.is_perfect(g) == has_perfect);
    }
  }
}

TEST_CASE("maximum_matching is exhaustively correct on all graphs with 5 vertices") {
  // 2^10 graphs; every edge subset of K5.
  const int n = 5;
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
  }
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    UncoloredGraph::Builder b;
    for (int i = 0; i < n; ++i) b.add_vertex("v" + std::to_string(i));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (mask & (1u << s)) b.add_edge(slots[s].first, slots[s].second);
    }
    const UncoloredGraph g = b.build();
    const Matching m = maximum_matching(g);
    validate_matching(g, m);
    REQUIRE(m.size() == maximum_matching_size_bruteforce(g));
  }
}

TEST_CASE("maximum_matching is deterministic") {
  Rng rng = make_rng(37);
  const UncoloredGraph g = random_graph(9, 0.5, rng);
  const Matching first = maximum_matching(g);
  for (int i = 0; i < 5; ++i) {
    CHECK(maximum_matching(g).edges == first.edges);
  }
}

TEST_CASE("gadget graphs always admit a perfect matching") {
  Rng rng = make_rng(41);
  for (int rep = 0; rep < 40; ++rep) {
    InstanceGenSpec spec;
    spec.max_vertices = 8;
    spec.parallel_prob = 0.2;
    spec.seed = rng();
    const EdgeColoredMultigraph reduced = reduce_monochromatic(generate_instance(spec));
    if (reduced.empty()) continue;
    const GadgetGraph gg = build_gadget_graph(reduced);
    CHECK(maximum_matching(gg.graph()).is_perfect(gg.graph()));
  }
}

TEST_CASE("parity counts intersections mod 2") {
  Matching m;
  m.edges = {{0, 1}, {2, 3}};
  EdgeSet none;
  CHECK(parity(m, none) == Parity::kEven);

  EdgeSet one;
  one.insert(0, 1);
  CHECK(parity(m, one) == Parity::kOdd);

  EdgeSet both;
  both.insert(0, 1);
  both.insert(2, 3);
  CHECK(parity(m, both) == Parity::kEven);
}

TEST_CASE("validate_matching rejects bad matchings") {
  const UncoloredGraph g = fixtures::c4();
  Matching overlapping;
  overlapping.edges = {{0, 1}, {1, 2}};
  CHECK_THROWS_AS(validate_matching(g, overlapping), std::invalid_argument);

  Matching phantom;
  phantom.edges = {{0, 2}};  // diagonal of C4
  CHECK_THROWS_AS(validate_matching(g, phantom), std::invalid_argument);
}
