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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "pccycle/graph.hpp"
#include "pccycle/graph_io.hpp"
#include "pccycle/oracle.hpp"
#include "pccycle/pc_cycle.hpp"
#include "pccycle/rng.hpp"

using namespace pccycle;

TEST_CASE("parse_edge_colored basic") {
  const EdgeColoredMultigraph g = parse_edge_colored("v1 v2 1\nv2 v3 2");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.vertex_names() == std::vector<std::string>{"v1", "v2", "v3"});
}

TEST_CASE("parse_edge_colored comments, blanks and isolated vertices") {
  const EdgeColoredMultigraph g =
      parse_edge_colored("# header\n\nvertex z\na b 1  # trailing comment\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.name_of(0) == "z");
  CHECK(g.degree(0) == 0);
}

TEST_CASE("parse_edge_colored rejects malformed input with line numbers") {
  CHECK_THROWS_AS(parse_edge_colored("a a 1"), ParseError);
  CHECK_THROWS_AS(parse_edge_colored("a b 0"), ParseError);
  CHECK_THROWS_AS(parse_edge_colored("a b -3"), ParseError);
  CHECK_THROWS_AS(parse_edge_colored("a b potato"), ParseError);
  CHECK_THROWS_AS(parse_edge_colored("a b\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_colored("a b 1 2\n"), ParseError);
  // duplicate same-colored parallel edge, reversed orientation included
  CHECK_THROWS_AS(parse_edge_colored("a b 1\nb a 1\n"), ParseError);

  try {
    parse_edge_colored("a b 1\nc c 2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("parallel edges of different colors are allowed") {
  const EdgeColoredMultigraph g = parse_edge_colored("a b 1\na b 2\n");
  CHECK(g.edge_count() == 2);
  CHECK(g.color_set("a") == std::set<int>{1, 2});
}

TEST_CASE("fig1 fixture parses to 6 vertices and 8 edges") {
  const EdgeColoredMultigraph g = parse_edge_colored(fixtures::fig1_text());
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 8);
  CHECK(g == fixtures::fig1());
}

TEST_CASE("serialization round-trips including vertex order") {
  const EdgeColoredMultigraph g = parse_edge_colored("a b 1\nvertex z\na c 2\n");
  const EdgeColoredMultigraph again = parse_edge_colored(serialize(g));
  CHECK(again == g);
  CHECK(again.vertex_names() == g.vertex_names());

  Rng rng = make_rng(7);
  for (int i = 0; i < 25; ++i) {
    InstanceGenSpec spec;
    spec.seed = rng();
    spec.parallel_prob = 0.3;
    const EdgeColoredMultigraph random = generate_instance(spec);
    CHECK(parse_edge_colored(serialize(random)) == random);
  }
}

TEST_CASE("color_set") {
  const EdgeColoredMultigraph g = fixtures::fig1();
  CHECK(g.color_set("v5") == std::set<int>{1, 3});
  CHECK(g.color_set("v3") == std::set<int>{2, 3});
  CHECK_THROWS_AS(g.color_set("nope"), std::invalid_argument);

  const EdgeColoredMultigraph isolated = parse_edge_colored("vertex a\n");
  CHECK(isolated.color_set("a").empty());

  const EdgeColoredMultigraph triangle = fixtures::rainbow_triangle();
  for (int v = 0; v < 3; ++v) {
    CHECK(triangle.color_set(v).size() == 2);
  }
}

TEST_CASE("reduce_monochromatic cascades along a path") {
  const EdgeColoredMultigraph g = parse_edge_colored("v1 v2 1\nv2 v3 2\n");
  CHECK(reduce_monochromatic(g).empty());
}

TEST_CASE("reduce_monochromatic keeps rainbow triangle and fig1") {
  CHECK(reduce_monochromatic(fixtures::rainbow_triangle()) == fixtures::rainbow_triangle());
  CHECK(reduce_monochromatic(fixtures::fig1()) == fixtures::fig1());
}

TEST_CASE("reduce_monochromatic drops isolated vertices") {
  const EdgeColoredMultigraph g = parse_edge_colored("vertex z\na b 1\na b 2\n");
  const EdgeColoredMultigraph reduced = reduce_monochromatic(g);
  CHECK(reduced.vertex_count() == 2);
  CHECK_FALSE(reduced.has_vertex("z"));
}

namespace {

// Test-side reducer that deletes monochromatic vertices in a random order,
// used to probe order independence of the fixed point.
EdgeColoredMultigraph reduce_random_order(const EdgeColoredMultigraph& g, Rng& rng) {
  EdgeColoredMultigraph current = g;
  for (;;) {
    std::vector<int> candidates;
    for (int v = 0; v < current.vertex_count(); ++v) {
      if (current.color_set(v).size() <= 1) candidates.push_back(v);
    }
    if (candidates.empty()) return current;
    const int victim =
        candidates[uniform_u64(rng, 0, candidates.size() - 1)];
    std::vector<int> survivors;
    for (int v = 0; v < current.vertex_count(); ++v) {
      if (v != victim) survivors.push_back(v);
    }
    current = current.induced_subgraph(survivors);
  }
}

std::set<std::string> vertex_name_set(const EdgeColoredMultigraph& g) {
  return {g.vertex_names().begin(), g.vertex_names().end()};
}

}  // namespace

TEST_CASE("reduce_monochromatic is idempotent and order-independent") {
  Rng rng = make_rng(11);
  for (int i = 0; i < 60; ++i) {
    InstanceGenSpec spec;
    spec.max_vertices = 9;
    spec.parallel_prob = 0.2;
    spec.seed = rng();
    const EdgeColoredMultigraph g = generate_instance(spec);
    const EdgeColoredMultigraph reduced = reduce_monochromatic(g);
    CHECK(reduce_monochromatic(reduced) == reduced);
    for (int v = 0; v < reduced.vertex_count(); ++v) {
      CHECK(reduced.color_set(v).size() >= 2);
    }
    for (int run = 0; run < 3; ++run) {
      CHECK(vertex_name_set(reduce_random_order(g, rng)) == vertex_name_set(reduced));
    }
  }
}

TEST_CASE("PC cycles never touch reduced-away vertices") {
  Rng rng = make_rng(13);
  for (int i = 0; i < 40; ++i) {
    InstanceGenSpec spec;
    spec.max_vertices = 8;
    spec.seed = rng();
    const EdgeColoredMultigraph g = generate_instance(spec);
    const EdgeColoredMultigraph reduced = reduce_monochromatic(g);
    const std::set<std::string> kept = vertex_name_set(reduced);
    for (const PcCycle& cycle : enumerate_pc_cycles(g)) {
      for (const std::string& v : cycle.vertices) {
        CHECK(kept.count(v) == 1);
      }
    }
  }
}

TEST_CASE("digraph parsing") {
  const Digraph d = parse_digraph("arc a b\narc b c\nvertex z\n");
  CHECK(d.vertex_count() == 4);
  CHECK(d.arc_count() == 2);
  CHECK_THROWS_AS(parse_digraph("arc a a\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph("arc a b\narc a b\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph("a b\n"), ParseError);
  CHECK(parse_digraph(serialize(d)).arcs() == d.arcs());
}

TEST_CASE("uncolored parsing") {
  const UncoloredGraph g = parse_uncolored("a b\nb c\nvertex z\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(g.index_of("a"), g.index_of("b")));
  CHECK_THROWS_AS(parse_uncolored("a a\n"), ParseError);
  CHECK_THROWS_AS(parse_uncolored("a b\nb a\n"), ParseError);
  CHECK(parse_uncolored(serialize(g)) == g);
}

TEST_CASE("connected components") {
  const EdgeColoredMultigraph g = parse_edge_colored("a b 1\nc d 2\nvertex e\n");
  const auto comps = g.connected_components();
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{0, 1});
  CHECK(comps[1] == std::vector<int>{2, 3});
  CHECK(comps[2] == std::vector<int>{4});
}
