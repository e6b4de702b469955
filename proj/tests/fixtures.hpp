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

#ifndef PCCYCLE_TESTS_FIXTURES_HPP
#define PCCYCLE_TESTS_FIXTURES_HPP

#include <string>

#include "pccycle/graph.hpp"

namespace pccycle::fixtures {

// Six vertices, eight edges over three colors; every vertex sees exactly two
// colors. It has properly colored cycles (all of even length) and no odd
// one, which makes it the standard regression instance for the detectors.
inline EdgeColoredMultigraph fig1() {
  EdgeColoredMultigraph::Builder b;
  b.add_edge("v1", "v3", 2);
  b.add_edge("v1", "v2", 3);
  b.add_edge("v3", "v4", 2);
  b.add_edge("v4", "v5", 3);
  b.add_edge("v3", "v6", 3);
  b.add_edge("v6", "v5", 1);
  b.add_edge("v5", "v2", 1);
  b.add_edge("v3", "v5", 3);
  return b.build();
}

inline std::string fig1_text() {
  return "v1 v3 2\nv1 v2 3\nv3 v4 2\nv4 v5 3\nv3 v6 3\nv6 v5 1\nv5 v2 1\nv3 v5 3\n";
}

// Ten vertices, two lobes hanging off the cut vertex v5. The walk around
// both lobes is an odd properly colored closed walk, yet neither lobe cycle
// is properly colored at v5, so the graph has no PC cycle at all.
inline EdgeColoredMultigraph fig2() {
  EdgeColoredMultigraph::Builder b;
  b.add_edge("v1", "v2", 2);
  b.add_edge("v2", "v5", 3);
  b.add_edge("v5", "v3", 2);
  b.add_edge("v3", "v4", 3);
  b.add_edge("v1", "v0", 1);
  b.add_edge("v0", "v6", 3);
  b.add_edge("v6", "v7", 2);
  b.add_edge("v7", "v5", 3);
  b.add_edge("v5", "v8", 2);
  b.add_edge("v8", "v9", 3);
  b.add_edge("v4", "v9", 2);
  return b.build();
}

inline EdgeColoredMultigraph rainbow_triangle() {
  EdgeColoredMultigraph::Builder b;
  b.add_edge("a", "b", 1);
  b.add_edge("b", "c", 2);
  b.add_edge("c", "a", 3);
  return b.build();
}

inline EdgeColoredMultigraph mono_triangle() {
  EdgeColoredMultigraph::Builder b;
  b.add_edge("a", "b", 1);
  b.add_edge("b", "c", 1);
  b.add_edge("c", "a", 1);
  return b.build();
}

// K4 with the proper 3-edge-coloring by perfect matchings; every cycle is
// properly colored and every triangle is rainbow.
inline EdgeColoredMultigraph k4_proper() {
  EdgeColoredMultigraph::Builder b;
  b.add_edge("a", "b", 1);
  b.add_edge("c", "d", 1);
  b.add_edge("a", "c", 2);
  b.add_edge("b", "d", 2);
  b.add_edge("a", "d", 3);
  b.add_edge("b", "c", 3);
  return b.build();
}

inline UncoloredGraph c4() {
  UncoloredGraph::Builder b;
  b.add_edge("v1", "v2");
  b.add_edge("v2", "v3");
  b.add_edge("v3", "v4");
  b.add_edge("v4", "v1");
  return b.build();
}

inline UncoloredGraph path3() {
  UncoloredGraph::Builder b;
  b.add_edge("a", "b");
  b.add_edge("b", "c");
  return b.build();
}

inline UncoloredGraph petersen() {
  UncoloredGraph::Builder b;
  for (int i = 0; i < 5; ++i) {
    b.add_vertex("o" + std::to_string(i));
  }
  for (int i = 0; i < 5; ++i) {
    b.add_vertex("i" + std::to_string(i));
  }
  for (int i = 0; i < 5; ++i) {
    b.add_edge("o" + std::to_string(i), "o" + std::to_string((i + 1) % 5));
    b.add_edge("i" + std::to_string(i), "i" + std::to_string((i + 2) % 5));
    b.add_edge("o" + std::to_string(i), "i" + std::to_string(i));
  }
  return b.build();
}

}  // namespace pccycle::fixtures

#endif  // PCCYCLE_TESTS_FIXTURES_HPP
