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
//
// Text formats (UTF-8, one record per line; `#` starts a comment):
//
//   edge-colored multigraph:  `vertex <name>` or `<u> <v> <color>`
//   uncolored graph:          `vertex <name>` or `<u> <v>`
//   digraph:                  `vertex <name>` or `arc <u> <v>`
//
// Vertex names are arbitrary whitespace-free tokens; colors are positive
// decimal integers. Serialization lists every vertex as a `vertex` line in
// declaration order, then the edges in input order.

#ifndef PCCYCLE_GRAPH_IO_HPP
#define PCCYCLE_GRAPH_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "pccycle/graph.hpp"

namespace pccycle {

/// Malformed input; `line` is the 1-based offending line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

EdgeColoredMultigraph parse_edge_colored(std::string_view text);
UncoloredGraph parse_uncolored(std::string_view text);
Digraph parse_digraph(std::string_view text);

std::string serialize(const EdgeColoredMultigraph& g);
std::string serialize(const UncoloredGraph& g);
std::string serialize(const Digraph& g);

}  // namespace pccycle

#endif  // PCCYCLE_GRAPH_IO_HPP
