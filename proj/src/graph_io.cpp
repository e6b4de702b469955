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

#include "pccycle/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace pccycle {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) {
    tokens.push_back(tok);
  }
  return tokens;
}

int parse_color(const std::string& tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, "color must be a decimal integer, got '" + tok + "'");
  }
  if (value <= 0) {
    throw ParseError(line_no, "color must be positive, got " + tok);
  }
  return value;
}

// Runs `fn` per content line, translating builder invariant violations into
// ParseErrors carrying the line number.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view line =
        (end == std::string_view::npos) ? text.substr(pos) : text.substr(pos, end - pos);
    ++line_no;
    std::vector<std::string> tokens = tokenize(line);
    if (!tokens.empty()) {
      try {
        fn(tokens, line_no);
      } catch (const ParseError&) {
        throw;
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    }
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
}

}  // namespace

EdgeColoredMultigraph parse_edge_colored(std::string_view text) {
  EdgeColoredMultigraph::Builder b;
  for_each_line(text, [&](const std::vector<std::string>& tokens, int line_no) {
    if (tokens.size() == 2 && tokens[0] == "vertex") {
      b.add_vertex(tokens[1]);
    } else if (tokens.size() == 3 && tokens[0] != "vertex") {
      b.add_edge(tokens[0], tokens[1], parse_color(tokens[2], line_no));
    } else {
      throw ParseError(line_no, "expected 'vertex <name>' or '<u> <v> <color>'");
    }
  });
  return b.build();
}

UncoloredGraph parse_uncolored(std::string_view text) {
  UncoloredGraph::Builder b;
  for_each_line(text, [&](const std::vector<std::string>& tokens, int line_no) {
    if (tokens.size() == 2 && tokens[0] == "vertex") {
      b.add_vertex(tokens[1]);
    } else if (tokens.size() == 2) {
      b.add_edge(tokens[0], tokens[1]);
    } else {
      throw ParseError(line_no, "expected 'vertex <name>' or '<u> <v>'");
    }
  });
  return b.build();
}

Digraph parse_digraph(std::string_view text) {
  Digraph::Builder b;
  for_each_line(text, [&](const std::vector<std::string>& tokens, int line_no) {
    if (tokens.size() == 2 && tokens[0] == "vertex") {
      b.add_vertex(tokens[1]);
    } else if (tokens.size() == 3 && tokens[0] == "arc") {
      b.add_arc(tokens[1], tokens[2]);
    } else {
      throw ParseError(line_no, "expected 'vertex <name>' or 'arc <u> <v>'");
    }
  });
  return b.build();
}

std::string serialize(const EdgeColoredMultigraph& g) {
  std::ostringstream out;
  for (const std::string& name : g.vertex_names()) {
    out << "vertex " << name << "\n";
  }
  for (const ColoredEdge& e : g.edges()) {
    out << g.name_of(e.u) << " " << g.name_of(e.v) << " " << e.color << "\n";
  }
  return out.str();
}

std::string serialize(const UncoloredGraph& g) {
  std::ostringstream out;
  for (const std::string& name : g.vertex_names()) {
    out << "vertex " << name << "\n";
  }
  for (auto [u, v] : g.edges()) {
    out << g.name_of(u) << " " << g.name_of(v) << "\n";
  }
  return out.str();
}

std::string serialize(const Digraph& g) {
  std::ostringstream out;
  for (const std::string& name : g.vertex_names()) {
    out << "vertex " << name << "\n";
  }
  for (auto [u, v] : g.arcs()) {
    out << "arc " << g.name_of(u) << " " << g.name_of(v) << "\n";
  }
  return out.str();
}

}  // namespace pccycle
