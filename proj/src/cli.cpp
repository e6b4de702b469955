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

#include "pccycle/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pccycle/detect.hpp"
#include "pccycle/gadget.hpp"
#include "pccycle/graph_io.hpp"
#include "pccycle/oracle.hpp"

namespace pccycle::cli {

namespace {

constexpr int kExitNo = 0;
constexpr int kExitYes = 1;
constexpr int kExitUsage = 2;

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

nlohmann::json evidence_json(const Evidence& evidence) {
  struct Renderer {
    nlohmann::json operator()(const ReductionTrace& trace) const {
      return {{"type", "reduction_trace"}, {"deleted", trace.deleted}};
    }
    nlohmann::json operator()(const DetPairEvidence& pair) const {
      nlohmann::json j{{"type", "det_pair"},
                       {"det_plain", pair.det_plain},
                       {"det_flipped", pair.det_flipped}};
      if (pair.fallback_parity.has_value()) {
        j["fallback_parity"] = (*pair.fallback_parity == Parity::kOdd) ? "odd" : "even";
      }
      return j;
    }
    nlohmann::json operator()(const PcCycle& cycle) const {
      nlohmann::json edges = nlohmann::json::array();
      for (const PcCycleEdge& e : cycle.edges) {
        edges.push_back({{"u", e.u}, {"v", e.v}, {"color", e.color}});
      }
      return {{"type", "witness_cycle"},
              {"vertices", cycle.vertices},
              {"edges", edges},
              {"length", cycle.length()}};
    }
  };
  return std::visit(Renderer{}, evidence);
}

struct RunReport {
  std::string command;
  std::string input_path;
  std::string digest;
  std::string answer;
  std::string evidence_text;
  nlohmann::json evidence;
  SZParams params;
  double error_bound = 0.0;
  double wall_ms = 0.0;
};

void print_report(const RunReport& report, bool json, std::ostream& out) {
  if (json) {
    nlohmann::json j{{"command", report.command},
                     {"input", {{"path", report.input_path}, {"digest", report.digest}}},
                     {"answer", report.answer},
                     {"evidence", report.evidence},
                     {"params",
                      {{"prime", report.params.prime},
                       {"trials", report.params.trials},
                       {"seed", report.params.seed}}},
                     {"error_bound", report.error_bound},
                     {"wall_time_ms", report.wall_ms}};
    out << j.dump(2) << "\n";
    return;
  }
  out << "command: " << report.command << "\n"
      << "input: " << report.input_path << "\n"
      << "digest: " << report.digest << "\n"
      << "answer: " << report.answer << "\n"
      << "evidence: " << report.evidence_text << "\n"
      << "params: prime=" << report.params.prime << " trials=" << report.params.trials
      << " seed=" << report.params.seed << "\n"
      << "error-bound: " << report.error_bound << "\n"
      << "wall-time-ms: " << report.wall_ms << "\n";
}

// Accepts `u,v` pair tokens; two consecutive comma-less tokens also form a
// pair, so `--e0 "v1 v2"` and `--e0 "v1,v2 v3,v4"` both work.
EdgeSet parse_e0(const std::string& spec, const UncoloredGraph& g) {
  EdgeSet e0;
  std::istringstream in(spec);
  std::string token;
  while (in >> token) {
    std::string u;
    std::string v;
    const auto comma = token.find(',');
    if (comma == std::string::npos) {
      u = token;
      if (!(in >> v) || v.find(',') != std::string::npos) {
        throw std::invalid_argument("--e0 token '" + token + "' is missing its partner");
      }
    } else {
      if (token.find(',', comma + 1) != std::string::npos) {
        throw std::invalid_argument("--e0 tokens must look like u,v; got '" + token + "'");
      }
      u = token.substr(0, comma);
      v = token.substr(comma + 1);
    }
    const int ui = g.index_of(u);
    const int vi = g.index_of(v);
    if (!g.has_edge(ui, vi)) {
      throw std::invalid_argument("--e0 edge " + u + "," + v + " is not in the graph");
    }
    e0.insert(ui, vi);
  }
  return e0;
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

int decision_exit(bool yes) { return yes ? kExitYes : kExitNo; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"pc-cycle: properly colored cycle decisions for edge-colored multigraphs"};
  app.require_subcommand(1);

  SZParams params;
  bool json = false;
  app.add_option("--seed", params.seed, "RNG seed (recorded in every report)");
  app.add_option("--trials", params.trials, "independent determinant trials")
      ->check(CLI::PositiveNumber);
  app.add_option("--prime", params.prime, "prime modulus for the determinant tests");
  app.add_flag("--json", json, "emit the report as JSON");

  std::string input_path;
  std::string e0_spec;
  int oracle_max_vertices = 20;

  CLI::App* cmd_exists = app.add_subcommand("exists", "is there a PC cycle?");
  cmd_exists->add_option("file", input_path, "edge-colored multigraph file")->required();
  CLI::App* cmd_odd = app.add_subcommand("odd", "is there an odd PC cycle?");
  cmd_odd->add_option("file", input_path, "edge-colored multigraph file")->required();
  CLI::App* cmd_find = app.add_subcommand("find-odd", "extract an odd PC cycle");
  cmd_find->add_option("file", input_path, "edge-colored multigraph file")->required();
  CLI::App* cmd_walk = app.add_subcommand("closed-walk", "is there a PC closed walk?");
  cmd_walk->add_option("file", input_path, "edge-colored multigraph file")->required();
  CLI::App* cmd_parity =
      app.add_subcommand("matching-parity", "parities of perfect matchings over E0");
  cmd_parity->add_option("file", input_path, "uncolored graph file")->required();
  cmd_parity->add_option("--e0", e0_spec, "whitespace-separated vertex pairs u,v");
  CLI::App* cmd_dicycle = app.add_subcommand("odd-dicycle", "is there an odd directed cycle?");
  cmd_dicycle->add_option("file", input_path, "digraph file")->required();
  CLI::App* cmd_gadget = app.add_subcommand("gadget-dump", "dump the gadget graph G*");
  cmd_gadget->add_option("file", input_path, "edge-colored multigraph file")->required();

  CLI::App* cmd_oracle = app.add_subcommand("oracle", "exponential-time ground truth");
  cmd_oracle->require_subcommand(1);
  CLI::App* oracle_cycles = cmd_oracle->add_subcommand("pc-cycles", "enumerate PC cycles");
  oracle_cycles->add_option("file", input_path, "edge-colored multigraph file")->required();
  CLI::App* oracle_matchings =
      cmd_oracle->add_subcommand("matchings", "enumerate perfect matchings");
  oracle_matchings->add_option("file", input_path, "uncolored graph file")->required();
  oracle_matchings->add_option("--e0", e0_spec, "whitespace-separated vertex pairs u,v");
  oracle_matchings->add_option("--max-vertices", oracle_max_vertices,
                               "enumeration size cap override");
  CLI::App* oracle_gen = cmd_oracle->add_subcommand("gen", "generate a random instance");
  InstanceGenSpec gen_spec;
  oracle_gen->add_option("--min-n", gen_spec.min_vertices, "minimum vertex count");
  oracle_gen->add_option("--max-n", gen_spec.max_vertices, "maximum vertex count");
  oracle_gen->add_option("--min-colors", gen_spec.min_colors, "minimum color count");
  oracle_gen->add_option("--max-colors", gen_spec.max_colors, "maximum color count");
  oracle_gen->add_option("--edge-prob", gen_spec.edge_prob, "edge probability");
  oracle_gen->add_option("--parallel-prob", gen_spec.parallel_prob,
                         "parallel edge probability");

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }
  cmd_oracle->fallthrough();
  for (CLI::App* sub : cmd_oracle->get_subcommands({})) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitNo;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    RunReport report;
    report.params = params;
    report.input_path = input_path;
    Timer timer;

    auto finish_decision = [&](const std::string& command, const Decision& decision) {
      report.command = command;
      report.answer = decision.yes ? "yes" : "no";
      report.evidence_text = describe(decision.evidence);
      report.evidence = evidence_json(decision.evidence);
      report.params = decision.params;
      report.error_bound = decision.error_bound;
      report.wall_ms = timer.elapsed_ms();
      print_report(report, json, out);
      return decision_exit(decision.yes);
    };

    if (app.got_subcommand(cmd_exists)) {
      const std::string text = read_file(input_path);
      report.digest = fnv1a_digest(text);
      Decision d = pc_cycle_exists(parse_edge_colored(text));
      d.params = params;
      return finish_decision("exists", d);
    }
    if (app.got_subcommand(cmd_odd)) {
      const std::string text = read_file(input_path);
      report.digest = fnv1a_digest(text);
      return finish_decision("odd", odd_pc_cycle_exists(parse_edge_colored(text), params));
    }
    if (app.got_subcommand(cmd_walk)) {
      const std::string text = read_file(input_path);
      report.digest = fnv1a_digest(text);
      Decision d = pc_closed_walk_exists(parse_edge_colored(text));
      d.params = params;
      return finish_decision("closed-walk", d);
    }
    if (app.got_subcommand(cmd_dicycle)) {
      const std::string text = read_file(input_path);
      report.digest = fnv1a_digest(text);
      Decision d = odd_dicycle_exists(parse_digraph(text));
      d.params = params;
      return finish_decision("odd-dicycle", d);
    }
    if (app.got_subcommand(cmd_find)) {
      const std::string text = read_file(input_path);
      report.digest = fnv1a_digest(text);
      const auto cycle = find_odd_pc_cycle(parse_edge_colored(text), params);
      report.command = "find-odd";
      report.answer = cycle.has_value() ? "yes" : "no";
      if (cycle.has_value()) {
        report.evidence_text = describe(Evidence{*cycle});
        report.evidence = evidence_json(Evidence{*cycle});
      } else {
        report.evidence_text = "no odd PC cycle";
        report.evidence = nlohmann::json{{"type", "none"}};
      }
      report.error_bound = 0.0;
      report.wall_ms = timer.elapsed_ms();
      print_report(report, json, out);
      return decision_exit(cycle.has_value());
    }
    if (app.got_subcommand(cmd_parity)) {
      const std::string text = read_file(input_path);
      report.digest = fnv1a_digest(text);
      const UncoloredGraph g = parse_uncolored(text);
      const EdgeSet e0 = parse_e0(e0_spec, g);
      const ParityClass result = parity_matching_decide(g, e0, params);
      report.command = "matching-parity";
      report.answer = to_string(result);
      report.evidence_text = "|E0| = " + std::to_string(e0.size());
      report.evidence = nlohmann::json{{"type", "parity_class"}, {"e0_size", e0.size()}};
      report.error_bound =
          (result == ParityClass::kAllEven || result == ParityClass::kAllOdd)
              ? std::pow(static_cast<double>(g.vertex_count()) /
                             static_cast<double>(params.prime - 1),
                         params.trials)
              : 0.0;
      report.wall_ms = timer.elapsed_ms();
      print_report(report, json, out);
      return kExitNo;
    }
    if (app.got_subcommand(cmd_gadget)) {
      const std::string text = read_file(input_path);
      const EdgeColoredMultigraph g = parse_edge_colored(text);
      out << serialize_gadget(build_gadget_graph(reduce_monochromatic(g)));
      return kExitNo;
    }
    if (app.got_subcommand(cmd_oracle)) {
      if (cmd_oracle->got_subcommand(oracle_cycles)) {
        const std::string text = read_file(input_path);
        const auto cycles = enumerate_pc_cycles(parse_edge_colored(text));
        if (json) {
          nlohmann::json j = nlohmann::json::array();
          for (const PcCycle& c : cycles) {
            j.push_back(evidence_json(Evidence{c}));
          }
          out << nlohmann::json{{"command", "oracle pc-cycles"},
                                {"count", cycles.size()},
                                {"cycles", j}}
                     .dump(2)
              << "\n";
        } else {
          for (const PcCycle& c : cycles) {
            out << describe(Evidence{c}) << "\n";
          }
          out << cycles.size() << " PC cycle(s)\n";
        }
        return kExitNo;
      }
      if (cmd_oracle->got_subcommand(oracle_matchings)) {
        const std::string text = read_file(input_path);
        const UncoloredGraph g = parse_uncolored(text);
        const EdgeSet e0 = parse_e0(e0_spec, g);
        const auto matchings = enumerate_perfect_matchings(g, e0, oracle_max_vertices);
        if (json) {
          nlohmann::json j = nlohmann::json::array();
          for (const CountedMatching& cm : matchings) {
            nlohmann::json edges = nlohmann::json::array();
            for (auto [u, v] : cm.matching.edges) {
              edges.push_back({g.name_of(u), g.name_of(v)});
            }
            j.push_back({{"edges", edges}, {"e0_count", cm.e0_count}});
          }
          out << nlohmann::json{{"command", "oracle matchings"},
                                {"count", matchings.size()},
                                {"matchings", j}}
                     .dump(2)
              << "\n";
        } else {
          for (const CountedMatching& cm : matchings) {
            for (auto [u, v] : cm.matching.edges) {
              out << g.name_of(u) << "-" << g.name_of(v) << " ";
            }
            out << "| e0 = " << cm.e0_count << "\n";
          }
          out << matchings.size() << " perfect matching(s)\n";
        }
        return kExitNo;
      }
      // oracle gen
      gen_spec.seed = params.seed;
      out << serialize(generate_instance(gen_spec));
      return kExitNo;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace pccycle::cli
