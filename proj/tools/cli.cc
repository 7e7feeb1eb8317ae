// Copyright 2026 The Repute Authors
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

#include "cli.h"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"
#include "repute/engine.h"
#include "repute/errors.h"
#include "repute/graph.h"
#include "repute/oracle.h"

namespace repute::cli {

namespace {

using nlohmann::json;

json RankingJson(const Ranking& r) {
  json out = json::array();
  for (std::size_t i = 0; i < r.size(); ++i) {
    out.push_back({{"node", r.nodes()[i].str()}, {"rank", r.rank_at(i)}});
  }
  return out;
}

json NodeListJson(const std::vector<NodeId>& nodes) {
  json out = json::array();
  for (const auto& v : nodes) out.push_back(v.str());
  return out;
}

std::string JoinNodes(const std::vector<NodeId>& nodes) {
  std::string out;
  for (const auto& v : nodes) {
    if (!out.empty()) out += ',';
    out += v.str();
  }
  return out;
}

// Snapshot lines for the text trace; `#`-prefixed so the output stays a
// valid ranking file.
std::string CommentedRanking(const Ranking& r) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    out += "#   " + r.nodes()[i].str() + ' ' + std::to_string(r.rank_at(i)) +
           '\n';
  }
  return out;
}

std::vector<Axiom> ResolveAxioms(const ReputationGraph& g,
                                 std::span<const Axiom> requested) {
  if (requested.empty()) return AxiomsFor(g.mode());
  return {requested.begin(), requested.end()};
}

CommandOutcome ErrorOutcome(const std::string& message) {
  return CommandOutcome{kExitError, "", "error: " + message + '\n'};
}

template <typename Fn>
CommandOutcome Guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return ErrorOutcome(e.what());
  }
}

}  // namespace

CommandOutcome CmdRank(std::string_view graph_text, const RankOptions& options) {
  return Guarded([&] {
    ReputationGraph g = ParseGraph(graph_text);
    RankingResult result = Rank(g);
    CommandOutcome outcome;
    if (options.format == Format::kJson) {
      json doc{{"mode", std::string(ToString(g.mode()))},
               {"ranking", RankingJson(result.ranking)}};
      if (options.trace) {
        json steps = json::array();
        for (const auto& step : result.trace) {
          steps.push_back({{"iteration", step.iteration},
                           {"chosen", step.chosen.str()},
                           {"witness", step.witness.str()},
                           {"direction", step.chosen_moved_up ? "up" : "down"},
                           {"tied", NodeListJson(step.tied)},
                           {"separated", NodeListJson(step.separated)},
                           {"ranking", RankingJson(step.ranking)}});
        }
        doc["initial"] = RankingJson(result.initial);
        doc["trace"] = std::move(steps);
      }
      outcome.rendered = doc.dump(2) + '\n';
      return outcome;
    }
    if (options.trace) {
      outcome.rendered += "# initial\n" + CommentedRanking(result.initial);
      for (const auto& step : result.trace) {
        outcome.rendered +=
            "# iteration " + std::to_string(step.iteration) + ": chose " +
            step.chosen.str() + " (dominates " + step.witness.str() + "); " +
            JoinNodes(step.tied) + (step.chosen_moved_up ? " above " : " below ") +
            JoinNodes(step.separated) + '\n' + CommentedRanking(step.ranking);
      }
    }
    outcome.rendered += SerializeRanking(result.ranking);
    return outcome;
  });
}

CommandOutcome CmdCheck(std::string_view graph_text,
                        std::string_view ranking_text,
                        std::span<const Axiom> axioms, Format format) {
  return Guarded([&] {
    ReputationGraph g = ParseGraph(graph_text);
    Ranking r = ParseRanking(ranking_text);
    std::vector<AxiomReport> reports;
    for (Axiom a : ResolveAxioms(g, axioms)) reports.push_back(Check(g, r, a));

    bool all_passed = true;
    for (const auto& report : reports) all_passed = all_passed && report.passed;

    CommandOutcome outcome;
    outcome.exit_code = all_passed ? kExitOk : kExitNegative;
    if (format == Format::kJson) {
      json items = json::array();
      for (const auto& report : reports) {
        json witness = nullptr;
        if (report.witness) {
          witness = {{"first", report.witness->first.str()},
                     {"second", report.witness->second.str()},
                     {"reason", report.witness->reason}};
        }
        items.push_back({{"axiom", std::string(ToString(report.axiom))},
                         {"passed", report.passed},
                         {"witness", witness}});
      }
      outcome.rendered =
          json{{"passed", all_passed}, {"reports", items}}.dump(2) + '\n';
      return outcome;
    }
    for (const auto& report : reports) {
      outcome.rendered += std::string(ToString(report.axiom)) +
                          (report.passed ? " pass" : " fail");
      if (report.witness) {
        outcome.rendered += " witness: (" + report.witness->first.str() + "," +
                            report.witness->second.str() + ") " +
                            report.witness->reason;
      }
      outcome.rendered += '\n';
    }
    return outcome;
  });
}

CommandOutcome CmdCertify(std::string_view graph_text,
                          std::span<const Axiom> axioms,
                          const CertifyCommandOptions& options) {
  return Guarded([&] {
    ReputationGraph g = ParseGraph(graph_text);
    auto resolved = ResolveAxioms(g, axioms);
    Certificate cert = Certify(
        g, resolved, CertifyOptions{.cap = options.cap, .count_all = options.count_all});

    CommandOutcome outcome;
    outcome.exit_code = cert.sat() ? kExitOk : kExitNegative;
    if (options.format == Format::kJson) {
      json doc{{"status", cert.sat() ? "SAT" : "UNSAT"},
               {"examined", cert.examined},
               {"witness", cert.witness ? RankingJson(*cert.witness) : json()}};
      if (cert.satisfying) doc["satisfying"] = *cert.satisfying;
      outcome.rendered = doc.dump(2) + '\n';
      return outcome;
    }
    if (cert.sat()) {
      outcome.rendered = "SAT:\n" + SerializeRanking(*cert.witness);
    } else {
      outcome.rendered =
          "UNSAT after " + std::to_string(cert.examined) + " preorders\n";
    }
    if (cert.satisfying) {
      outcome.rendered +=
          "# satisfying preorders: " + std::to_string(*cert.satisfying) + '\n';
    }
    return outcome;
  });
}

CommandOutcome CmdComplement(std::string_view graph_text, Format format) {
  return Guarded([&] {
    ReputationGraph complement = Complement(ParseGraph(graph_text));
    CommandOutcome outcome;
    if (format == Format::kJson) {
      json edges = json::array();
      for (const Edge& e : complement.edges()) {
        edges.push_back({{"source", e.source.str()},
                         {"sign", std::string(ToString(e.kind))},
                         {"target", e.target.str()}});
      }
      outcome.rendered = json{{"mode", std::string(ToString(complement.mode()))},
                              {"nodes", NodeListJson(complement.NodeList())},
                              {"edges", edges}}
                             .dump(2) +
                         '\n';
      return outcome;
    }
    outcome.rendered = SerializeGraph(complement);
    return outcome;
  });
}

namespace {

bool ReadSource(const std::string& path, std::istream& in, std::string& text,
                std::string& error) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
    return true;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    error = "cannot open '" + path + "'";
    return false;
  }
  text.assign(std::istreambuf_iterator<char>(file), {});
  return true;
}

}  // namespace

int Run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Axiomatic social rankings over reputation graphs"};
  app.require_subcommand(1);

  std::string format_name = "text";
  std::string graph_path;
  std::string ranking_path;
  std::string axiom_list;
  bool trace = false;
  bool count_all = false;
  std::size_t cap = kDefaultEnumerationCap;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* rank = app.add_subcommand("rank", "Compute the social ranking of a graph");
  rank->add_option("graph", graph_path, "Edge-list file or -")->required();
  rank->add_flag("--trace", trace, "Print every refinement step");
  add_format(rank);

  auto* check = app.add_subcommand("check", "Check a ranking against axioms");
  check->add_option("graph", graph_path, "Edge-list file or -")->required();
  check->add_option("ranking", ranking_path, "Ranking file or -")->required();
  check->add_option("--axioms", axiom_list, "Comma-separated axioms, e.g. T,M");
  add_format(check);

  auto* certify = app.add_subcommand(
      "certify", "Search all total preorders for one satisfying the axioms");
  certify->add_option("graph", graph_path, "Edge-list file or -")->required();
  certify->add_option("--axioms", axiom_list, "Comma-separated axioms");
  certify->add_option("--cap", cap, "Maximum node count to enumerate");
  certify->add_flag("--count-all", count_all, "Count every satisfying preorder");
  add_format(certify);

  auto* complement =
      app.add_subcommand("complement", "Print the negative complement graph");
  complement->add_option("graph", graph_path, "Edge-list file or -")->required();
  add_format(complement);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  const Format format = format_name == "json" ? Format::kJson : Format::kText;
  if (graph_path == "-" && ranking_path == "-") {
    err << "error: only one input may be read from standard input\n";
    return kExitError;
  }

  std::vector<Axiom> axioms;
  try {
    axioms = ParseAxiomList(axiom_list);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  std::string graph_text, ranking_text, error;
  if (!ReadSource(graph_path, in, graph_text, error)) {
    err << "error: " << error << '\n';
    return kExitError;
  }

  CommandOutcome outcome;
  if (*rank) {
    outcome = CmdRank(graph_text, RankOptions{.trace = trace, .format = format});
  } else if (*check) {
    if (!ReadSource(ranking_path, in, ranking_text, error)) {
      err << "error: " << error << '\n';
      return kExitError;
    }
    outcome = CmdCheck(graph_text, ranking_text, axioms, format);
  } else if (*certify) {
    outcome = CmdCertify(
        graph_text, axioms,
        CertifyCommandOptions{.cap = cap, .count_all = count_all, .format = format});
  } else {
    outcome = CmdComplement(graph_text, format);
  }
  out << outcome.rendered;
  err << outcome.diagnostic;
  return outcome.exit_code;
}

}  // namespace repute::cli
