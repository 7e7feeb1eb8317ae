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

#include "repute/graph.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "repute/errors.h"

namespace repute {

namespace {

bool KindAllowed(GraphMode mode, Feedback kind) {
  switch (mode) {
    case GraphMode::kPositiveOnly:
      return kind == Feedback::kPositive;
    case GraphMode::kNegativeOnly:
      return kind == Feedback::kNegative;
    case GraphMode::kCombined:
      return true;
  }
  return false;
}

std::vector<std::string_view> SplitTokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::string_view StripComment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace

NodeId::NodeId(std::string value) : value_(std::move(value)) {
  if (!IsValidToken(value_)) {
    throw Error("invalid node identifier '" + value_ + "'");
  }
}

bool NodeId::IsValidToken(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    // Bytes >= 0x80 are allowed so UTF-8 names pass through.
    return u >= 0x80 || (std::isgraph(u) != 0);
  });
}

std::ostream& operator<<(std::ostream& os, const NodeId& id) {
  return os << id.str();
}

std::string_view ToString(Feedback kind) {
  return kind == Feedback::kPositive ? "+" : "-";
}

std::string_view ToString(GraphMode mode) {
  switch (mode) {
    case GraphMode::kPositiveOnly:
      return "positive";
    case GraphMode::kNegativeOnly:
      return "negative";
    case GraphMode::kCombined:
      return "combined";
  }
  return "?";
}

ReputationGraph::ReputationGraph(GraphMode mode) : mode_(mode) {}

bool ReputationGraph::AddNode(const NodeId& id) {
  return nodes_.insert(id).second;
}

void ReputationGraph::AddEdge(const NodeId& source, const NodeId& target,
                              Feedback kind) {
  if (source == target) {
    throw InvalidGraphError("self-loop on node '" + source.str() + "'");
  }
  if (!HasNode(source)) {
    throw InvalidGraphError("edge source '" + source.str() +
                            "' is not a declared node");
  }
  if (!HasNode(target)) {
    throw InvalidGraphError("edge target '" + target.str() +
                            "' is not a declared node");
  }
  if (!KindAllowed(mode_, kind)) {
    throw InvalidGraphError(std::string(kind == Feedback::kPositive
                                            ? "positive"
                                            : "negative") +
                            " edge in a " + std::string(ToString(mode_)) +
                            " graph");
  }
  if (!edges_.insert(Edge{source, target, kind}).second) {
    throw InvalidGraphError("duplicate edge " + source.str() + " " +
                            std::string(ToString(kind)) + " " + target.str());
  }
}

bool ReputationGraph::HasEdge(const NodeId& source, const NodeId& target,
                              Feedback kind) const {
  return edges_.contains(Edge{source, target, kind});
}

NodeSet ReputationGraph::SupportSet(const NodeId& v, Feedback kind) const {
  if (!HasNode(v)) throw UnknownNodeError("unknown node '" + v.str() + "'");
  NodeSet support;
  for (const Edge& e : edges_) {
    if (e.target == v && e.kind == kind) support.insert(e.source);
  }
  return support;
}

NodeSet ReputationGraph::SupportSet(const NodeId& v) const {
  return SupportSet(v, SingleKind());
}

Feedback ReputationGraph::SingleKind() const {
  switch (mode_) {
    case GraphMode::kPositiveOnly:
      return Feedback::kPositive;
    case GraphMode::kNegativeOnly:
      return Feedback::kNegative;
    case GraphMode::kCombined:
      break;
  }
  throw ModeMismatchError("combined graph has two support sets per node");
}

SupportTable::SupportTable(const ReputationGraph& graph)
    : nodes(graph.NodeList()),
      positive(nodes.size()),
      negative(nodes.size()) {
  for (const Edge& e : graph.edges()) {
    int source = static_cast<int>(IndexOf(e.source));
    auto target = IndexOf(e.target);
    (e.kind == Feedback::kPositive ? positive : negative)[target].push_back(
        source);
  }
  for (auto& list : positive) std::sort(list.begin(), list.end());
  for (auto& list : negative) std::sort(list.begin(), list.end());
}

std::size_t SupportTable::IndexOf(const NodeId& id) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
  if (it == nodes.end() || *it != id) {
    throw UnknownNodeError("unknown node '" + id.str() + "'");
  }
  return static_cast<std::size_t>(it - nodes.begin());
}

ReputationGraph Complement(const ReputationGraph& graph) {
  if (graph.mode() != GraphMode::kPositiveOnly) {
    throw ModeMismatchError("complement requires a positive graph, got " +
                            std::string(ToString(graph.mode())));
  }
  ReputationGraph result(GraphMode::kNegativeOnly);
  for (const NodeId& v : graph.nodes()) result.AddNode(v);
  for (const NodeId& u : graph.nodes()) {
    for (const NodeId& v : graph.nodes()) {
      if (u != v && !graph.HasEdge(u, v, Feedback::kPositive)) {
        result.AddEdge(u, v, Feedback::kNegative);
      }
    }
  }
  return result;
}

bool IsStronglyConnected(const ReputationGraph& graph) {
  if (graph.node_count() == 0) {
    throw PreconditionError("strong connectivity of an empty graph");
  }
  SupportTable table(graph);
  const std::size_t n = table.size();
  // Forward and reverse adjacency; strongly connected iff node 0 reaches
  // everyone and everyone reaches node 0.
  std::vector<std::vector<int>> out(n), in(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto* list : {&table.positive[v], &table.negative[v]}) {
      for (int u : *list) {
        out[u].push_back(static_cast<int>(v));
        in[v].push_back(u);
      }
    }
  }
  auto reaches_all = [n](const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return reaches_all(out) && reaches_all(in);
}

ReputationGraph ParseGraph(std::string_view text) {
  std::optional<ReputationGraph> graph;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto tokens = SplitTokens(StripComment(line));
    if (tokens.empty()) continue;

    if (!graph) {
      if (tokens.size() != 2 || tokens[0] != "mode") {
        throw ParseError(ParseError::Kind::kSyntax, line_no,
                         "expected 'mode positive|negative|combined'");
      }
      if (tokens[1] == "positive") {
        graph.emplace(GraphMode::kPositiveOnly);
      } else if (tokens[1] == "negative") {
        graph.emplace(GraphMode::kNegativeOnly);
      } else if (tokens[1] == "combined") {
        graph.emplace(GraphMode::kCombined);
      } else {
        throw ParseError(ParseError::Kind::kSyntax, line_no,
                         "unknown mode '" + std::string(tokens[1]) + "'");
      }
      continue;
    }

    for (auto token : tokens) {
      if (!NodeId::IsValidToken(token)) {
        throw ParseError(ParseError::Kind::kSyntax, line_no, "invalid token");
      }
    }

    if (tokens.size() == 2 && tokens[0] == "node") {
      graph->AddNode(NodeId(std::string(tokens[1])));
      continue;
    }
    if (tokens.size() != 3 || (tokens[1] != "+" && tokens[1] != "-")) {
      throw ParseError(ParseError::Kind::kSyntax, line_no,
                       "expected 'SOURCE +|- TARGET' or 'node NAME'");
    }

    NodeId source{std::string(tokens[0])};
    NodeId target{std::string(tokens[2])};
    Feedback kind = tokens[1] == "+" ? Feedback::kPositive : Feedback::kNegative;
    if (source == target) {
      throw ParseError(ParseError::Kind::kSelfLoop, line_no,
                       "self-loop on node '" + source.str() + "'");
    }
    if (!KindAllowed(graph->mode(), kind)) {
      throw ParseError(ParseError::Kind::kKindMismatch, line_no,
                       "feedback kind '" + std::string(tokens[1]) +
                           "' not allowed in " +
                           std::string(ToString(graph->mode())) + " mode");
    }
    if (graph->HasEdge(source, target, kind)) {
      throw ParseError(ParseError::Kind::kDuplicateEdge, line_no,
                       "duplicate edge");
    }
    graph->AddNode(source);
    graph->AddNode(target);
    graph->AddEdge(source, target, kind);
  }
  if (!graph) {
    throw ParseError(ParseError::Kind::kSyntax, line_no == 0 ? 1 : line_no,
                     "missing 'mode' header");
  }
  return *std::move(graph);
}

std::string SerializeGraph(const ReputationGraph& graph) {
  std::ostringstream out;
  out << "mode " << ToString(graph.mode()) << '\n';
  NodeSet touched;
  for (const Edge& e : graph.edges()) {
    touched.insert(e.source);
    touched.insert(e.target);
  }
  for (const NodeId& v : graph.nodes()) {
    if (!touched.contains(v)) out << "node " << v << '\n';
  }
  for (const Edge& e : graph.edges()) {
    out << e.source << ' ' << ToString(e.kind) << ' ' << e.target << '\n';
  }
  return out.str();
}

}  // namespace repute
