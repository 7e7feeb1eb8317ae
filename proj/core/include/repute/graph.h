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

#ifndef REPUTE_GRAPH_H_
#define REPUTE_GRAPH_H_

#include <compare>
#include <cstddef>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace repute {

// Identifier of an agent. A non-empty token of printable, non-whitespace
// characters. Ordered lexicographically; that order breaks every tie in the
// library.
class NodeId {
 public:
  explicit NodeId(std::string value);

  const std::string& str() const { return value_; }

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
  friend bool operator==(const NodeId&, const NodeId&) = default;

  static bool IsValidToken(std::string_view token);

 private:
  std::string value_;
};

std::ostream& operator<<(std::ostream& os, const NodeId& id);

using NodeSet = std::set<NodeId>;

enum class Feedback { kPositive, kNegative };

enum class GraphMode { kPositiveOnly, kNegativeOnly, kCombined };

std::string_view ToString(Feedback kind);
std::string_view ToString(GraphMode mode);

struct Edge {
  NodeId source;
  NodeId target;
  Feedback kind;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Directed feedback graph without self-loops. At most one edge per
// (source, target, kind); in single-kind modes every edge carries that kind.
class ReputationGraph {
 public:
  explicit ReputationGraph(GraphMode mode = GraphMode::kPositiveOnly);

  GraphMode mode() const { return mode_; }

  // Returns false if the node already existed.
  bool AddNode(const NodeId& id);

  // Throws InvalidGraphError on a self-loop, duplicate edge, an endpoint that
  // was never added, or a kind the mode does not allow.
  void AddEdge(const NodeId& source, const NodeId& target, Feedback kind);

  bool HasNode(const NodeId& id) const { return nodes_.contains(id); }
  bool HasEdge(const NodeId& source, const NodeId& target,
               Feedback kind) const;

  const NodeSet& nodes() const { return nodes_; }
  const std::set<Edge>& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Nodes in lexicographic order; index i here is node index i everywhere an
  // index-based view is used.
  std::vector<NodeId> NodeList() const { return {nodes_.begin(), nodes_.end()}; }

  // R(v) for the given kind: every u with an edge u -> v of that kind.
  NodeSet SupportSet(const NodeId& v, Feedback kind) const;

  // R(v) for single-kind graphs. Throws ModeMismatchError on combined graphs.
  NodeSet SupportSet(const NodeId& v) const;

  // The kind carried by a single-kind graph.
  Feedback SingleKind() const;

  friend bool operator==(const ReputationGraph&,
                         const ReputationGraph&) = default;

 private:
  GraphMode mode_;
  NodeSet nodes_;
  std::set<Edge> edges_;
};

// Index-based view of a graph: node i is NodeList()[i], and supporters are
// sorted lists of node indices. Built once per graph for hot loops.
struct SupportTable {
  explicit SupportTable(const ReputationGraph& graph);

  std::size_t size() const { return nodes.size(); }
  std::size_t IndexOf(const NodeId& id) const;  // throws UnknownNodeError

  std::vector<NodeId> nodes;
  std::vector<std::vector<int>> positive;
  std::vector<std::vector<int>> negative;
};

// Negative-feedback graph on the same nodes with an edge u -> v for every
// ordered pair u != v that is not an edge of `graph`. Requires PositiveOnly.
ReputationGraph Complement(const ReputationGraph& graph);

// True iff every ordered pair of nodes is joined by a directed path. Edge
// kinds are ignored. Throws PreconditionError on an empty graph.
bool IsStronglyConnected(const ReputationGraph& graph);

// Edge-list text format:
//
//   mode positive|negative|combined
//   node NAME            # declares a (possibly isolated) node
//   SOURCE + TARGET      # positive feedback
//   SOURCE - TARGET      # negative feedback
//
// Blank lines and `#` comments are ignored. Edge endpoints are declared
// implicitly. Throws ParseError.
ReputationGraph ParseGraph(std::string_view text);

// Inverse of ParseGraph; isolated nodes first, then edges, all sorted.
std::string SerializeGraph(const ReputationGraph& graph);

}  // namespace repute

#endif  // REPUTE_GRAPH_H_
