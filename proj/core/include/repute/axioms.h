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

#ifndef REPUTE_AXIOMS_H_
#define REPUTE_AXIOMS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "repute/graph.h"
#include "repute/preorder.h"

namespace repute {

enum class Axiom { kT, kM, kBT, kBM, kTc, kMc, kVWM };

std::string_view ToString(Axiom a);
std::optional<Axiom> ParseAxiom(std::string_view name);

// Parses a comma-separated list such as "T,M". Throws Error on unknown names.
std::vector<Axiom> ParseAxiomList(std::string_view list);

bool IsCompatible(Axiom a, GraphMode mode);

// Axioms checked by CheckAll for the mode, in report order.
std::vector<Axiom> AxiomsFor(GraphMode mode);

struct Witness {
  NodeId first;
  NodeId second;
  std::string reason;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct AxiomReport {
  Axiom axiom;
  bool passed = true;
  std::optional<Witness> witness;  // set iff !passed
};

// Evaluates axioms over every ordered node pair of a fixed graph. Built once
// and reused across many rankings by the exhaustive oracle.
class AxiomChecker {
 public:
  explicit AxiomChecker(const ReputationGraph& g);

  const SupportTable& table() const { return table_; }
  GraphMode mode() const { return mode_; }

  // First violating pair (i, j) in lexicographic pair order, or nullopt.
  // `levels` is indexed like table().nodes. Does not check compatibility.
  std::optional<std::pair<int, int>> FirstViolation(std::span<const int> levels,
                                                    Axiom a);

  // Does the ordered pair (i, j) violate the axiom?
  bool ViolatesPair(std::span<const int> levels, Axiom a, int i, int j);

  bool SatisfiesAll(std::span<const int> levels, std::span<const Axiom> axioms);

 private:
  // Rebuilds the sorted supporter/accuser rank lists for `levels`.
  void Prepare(std::span<const int> levels);
  // Requires Prepare(levels).
  bool Violates(std::span<const int> levels, Axiom a, int i, int j) const;

  GraphMode mode_;
  SupportTable table_;
  std::vector<std::vector<int>> good_ranks_;
  std::vector<std::vector<int>> bad_ranks_;
};

// Throws ModeMismatchError for an incompatible axiom and
// NodeSetMismatchError when r does not rank exactly the nodes of g.
AxiomReport Check(const ReputationGraph& g, const Ranking& r, Axiom a);

std::vector<AxiomReport> CheckAll(const ReputationGraph& g, const Ranking& r);

// Human-readable explanation of why (u, v) violates the axiom.
std::string ExplainViolation(const ReputationGraph& g, const Ranking& r,
                             Axiom a, const NodeId& u, const NodeId& v);

}  // namespace repute

#endif  // REPUTE_AXIOMS_H_
