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

#include "repute/axioms.h"

#include <algorithm>
#include <array>
#include <utility>

#include "repute/dominance.h"
#include "repute/errors.h"

namespace repute {

namespace {

constexpr std::array<std::pair<Axiom, std::string_view>, 7> kNames{{
    {Axiom::kT, "T"},
    {Axiom::kM, "M"},
    {Axiom::kBT, "BT"},
    {Axiom::kBM, "BM"},
    {Axiom::kTc, "Tc"},
    {Axiom::kMc, "Mc"},
    {Axiom::kVWM, "VWM"},
}};

// Some element of `from` ranked strictly above some element of `over`, on
// rank lists sorted best first.
bool AnyAbove(const std::vector<int>& from, const std::vector<int>& over) {
  return !from.empty() && !over.empty() && from.front() < over.back();
}

}  // namespace

std::string_view ToString(Axiom a) {
  for (const auto& [axiom, name] : kNames) {
    if (axiom == a) return name;
  }
  return "?";
}

std::optional<Axiom> ParseAxiom(std::string_view name) {
  for (const auto& [axiom, text] : kNames) {
    if (text == name) return axiom;
  }
  return std::nullopt;
}

std::vector<Axiom> ParseAxiomList(std::string_view list) {
  std::vector<Axiom> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    auto comma = list.find(',', pos);
    if (comma == std::string_view::npos) comma = list.size();
    auto name = list.substr(pos, comma - pos);
    pos = comma + 1;
    if (name.empty()) continue;
    auto axiom = ParseAxiom(name);
    if (!axiom) throw Error("unknown axiom '" + std::string(name) + "'");
    out.push_back(*axiom);
  }
  return out;
}

bool IsCompatible(Axiom a, GraphMode mode) {
  switch (a) {
    case Axiom::kT:
    case Axiom::kM:
    case Axiom::kVWM:
      return mode == GraphMode::kPositiveOnly;
    case Axiom::kBT:
    case Axiom::kBM:
      return mode == GraphMode::kNegativeOnly;
    case Axiom::kTc:
    case Axiom::kMc:
      return mode == GraphMode::kCombined;
  }
  return false;
}

std::vector<Axiom> AxiomsFor(GraphMode mode) {
  switch (mode) {
    case GraphMode::kPositiveOnly:
      return {Axiom::kT, Axiom::kM, Axiom::kVWM};
    case GraphMode::kNegativeOnly:
      return {Axiom::kBT, Axiom::kBM};
    case GraphMode::kCombined:
      return {Axiom::kTc, Axiom::kMc};
  }
  return {};
}

AxiomChecker::AxiomChecker(const ReputationGraph& g)
    : mode_(g.mode()),
      table_(g),
      good_ranks_(table_.size()),
      bad_ranks_(table_.size()) {}

void AxiomChecker::Prepare(std::span<const int> levels) {
  for (std::size_t v = 0; v < table_.size(); ++v) {
    auto& good = good_ranks_[v];
    good.clear();
    for (int u : table_.positive[v]) good.push_back(levels[u]);
    std::sort(good.begin(), good.end());
    auto& bad = bad_ranks_[v];
    bad.clear();
    for (int u : table_.negative[v]) bad.push_back(levels[u]);
    std::sort(bad.begin(), bad.end());
  }
}

bool AxiomChecker::ViolatesPair(std::span<const int> levels, Axiom a, int i,
                                int j) {
  Prepare(levels);
  return Violates(levels, a, i, j);
}

bool AxiomChecker::Violates(std::span<const int> levels, Axiom a, int i,
                            int j) const {
  const auto& gi = good_ranks_[i];
  const auto& gj = good_ranks_[j];
  const auto& bi = bad_ranks_[i];
  const auto& bj = bad_ranks_[j];
  const bool i_above = levels[i] < levels[j];
  const bool i_below = levels[i] > levels[j];
  switch (a) {
    case Axiom::kT:
      return MoreImportantSorted(gi, gj) && !i_above;
    case Axiom::kM:
      return i_above && !MoreImportantSorted(gi, gj) && !AnyAbove(gi, gj);
    case Axiom::kVWM:
      return i_above && !MoreImportantSorted(gi, gj) &&
             gi.size() <= gj.size() + 1 && !AnyAbove(gi, gj);
    case Axiom::kBT:
      return MoreImportantSorted(bi, bj) && !i_below;
    case Axiom::kBM:
      return i_below && !MoreImportantSorted(bi, bj) && !AnyAbove(bi, bj);
    case Axiom::kTc:
      return SociallyStrongerSorted(gi, bi, gj, bj) && !i_above;
    case Axiom::kMc:
      // Good-side witness: a supporter of i above one of j. Bad-side
      // witness: an accuser of i below one of j.
      return i_above && !SociallyStrongerSorted(gi, bi, gj, bj) &&
             !AnyAbove(gi, gj) && !AnyAbove(bj, bi);
  }
  return false;
}

std::optional<std::pair<int, int>> AxiomChecker::FirstViolation(
    std::span<const int> levels, Axiom a) {
  Prepare(levels);
  const int n = static_cast<int>(table_.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && Violates(levels, a, i, j)) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

bool AxiomChecker::SatisfiesAll(std::span<const int> levels,
                                std::span<const Axiom> axioms) {
  Prepare(levels);
  const int n = static_cast<int>(table_.size());
  for (Axiom a : axioms) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && Violates(levels, a, i, j)) return false;
      }
    }
  }
  return true;
}

std::string ExplainViolation(const ReputationGraph& g, const Ranking& r,
                             Axiom a, const NodeId& u, const NodeId& v) {
  const std::string su = u.str();
  const std::string sv = v.str();
  std::string relation = std::string(ToString(Compare(r, u, v)));
  switch (a) {
    case Axiom::kT:
      return "R(" + su + ") is more important than R(" + sv + ") but " + su +
             " is " + relation + " relative to " + sv;
    case Axiom::kM:
      return su + " is ranked above " + sv + ", R(" + su +
             ") is not more important than R(" + sv + "), and no supporter of " +
             su + " is ranked above a supporter of " + sv;
    case Axiom::kVWM:
      return su + " is ranked above " + sv + ", |R(" + su + ")| = " +
             std::to_string(g.SupportSet(u).size()) + " <= |R(" + sv +
             ")| + 1, R(" + su + ") is not more important, and no supporter of " +
             su + " is ranked above a supporter of " + sv;
    case Axiom::kBT:
      return "R(" + su + ") is more reliable than R(" + sv + ") but " + su +
             " is " + relation + " relative to " + sv;
    case Axiom::kBM:
      return su + " is ranked below " + sv + ", R(" + su +
             ") is not more reliable than R(" + sv + "), and no accuser of " +
             su + " is ranked above an accuser of " + sv;
    case Axiom::kTc:
      return su + " is socially stronger than " + sv + " but is " + relation +
             " relative to it";
    case Axiom::kMc:
      return su + " is ranked above " + sv + " without being socially stronger, "
             "and neither a good-side nor a bad-side witness exists";
  }
  return "";
}

AxiomReport Check(const ReputationGraph& g, const Ranking& r, Axiom a) {
  if (!IsCompatible(a, g.mode())) {
    throw ModeMismatchError("axiom " + std::string(ToString(a)) +
                            " does not apply to a " +
                            std::string(ToString(g.mode())) + " graph");
  }
  if (r.nodes() != g.NodeList()) {
    throw NodeSetMismatchError("ranking does not cover exactly the graph nodes");
  }
  AxiomChecker checker(g);
  AxiomReport report{.axiom = a, .passed = true, .witness = std::nullopt};
  if (auto pair = checker.FirstViolation(r.levels(), a)) {
    const NodeId& u = r.nodes()[pair->first];
    const NodeId& v = r.nodes()[pair->second];
    report.passed = false;
    report.witness = Witness{u, v, ExplainViolation(g, r, a, u, v)};
  }
  return report;
}

std::vector<AxiomReport> CheckAll(const ReputationGraph& g, const Ranking& r) {
  std::vector<AxiomReport> reports;
  for (Axiom a : AxiomsFor(g.mode())) reports.push_back(Check(g, r, a));
  return reports;
}

}  // namespace repute
