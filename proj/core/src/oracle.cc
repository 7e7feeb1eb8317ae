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

#include "repute/oracle.h"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "repute/errors.h"

namespace repute {

Certificate Certify(const ReputationGraph& g, std::span<const Axiom> axioms,
                    const CertifyOptions& options) {
  for (Axiom a : axioms) {
    if (!IsCompatible(a, g.mode())) {
      throw ModeMismatchError("axiom " + std::string(ToString(a)) +
                              " does not apply to a " +
                              std::string(ToString(g.mode())) + " graph");
    }
  }
  if (g.node_count() > options.cap) {
    throw CapExceededError(g.node_count(), options.cap);
  }

  AxiomChecker checker(g);
  Certificate cert;
  std::uint64_t satisfying = 0;
  cert.examined = ForEachLevelVector(
      g.node_count(),
      [&](std::span<const int> levels) {
        if (!checker.SatisfiesAll(levels, axioms)) return true;
        if (satisfying++ == 0) {
          cert.status = Certificate::Status::kSat;
          cert.witness = Ranking(checker.table().nodes,
                                 std::vector<int>(levels.begin(), levels.end()));
        }
        return options.count_all;
      },
      options.cap);
  if (options.count_all) cert.satisfying = satisfying;
  return cert;
}

Certificate CertifyVwmStronglyConnected(const ReputationGraph& g,
                                        const CertifyOptions& options) {
  if (g.mode() != GraphMode::kPositiveOnly) {
    throw ModeMismatchError("very weak monotonicity needs a positive graph");
  }
  if (!IsStronglyConnected(g)) {
    throw PreconditionError("graph is not strongly connected");
  }
  constexpr std::array<Axiom, 2> kAxioms{Axiom::kT, Axiom::kVWM};
  return Certify(g, kAxioms, options);
}

std::optional<ReputationGraph> FindVwmImpossibilityWitness(
    std::size_t min_nodes, std::size_t max_nodes) {
  constexpr std::array<Axiom, 2> kAxioms{Axiom::kT, Axiom::kVWM};
  for (std::size_t n = std::max<std::size_t>(min_nodes, 1); n <= max_nodes;
       ++n) {
    std::vector<NodeId> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.emplace_back(std::string(1, static_cast<char>('a' + i)));
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (u != v) pairs.emplace_back(u, v);
      }
    }
    const std::uint64_t limit = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      ReputationGraph g(GraphMode::kPositiveOnly);
      for (const NodeId& v : names) g.AddNode(v);
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (mask >> e & 1u) {
          g.AddEdge(names[pairs[e].first], names[pairs[e].second],
                    Feedback::kPositive);
        }
      }
      if (!IsStronglyConnected(g)) continue;
      if (!Certify(g, kAxioms).sat()) return g;
    }
  }
  return std::nullopt;
}

}  // namespace repute
