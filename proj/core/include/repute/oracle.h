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

#ifndef REPUTE_ORACLE_H_
#define REPUTE_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "repute/axioms.h"
#include "repute/graph.h"
#include "repute/preorder.h"

namespace repute {

struct Certificate {
  enum class Status { kSat, kUnsat };

  Status status = Status::kUnsat;
  // First satisfying ranking in enumeration order (SAT only).
  std::optional<Ranking> witness;
  // Preorders checked. Equals the total preorder count on UNSAT or when
  // counting all.
  std::uint64_t examined = 0;
  // Number of satisfying preorders, when requested.
  std::optional<std::uint64_t> satisfying;

  bool sat() const { return status == Status::kSat; }
};

struct CertifyOptions {
  std::size_t cap = kDefaultEnumerationCap;
  bool count_all = false;
};

// Exhaustively searches the total preorders of g's nodes for one that passes
// every axiom. Throws CapExceededError or ModeMismatchError.
Certificate Certify(const ReputationGraph& g, std::span<const Axiom> axioms,
                    const CertifyOptions& options = {});

// Transitivity plus very weak monotonicity restricted to strongly connected
// positive graphs. Throws PreconditionError when g is not strongly connected
// and ModeMismatchError unless it is PositiveOnly.
Certificate CertifyVwmStronglyConnected(const ReputationGraph& g,
                                        const CertifyOptions& options = {});

// Searches strongly connected positive graphs on `min_nodes`..`max_nodes`
// nodes (edge sets in increasing bitmask order) for one where no preorder
// satisfies {T, VWM}. Returns the first found.
std::optional<ReputationGraph> FindVwmImpossibilityWitness(std::size_t min_nodes,
                                                           std::size_t max_nodes);

}  // namespace repute

#endif  // REPUTE_ORACLE_H_
