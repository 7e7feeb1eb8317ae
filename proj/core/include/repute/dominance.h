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

#ifndef REPUTE_DOMINANCE_H_
#define REPUTE_DOMINANCE_H_

#include <span>
#include <string_view>
#include <vector>

#include "repute/graph.h"
#include "repute/preorder.h"

namespace repute {

// Comparison of two support sets A and B under a ranking. "A dominates B"
// means there is a 1-1 map f: B -> A with rank(f(b)) <= rank(b) for every b,
// and either f is not onto or some image is strictly better.
enum class Dominance {
  kStrictlyDominates,
  kEquallyStrong,
  kIncomparable,
  kStrictlyDominated,
};

std::string_view ToString(Dominance d);

// The same relations over rank lists sorted ascending (best first). These
// are the primitives; the set-based overloads below sort and delegate.
//
// A rank-respecting injection B -> A exists iff |A| >= |B| and the i-th best
// rank of A is at least as good as the i-th best rank of B for every i < |B|.
bool AtLeastAsStrongSorted(std::span<const int> a, std::span<const int> b);
bool EquallyStrongSorted(std::span<const int> a, std::span<const int> b);
bool MoreImportantSorted(std::span<const int> a, std::span<const int> b);

// Ranks of the given node indices under `levels`, sorted ascending.
std::vector<int> SortedRanks(std::span<const int> levels,
                             std::span<const int> indices);

bool AtLeastAsStrong(const Ranking& r, const NodeSet& a, const NodeSet& b);

// Also the "more reliable" relation under negative feedback.
bool MoreImportant(const Ranking& r, const NodeSet& a, const NodeSet& b);

// Identical rank multisets.
bool EquallyStrong(const Ranking& r, const NodeSet& a, const NodeSet& b);

Dominance CompareSupport(const Ranking& r, const NodeSet& a, const NodeSet& b);

// Combined feedback: u's accusers are no more reliable than v's, u's
// supporters are at least as important as v's, and one of the two is
// strict. Any graph mode is accepted; missing kinds act as empty sets.
bool SociallyStronger(const Ranking& r, const ReputationGraph& g,
                      const NodeId& u, const NodeId& v);

// Index-based form over per-node sorted rank lists (good = supporters,
// bad = accusers).
bool SociallyStrongerSorted(std::span<const int> good_u,
                            std::span<const int> bad_u,
                            std::span<const int> good_v,
                            std::span<const int> bad_v);

}  // namespace repute

#endif  // REPUTE_DOMINANCE_H_
