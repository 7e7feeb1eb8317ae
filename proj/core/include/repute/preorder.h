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

#ifndef REPUTE_PREORDER_H_
#define REPUTE_PREORDER_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "repute/graph.h"

namespace repute {

// Social ranking: a total preorder stored as dense rank numbers. Rank 1 is
// the top level; u is at least as preferable as v iff rank(u) <= rank(v).
class Ranking {
 public:
  Ranking() = default;

  // `nodes` must be sorted and unique, `levels[i]` is the rank of nodes[i],
  // and the used levels must be exactly {1..k}.
  Ranking(std::vector<NodeId> nodes, std::vector<int> levels);

  // Every node on level 1.
  static Ranking AllEqual(std::vector<NodeId> nodes);

  const std::vector<NodeId>& nodes() const { return nodes_; }
  std::span<const int> levels() const { return levels_; }
  std::size_t size() const { return nodes_.size(); }
  int level_count() const { return level_count_; }

  int rank(const NodeId& id) const;  // throws UnknownNodeError
  int rank_at(std::size_t index) const { return levels_[index]; }
  std::size_t IndexOf(const NodeId& id) const;  // throws UnknownNodeError
  bool Contains(const NodeId& id) const;

  // Nodes on the given level, in lexicographic order.
  std::vector<NodeId> Level(int level) const;

  friend bool operator==(const Ranking&, const Ranking&) = default;

 private:
  std::vector<NodeId> nodes_;
  std::vector<int> levels_;
  int level_count_ = 0;
};

enum class Comparison { kHigher, kEqual, kLower };

std::string_view ToString(Comparison c);

Comparison Compare(const Ranking& r, const NodeId& u, const NodeId& v);

// Order-preserving relabeling of arbitrary integer scores (smaller = better)
// onto dense ranks.
Ranking Normalize(const std::map<NodeId, long long>& raw);

// True iff every strict relation of `earlier` also holds in `later`.
// Throws NodeSetMismatchError when the node sets differ.
bool IsRefinement(const Ranking& later, const Ranking& earlier);

inline constexpr std::size_t kDefaultEnumerationCap = 8;

// Visits every total preorder over `count` elements exactly once, as a
// dense level vector. Preorders are ordered set partitions built block by
// block; each block is a non-empty subset of the remaining elements taken in
// increasing bitmask order over element indices. Returning false from the
// visitor stops the enumeration. Returns the number of preorders visited.
// Throws CapExceededError if count > cap.
std::uint64_t ForEachLevelVector(
    std::size_t count,
    const std::function<bool(std::span<const int>)>& visitor,
    std::size_t cap = kDefaultEnumerationCap);

// Same enumeration over named nodes (sorted internally).
std::uint64_t ForEachPreorder(
    std::vector<NodeId> nodes,
    const std::function<bool(const Ranking&)>& visitor,
    std::size_t cap = kDefaultEnumerationCap);

std::vector<Ranking> EnumeratePreorders(std::vector<NodeId> nodes,
                                        std::size_t cap = kDefaultEnumerationCap);

// Ranking file format: one `NAME RANK` line per node in lexicographic order.
std::string SerializeRanking(const Ranking& r);

// Accepts the format above in any line order; blank lines and `#` comments
// are skipped. Throws ParseError on duplicates or non-dense ranks.
Ranking ParseRanking(std::string_view text);

}  // namespace repute

#endif  // REPUTE_PREORDER_H_
