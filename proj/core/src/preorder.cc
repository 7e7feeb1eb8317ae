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

#include "repute/preorder.h"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>
#include <utility>

#include "repute/errors.h"

namespace repute {

namespace {

int CountLevels(const std::vector<int>& levels) {
  std::set<int> used(levels.begin(), levels.end());
  int k = static_cast<int>(used.size());
  if (!used.empty() && (*used.begin() != 1 || *used.rbegin() != k)) return -1;
  return k;
}

class LevelEnumerator {
 public:
  LevelEnumerator(std::size_t n,
                  const std::function<bool(std::span<const int>)>& visitor)
      : levels_(n, 0), visitor_(visitor) {}

  std::uint64_t Run() {
    const std::uint32_t all =
        levels_.empty() ? 0u : ((1u << levels_.size()) - 1u);
    Recurse(all, 1);
    return count_;
  }

 private:
  void Recurse(std::uint32_t remaining, int level) {
    if (stopped_) return;
    if (remaining == 0) {
      ++count_;
      if (!visitor_(levels_)) stopped_ = true;
      return;
    }
    // Non-empty submasks of `remaining` in increasing numeric order.
    std::uint32_t block = 0;
    do {
      block = ((block | ~remaining) + 1u) & remaining;
      if (block == 0) break;
      for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (block & (1u << i)) levels_[i] = level;
      }
      Recurse(remaining & ~block, level + 1);
    } while (!stopped_);
  }

  std::vector<int> levels_;
  const std::function<bool(std::span<const int>)>& visitor_;
  std::uint64_t count_ = 0;
  bool stopped_ = false;
};

}  // namespace

Ranking::Ranking(std::vector<NodeId> nodes, std::vector<int> levels)
    : nodes_(std::move(nodes)), levels_(std::move(levels)) {
  if (nodes_.size() != levels_.size()) {
    throw Error("ranking: node and level counts differ");
  }
  if (!std::is_sorted(nodes_.begin(), nodes_.end()) ||
      std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw Error("ranking: nodes must be sorted and unique");
  }
  level_count_ = CountLevels(levels_);
  if (level_count_ < 0) throw Error("ranking: levels are not dense");
}

Ranking Ranking::AllEqual(std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  std::vector<int> levels(nodes.size(), 1);
  return Ranking(std::move(nodes), std::move(levels));
}

std::size_t Ranking::IndexOf(const NodeId& id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end() || *it != id) {
    throw UnknownNodeError("node '" + id.str() + "' is not ranked");
  }
  return static_cast<std::size_t>(it - nodes_.begin());
}

bool Ranking::Contains(const NodeId& id) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), id);
}

int Ranking::rank(const NodeId& id) const { return levels_[IndexOf(id)]; }

std::vector<NodeId> Ranking::Level(int level) const {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (levels_[i] == level) out.push_back(nodes_[i]);
  }
  return out;
}

std::string_view ToString(Comparison c) {
  switch (c) {
    case Comparison::kHigher:
      return "higher";
    case Comparison::kEqual:
      return "equal";
    case Comparison::kLower:
      return "lower";
  }
  return "?";
}

Comparison Compare(const Ranking& r, const NodeId& u, const NodeId& v) {
  int ru = r.rank(u);
  int rv = r.rank(v);
  if (ru < rv) return Comparison::kHigher;
  if (ru == rv) return Comparison::kEqual;
  return Comparison::kLower;
}

Ranking Normalize(const std::map<NodeId, long long>& raw) {
  std::set<long long> distinct;
  for (const auto& [node, score] : raw) distinct.insert(score);
  std::map<long long, int> dense;
  int next = 1;
  for (long long score : distinct) dense[score] = next++;

  std::vector<NodeId> nodes;
  std::vector<int> levels;
  nodes.reserve(raw.size());
  levels.reserve(raw.size());
  for (const auto& [node, score] : raw) {
    nodes.push_back(node);
    levels.push_back(dense[score]);
  }
  return Ranking(std::move(nodes), std::move(levels));
}

bool IsRefinement(const Ranking& later, const Ranking& earlier) {
  if (later.nodes() != earlier.nodes()) {
    throw NodeSetMismatchError("refinement check over different node sets");
  }
  const std::size_t n = later.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (earlier.rank_at(i) < earlier.rank_at(j) &&
          !(later.rank_at(i) < later.rank_at(j))) {
        return false;
      }
    }
  }
  return true;
}

std::uint64_t ForEachLevelVector(
    std::size_t count,
    const std::function<bool(std::span<const int>)>& visitor,
    std::size_t cap) {
  if (count > cap) throw CapExceededError(count, cap);
  if (count > 31) throw CapExceededError(count, 31);
  return LevelEnumerator(count, visitor).Run();
}

std::uint64_t ForEachPreorder(std::vector<NodeId> nodes,
                              const std::function<bool(const Ranking&)>& visitor,
                              std::size_t cap) {
  std::sort(nodes.begin(), nodes.end());
  return ForEachLevelVector(
      nodes.size(),
      [&](std::span<const int> levels) {
        return visitor(
            Ranking(nodes, std::vector<int>(levels.begin(), levels.end())));
      },
      cap);
}

std::vector<Ranking> EnumeratePreorders(std::vector<NodeId> nodes,
                                        std::size_t cap) {
  std::vector<Ranking> out;
  ForEachPreorder(
      std::move(nodes),
      [&](const Ranking& r) {
        out.push_back(r);
        return true;
      },
      cap);
  return out;
}

std::string SerializeRanking(const Ranking& r) {
  std::ostringstream out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    out << r.nodes()[i] << ' ' << r.rank_at(i) << '\n';
  }
  return out.str();
}

Ranking ParseRanking(std::string_view text) {
  std::map<NodeId, int> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream in(line);
    std::string name, rank_text, extra;
    if (!(in >> name)) continue;
    if (!(in >> rank_text) || (in >> extra)) {
      throw ParseError(ParseError::Kind::kSyntax, line_no,
                       "expected 'NAME RANK'");
    }
    int rank = 0;
    auto [ptr, ec] = std::from_chars(rank_text.data(),
                                     rank_text.data() + rank_text.size(), rank);
    if (ec != std::errc() || ptr != rank_text.data() + rank_text.size() ||
        rank < 1) {
      throw ParseError(ParseError::Kind::kSyntax, line_no,
                       "rank must be a positive integer");
    }
    if (!entries.emplace(NodeId(name), rank).second) {
      throw ParseError(ParseError::Kind::kDuplicateNode, line_no,
                       "node '" + name + "' ranked twice");
    }
  }

  std::vector<NodeId> nodes;
  std::vector<int> levels;
  for (const auto& [node, rank] : entries) {
    nodes.push_back(node);
    levels.push_back(rank);
  }
  if (CountLevels(levels) < 0) {
    throw ParseError(ParseError::Kind::kNotDense, line_no,
                     "ranks must be exactly 1..k");
  }
  return Ranking(std::move(nodes), std::move(levels));
}

}  // namespace repute
