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

#include "repute/engine.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "repute/dominance.h"
#include "repute/errors.h"

namespace repute {

namespace {

enum class Polarity { kPositive, kNegative, kCombined };

std::vector<int> DenseFromScores(const std::vector<int>& scores) {
  std::set<int> distinct(scores.begin(), scores.end());
  std::map<int, int> dense;
  int next = 1;
  for (int s : distinct) dense[s] = next++;
  std::vector<int> levels;
  levels.reserve(scores.size());
  for (int s : scores) levels.push_back(dense[s]);
  return levels;
}

class Refiner {
 public:
  Refiner(const ReputationGraph& g, Polarity polarity)
      : table_(g), polarity_(polarity), good_(table_.size()), bad_(table_.size()) {
    const std::size_t n = table_.size();
    std::vector<int> scores(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      switch (polarity_) {
        case Polarity::kPositive:
          scores[v] = -static_cast<int>(table_.positive[v].size());
          break;
        case Polarity::kNegative:
          scores[v] = static_cast<int>(table_.negative[v].size());
          break;
        case Polarity::kCombined:
          break;
      }
    }
    levels_ = DenseFromScores(scores);
  }

  RankingResult Run() {
    RankingResult result;
    result.initial = Snapshot();
    while (auto step = Split(static_cast<int>(result.trace.size()) + 1)) {
      result.trace.push_back(*std::move(step));
    }
    result.ranking = Snapshot();
    return result;
  }

 private:
  Ranking Snapshot() const { return Ranking(table_.nodes, levels_); }

  void RefreshProfiles() {
    for (std::size_t v = 0; v < table_.size(); ++v) {
      good_[v] = SortedRanks(levels_, table_.positive[v]);
      bad_[v] = SortedRanks(levels_, table_.negative[v]);
    }
  }

  // Does the support of i beat that of j under the current ranking?
  bool Dominates(std::size_t i, std::size_t j) const {
    switch (polarity_) {
      case Polarity::kPositive:
        return MoreImportantSorted(good_[i], good_[j]);
      case Polarity::kNegative:
        return MoreImportantSorted(bad_[i], bad_[j]);
      case Polarity::kCombined:
        return SociallyStrongerSorted(good_[i], bad_[i], good_[j], bad_[j]);
    }
    return false;
  }

  bool Same(std::size_t i, std::size_t j) const {
    const bool good_eq = EquallyStrongSorted(good_[i], good_[j]);
    const bool bad_eq = EquallyStrongSorted(bad_[i], bad_[j]);
    switch (polarity_) {
      case Polarity::kPositive:
        return good_eq;
      case Polarity::kNegative:
        return bad_eq;
      case Polarity::kCombined:
        return good_eq && bad_eq;
    }
    return false;
  }

  std::optional<RefinementStep> Split(int iteration) {
    RefreshProfiles();
    const std::size_t n = table_.size();
    std::optional<std::size_t> chosen;
    std::size_t witness = 0;
    for (std::size_t i = 0; i < n && !chosen; ++i) {
      std::optional<std::size_t> beaten;
      bool undominated = true;
      for (std::size_t j = 0; j < n && undominated; ++j) {
        if (j == i || levels_[j] != levels_[i]) continue;
        if (!beaten && Dominates(i, j)) beaten = j;
        if (Dominates(j, i)) undominated = false;
      }
      if (beaten && undominated) {
        chosen = i;
        witness = *beaten;
      }
    }
    if (!chosen) return std::nullopt;

    const int level = levels_[*chosen];
    const bool move_up = polarity_ != Polarity::kNegative;
    RefinementStep step{.iteration = iteration,
                        .chosen = table_.nodes[*chosen],
                        .witness = table_.nodes[witness],
                        .chosen_moved_up = move_up,
                        .tied = {},
                        .separated = {},
                        .ranking = {}};
    std::vector<int> next = levels_;
    for (std::size_t k = 0; k < n; ++k) {
      if (levels_[k] > level) {
        next[k] = levels_[k] + 1;
      } else if (levels_[k] == level) {
        const bool tied = k == *chosen || Same(k, *chosen);
        (tied ? step.tied : step.separated).push_back(table_.nodes[k]);
        next[k] = (tied == move_up) ? level : level + 1;
      }
    }
    levels_ = std::move(next);
    step.ranking = Snapshot();
    return step;
  }

  SupportTable table_;
  Polarity polarity_;
  std::vector<int> levels_;
  std::vector<std::vector<int>> good_;
  std::vector<std::vector<int>> bad_;
};

void RequireMode(const ReputationGraph& g, GraphMode mode, const char* what) {
  if (g.mode() != mode) {
    throw ModeMismatchError(std::string(what) + " requires a " +
                            std::string(ToString(mode)) + " graph, got " +
                            std::string(ToString(g.mode())));
  }
}

}  // namespace

RankingResult RankPositive(const ReputationGraph& g) {
  RequireMode(g, GraphMode::kPositiveOnly, "RankPositive");
  return Refiner(g, Polarity::kPositive).Run();
}

RankingResult RankNegative(const ReputationGraph& g) {
  RequireMode(g, GraphMode::kNegativeOnly, "RankNegative");
  return Refiner(g, Polarity::kNegative).Run();
}

RankingResult RankCombined(const ReputationGraph& g) {
  RequireMode(g, GraphMode::kCombined, "RankCombined");
  return Refiner(g, Polarity::kCombined).Run();
}

RankingResult Rank(const ReputationGraph& g) {
  switch (g.mode()) {
    case GraphMode::kPositiveOnly:
      return RankPositive(g);
    case GraphMode::kNegativeOnly:
      return RankNegative(g);
    case GraphMode::kCombined:
      return RankCombined(g);
  }
  throw ModeMismatchError("unknown graph mode");
}

}  // namespace repute
