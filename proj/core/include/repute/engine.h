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

#ifndef REPUTE_ENGINE_H_
#define REPUTE_ENGINE_H_

#include <vector>

#include "repute/graph.h"
#include "repute/preorder.h"

namespace repute {

// One split of the iterative refinement. `chosen` is the undominated node
// picked from its level, `witness` a levelmate it dominates. The old level
// is cut into `tied` (chosen plus its equally-strong levelmates) and
// `separated` (everyone else). In positive and combined mode `tied` ends up
// above `separated`; in negative mode below.
struct RefinementStep {
  int iteration = 0;
  NodeId chosen;
  NodeId witness;
  bool chosen_moved_up = true;
  std::vector<NodeId> tied;
  std::vector<NodeId> separated;
  Ranking ranking;
};

struct RankingResult {
  Ranking ranking;
  // Ranking before the first split.
  Ranking initial;
  std::vector<RefinementStep> trace;
};

// Positive feedback. Start from in-degree order (more supporters = higher),
// then repeatedly split a level: pick a node whose support dominates some
// levelmate's and is dominated by no levelmate's, keep it tied with the
// levelmates of equally strong support, and move it above the rest of the
// level. All dominance queries use the current ranking. Halts when no level
// can be split; the result satisfies transitivity. Throws ModeMismatchError
// unless the graph is PositiveOnly.
RankingResult RankPositive(const ReputationGraph& g);

// Negative feedback mirror: fewer accusers = higher initially, and a node
// whose accusers are more reliable than a levelmate's is moved below the
// rest of its level. Requires NegativeOnly.
RankingResult RankNegative(const ReputationGraph& g);

// Combined feedback: starts with every node tied and splits on the "socially
// stronger" relation. Requires Combined.
RankingResult RankCombined(const ReputationGraph& g);

// Dispatches on g.mode().
RankingResult Rank(const ReputationGraph& g);

}  // namespace repute

#endif  // REPUTE_ENGINE_H_
