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

#include "repute/dominance.h"

#include <algorithm>

#include "repute/errors.h"

namespace repute {

namespace {

std::vector<int> RanksOf(const Ranking& r, const NodeSet& set) {
  std::vector<int> ranks;
  ranks.reserve(set.size());
  for (const NodeId& v : set) ranks.push_back(r.rank(v));
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}


}  // namespace

std::string_view ToString(Dominance d) {
  switch (d) {
    case Dominance::kStrictlyDominates:
      return "strictly-dominates";
    case Dominance::kEquallyStrong:
      return "equally-strong";
    case Dominance::kIncomparable:
      return "incomparable";
    case Dominance::kStrictlyDominated:
      return "strictly-dominated";
  }
  return "?";
}

bool AtLeastAsStrongSorted(std::span<const int> a, std::span<const int> b) {
  if (a.size() < b.size()) return false;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool EquallyStrongSorted(std::span<const int> a, std::span<const int> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

bool MoreImportantSorted(std::span<const int> a, std::span<const int> b) {
  return AtLeastAsStrongSorted(a, b) && !EquallyStrongSorted(a, b);
}

std::vector<int> SortedRanks(std::span<const int> levels,
                             std::span<const int> indices) {
  std::vector<int> ranks;
  ranks.reserve(indices.size());
  for (int i : indices) ranks.push_back(levels[i]);
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

bool AtLeastAsStrong(const Ranking& r, const NodeSet& a, const NodeSet& b) {
  return AtLeastAsStrongSorted(RanksOf(r, a), RanksOf(r, b));
}

bool MoreImportant(const Ranking& r, const NodeSet& a, const NodeSet& b) {
  return MoreImportantSorted(RanksOf(r, a), RanksOf(r, b));
}

bool EquallyStrong(const Ranking& r, const NodeSet& a, const NodeSet& b) {
  return EquallyStrongSorted(RanksOf(r, a), RanksOf(r, b));
}

Dominance CompareSupport(const Ranking& r, const NodeSet& a, const NodeSet& b) {
  auto ra = RanksOf(r, a);
  auto rb = RanksOf(r, b);
  if (EquallyStrongSorted(ra, rb)) return Dominance::kEquallyStrong;
  if (AtLeastAsStrongSorted(ra, rb)) return Dominance::kStrictlyDominates;
  if (AtLeastAsStrongSorted(rb, ra)) return Dominance::kStrictlyDominated;
  return Dominance::kIncomparable;
}

bool SociallyStrongerSorted(std::span<const int> good_u,
                            std::span<const int> bad_u,
                            std::span<const int> good_v,
                            std::span<const int> bad_v) {
  // Accusers of v more reliable than those of u is a strict win for u.
  const bool bad_strict = MoreImportantSorted(bad_v, bad_u);
  const bool good_strict = MoreImportantSorted(good_u, good_v);
  if (!bad_strict && !good_strict) return false;
  const bool bad_ok = bad_strict || EquallyStrongSorted(bad_u, bad_v);
  const bool good_ok = good_strict || EquallyStrongSorted(good_u, good_v);
  return bad_ok && good_ok;
}

bool SociallyStronger(const Ranking& r, const ReputationGraph& g,
                      const NodeId& u, const NodeId& v) {
  if (u == v) throw PreconditionError("socially stronger needs two nodes");
  return SociallyStrongerSorted(RanksOf(r, g.SupportSet(u, Feedback::kPositive)),
                                RanksOf(r, g.SupportSet(u, Feedback::kNegative)),
                                RanksOf(r, g.SupportSet(v, Feedback::kPositive)),
                                RanksOf(r, g.SupportSet(v, Feedback::kNegative)));
}

}  // namespace repute
