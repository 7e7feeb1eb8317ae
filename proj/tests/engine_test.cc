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

#include <random>

#include "gtest/gtest.h"
#include "repute/axioms.h"
#include "repute/errors.h"
#include "test_util.h"

namespace repute {
namespace {

using testing::MakeGraph;
using testing::MakeRanking;
using testing::N;

void ExpectWellFormedTrace(const RankingResult& result, std::size_t n) {
  if (n > 0) {
    EXPECT_LE(result.trace.size(), n - 1);
  } else {
    EXPECT_TRUE(result.trace.empty());
  }
  const Ranking* previous = &result.initial;
  for (const auto& step : result.trace) {
    EXPECT_TRUE(IsRefinement(step.ranking, *previous));
    EXPECT_GT(step.ranking.level_count(), previous->level_count());
    EXPECT_FALSE(step.tied.empty());
    EXPECT_FALSE(step.separated.empty());
    previous = &step.ranking;
  }
  EXPECT_EQ(*previous, result.ranking);
}

TEST(RankPositiveTest, PathPutsSinkFirst) {
  auto g = MakeGraph(GraphMode::kPositiveOnly, {"a", "b", "c"}, {"a>b", "b>c"});
  auto result = RankPositive(g);
  EXPECT_EQ(result.ranking, MakeRanking({{"c", 1}, {"b", 2}, {"a", 3}}));
  ExpectWellFormedTrace(result, 3);
}

TEST(RankPositiveTest, ImpossibilityGraph) {
  // Initial in-degree order a(2) > {b,c}(1) > d(0); R(b)={a} beats R(c)={b}.
  auto result = RankPositive(testing::TailedTriangleGraph());
  EXPECT_EQ(result.initial, MakeRanking({{"a", 1}, {"b", 2}, {"c", 2}, {"d", 3}}));
  EXPECT_EQ(result.ranking,
            MakeRanking({{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}}));
  ASSERT_EQ(result.trace.size(), 1u);
  EXPECT_EQ(result.trace[0].chosen, N("b"));
  EXPECT_EQ(result.trace[0].witness, N("c"));
  EXPECT_TRUE(Check(testing::TailedTriangleGraph(), result.ranking, Axiom::kT).passed);
}

TEST(RankPositiveTest, TrivialGraphs) {
  auto single = RankPositive(MakeGraph(GraphMode::kPositiveOnly, {"a"}, {}));
  EXPECT_EQ(single.ranking, MakeRanking({{"a", 1}}));
  EXPECT_TRUE(single.trace.empty());
  EXPECT_EQ(RankPositive(ReputationGraph()).ranking.size(), 0u);
  auto isolated = RankPositive(MakeGraph(GraphMode::kPositiveOnly, {"a", "b", "c"}, {}));
  EXPECT_EQ(isolated.ranking, Ranking::AllEqual(testing::Names(3)));
}

TEST(RankPositiveTest, WrongMode) {
  EXPECT_THROW(RankPositive(ReputationGraph(GraphMode::kNegativeOnly)),
               ModeMismatchError);
  EXPECT_THROW(RankNegative(ReputationGraph(GraphMode::kPositiveOnly)),
               ModeMismatchError);
  EXPECT_THROW(RankCombined(ReputationGraph(GraphMode::kPositiveOnly)),
               ModeMismatchError);
}

TEST(RankNegativeTest, PathPutsMiddleAgentLast) {
  auto g = MakeGraph(GraphMode::kNegativeOnly, {"a", "b", "c"}, {"a>b", "b>c"});
  auto result = RankNegative(g);
  EXPECT_EQ(result.ranking, MakeRanking({{"a", 1}, {"c", 2}, {"b", 3}}));
  ASSERT_EQ(result.trace.size(), 1u);
  EXPECT_FALSE(result.trace[0].chosen_moved_up);
}

TEST(RankNegativeTest, ComplementExample) {
  // d > c > b > a looks natural here but violates BT at (c, b).
  auto g = Complement(testing::TailedCycleGraph());
  auto result = RankNegative(g);
  EXPECT_EQ(result.ranking,
            MakeRanking({{"b", 1}, {"c", 2}, {"d", 3}, {"a", 4}}));
  EXPECT_TRUE(Check(g, result.ranking, Axiom::kBT).passed);
  ExpectWellFormedTrace(result, 4);
}

TEST(RankNegativeTest, UnaccusedAboveAccused) {
  auto g = MakeGraph(GraphMode::kNegativeOnly, {"a", "b"}, {"a>b"});
  EXPECT_EQ(RankNegative(g).ranking, MakeRanking({{"a", 1}, {"b", 2}}));
}

TEST(RankCombinedTest, PositiveOnlyEdgesMatchPositiveEngine) {
  auto combined = MakeGraph(GraphMode::kCombined, {"a", "b", "c"}, {"a>b", "b>c"});
  auto positive = MakeGraph(GraphMode::kPositiveOnly, {"a", "b", "c"}, {"a>b", "b>c"});
  EXPECT_EQ(RankCombined(combined).ranking, RankPositive(positive).ranking);
  EXPECT_EQ(RankCombined(combined).ranking,
            MakeRanking({{"c", 1}, {"b", 2}, {"a", 3}}));
}

TEST(RankCombinedTest, NegativeOnlyEdgesMatchNegativeEngine) {
  auto combined = MakeGraph(GraphMode::kCombined, {"a", "b", "c"}, {"a-b", "b-c"});
  auto negative = MakeGraph(GraphMode::kNegativeOnly, {"a", "b", "c"}, {"a-b", "b-c"});
  EXPECT_EQ(RankCombined(combined).ranking, RankNegative(negative).ranking);
  EXPECT_EQ(RankCombined(combined).ranking,
            MakeRanking({{"a", 1}, {"c", 2}, {"b", 3}}));
}

TEST(RankCombinedTest, IsolatedNodesTie) {
  auto g = MakeGraph(GraphMode::kCombined, {"a", "b"}, {});
  EXPECT_EQ(RankCombined(g).ranking, MakeRanking({{"a", 1}, {"b", 1}}));
}

struct EngineCase {
  GraphMode mode;
  Axiom transitivity;
};

class EngineSuiteTest : public ::testing::TestWithParam<EngineCase> {};

// Random graphs up to 8 nodes: the output satisfies the mode's transitivity
// postulate, the trace is a chain of refinements, and runs are repeatable.
TEST_P(EngineSuiteTest, SatisfiesTransitivity) {
  const auto [mode, axiom] = GetParam();
  std::mt19937 rng(1234 + static_cast<int>(mode));
  const double probabilities[] = {0.1, 0.3, 0.5};
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 1 + trial % 8;
    auto g = testing::RandomGraph(rng, n, probabilities[trial % 3], mode);
    auto result = Rank(g);
    auto report = Check(g, result.ranking, axiom);
    ASSERT_TRUE(report.passed) << SerializeGraph(g) << report.witness->reason;
    ExpectWellFormedTrace(result, n);
    auto again = Rank(g);
    EXPECT_EQ(again.ranking, result.ranking);
    EXPECT_EQ(again.trace.size(), result.trace.size());
  }
}

INSTANTIATE_TEST_SUITE_P(
    Modes, EngineSuiteTest,
    ::testing::Values(EngineCase{GraphMode::kPositiveOnly, Axiom::kT},
                      EngineCase{GraphMode::kNegativeOnly, Axiom::kBT},
                      EngineCase{GraphMode::kCombined, Axiom::kTc}));

TEST(RankPositiveTest, InDegreeOrderIsKept) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = testing::RandomGraph(rng, 1 + trial % 8, 0.35, GraphMode::kPositiveOnly);
    auto r = RankPositive(g).ranking;
    for (const auto& u : g.nodes()) {
      for (const auto& v : g.nodes()) {
        if (g.SupportSet(u).size() > g.SupportSet(v).size()) {
          EXPECT_LT(r.rank(u), r.rank(v));
        }
      }
    }
  }
}

}  // namespace
}  // namespace repute
