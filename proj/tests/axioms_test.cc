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

#include <random>

#include "gtest/gtest.h"
#include "repute/dominance.h"
#include "repute/engine.h"
#include "repute/errors.h"
#include "test_util.h"

namespace repute {
namespace {

using testing::MakeGraph;
using testing::MakeRanking;
using testing::N;

TEST(AxiomNamesTest, ParseAndPrint) {
  for (Axiom a : {Axiom::kT, Axiom::kM, Axiom::kBT, Axiom::kBM, Axiom::kTc,
                  Axiom::kMc, Axiom::kVWM}) {
    EXPECT_EQ(ParseAxiom(ToString(a)), a);
  }
  EXPECT_EQ(ParseAxiomList("T,M"), (std::vector<Axiom>{Axiom::kT, Axiom::kM}));
  EXPECT_TRUE(ParseAxiomList("").empty());
  EXPECT_THROW(ParseAxiomList("T,X"), Error);
}

TEST(CheckTest, PathRankingSatisfiesTransitivity) {
  auto g = MakeGraph(GraphMode::kPositiveOnly, {"a", "b", "c"}, {"a>b", "b>c"});
  EXPECT_TRUE(Check(g, MakeRanking({{"c", 1}, {"b", 2}, {"a", 3}}), Axiom::kT).passed);
  auto bad = Check(g, MakeRanking({{"a", 1}, {"b", 2}, {"c", 3}}), Axiom::kT);
  EXPECT_FALSE(bad.passed);
  ASSERT_TRUE(bad.witness);
  EXPECT_EQ(bad.witness->first, N("b"));
  EXPECT_EQ(bad.witness->second, N("a"));
}

TEST(CheckTest, ImpossibilityGraphFailsMonotonicityAtAB) {
  auto report = Check(testing::TailedTriangleGraph(),
                      MakeRanking({{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}}),
                      Axiom::kM);
  EXPECT_FALSE(report.passed);
  ASSERT_TRUE(report.witness);
  EXPECT_EQ(report.witness->first, N("a"));
  EXPECT_EQ(report.witness->second, N("b"));
  EXPECT_FALSE(report.witness->reason.empty());
}

TEST(CheckTest, AllEqualRankingIsVacuouslyMonotone) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = testing::RandomGraph(rng, 1 + trial % 6, 0.4, GraphMode::kPositiveOnly);
    auto tied = Ranking::AllEqual(g.NodeList());
    EXPECT_TRUE(Check(g, tied, Axiom::kM).passed);
    EXPECT_TRUE(Check(g, tied, Axiom::kVWM).passed);
  }
}

TEST(CheckTest, Errors) {
  auto g = testing::TailedTriangleGraph();
  auto r = MakeRanking({{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}});
  EXPECT_THROW(Check(g, r, Axiom::kBT), ModeMismatchError);
  EXPECT_THROW(Check(g, r, Axiom::kTc), ModeMismatchError);
  EXPECT_THROW(Check(g, MakeRanking({{"a", 1}, {"b", 2}}), Axiom::kT),
               NodeSetMismatchError);
  EXPECT_THROW(Check(g, MakeRanking({{"a", 1}, {"b", 2}, {"c", 3}, {"e", 4}}),
                     Axiom::kT),
               NodeSetMismatchError);
}

TEST(CheckAllTest, DispatchesOnMode) {
  auto axioms_of = [](const std::vector<AxiomReport>& reports) {
    std::vector<Axiom> out;
    for (const auto& r : reports) out.push_back(r.axiom);
    return out;
  };
  auto pos = testing::TailedTriangleGraph();
  EXPECT_EQ(axioms_of(CheckAll(pos, Ranking::AllEqual(pos.NodeList()))),
            (std::vector<Axiom>{Axiom::kT, Axiom::kM, Axiom::kVWM}));
  auto neg = testing::ChordedSquareGraph(GraphMode::kNegativeOnly);
  EXPECT_EQ(axioms_of(CheckAll(neg, Ranking::AllEqual(neg.NodeList()))),
            (std::vector<Axiom>{Axiom::kBT, Axiom::kBM}));
  auto comb = testing::TailedTriangleGraph(GraphMode::kCombined);
  EXPECT_EQ(axioms_of(CheckAll(comb, Ranking::AllEqual(comb.NodeList()))),
            (std::vector<Axiom>{Axiom::kTc, Axiom::kMc}));
}

// BM is read verbatim: when v_i sits below v_j without a reliability
// reason, some accuser of v_i must be ranked above some accuser of v_j.
TEST(CheckTest, NegativeMonotonicityDirection) {
  // Node indices: a=0, b=1, x=2, y=3, z=4. R(a) = {y, z}, R(b) = {x}.
  auto g = MakeGraph(GraphMode::kNegativeOnly, {"a", "b", "x", "y", "z"},
                     {"y>a", "z>a", "x>b"});
  AxiomChecker checker(g);
  // b below a and x above y: the verbatim clause is met.
  auto r = MakeRanking({{"x", 1}, {"y", 2}, {"z", 2}, {"a", 3}, {"b", 4}});
  EXPECT_FALSE(checker.ViolatesPair(r.levels(), Axiom::kBM, 1, 0));
  // x below both of a's accusers: no witness, so (b, a) violates.
  auto r2 = MakeRanking({{"y", 1}, {"z", 1}, {"x", 2}, {"a", 3}, {"b", 4}});
  EXPECT_TRUE(checker.ViolatesPair(r2.levels(), Axiom::kBM, 1, 0));

  auto tied = MakeRanking({{"x", 1}, {"y", 1}, {"z", 1}, {"a", 2}, {"b", 2}});
  auto report = Check(g, tied, Axiom::kBM);
  EXPECT_TRUE(report.passed);
}

struct ModeAxioms {
  GraphMode mode;
  std::vector<Axiom> axioms;
};

class CheckAgreementTest : public ::testing::TestWithParam<ModeAxioms> {};

// Check agrees with a literal, injection-search evaluation of every axiom;
// failing reports name the lexicographically first violating pair.
TEST_P(CheckAgreementTest, MatchesLiteralEvaluation) {
  const auto& [mode, axioms] = GetParam();
  std::mt19937 rng(53 + static_cast<int>(mode));
  for (int trial = 0; trial < 60; ++trial) {
    auto g = testing::RandomGraph(rng, 1 + trial % 4, 0.4, mode);
    for (const auto& r : EnumeratePreorders(g.NodeList())) {
      for (Axiom a : axioms) {
        auto report = Check(g, r, a);
        ASSERT_EQ(report.passed, testing::LiteralSatisfies(g, r, a));
        ASSERT_EQ(report.passed, !report.witness.has_value());
        if (report.passed) continue;
        const auto& w = *report.witness;
        ASSERT_TRUE(testing::LiteralViolates(g, r, a, w.first, w.second));
        for (const auto& u : g.nodes()) {
          for (const auto& v : g.nodes()) {
            if (std::pair(u, v) >= std::pair(w.first, w.second)) break;
            if (u != v) ASSERT_FALSE(testing::LiteralViolates(g, r, a, u, v));
          }
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    Modes, CheckAgreementTest,
    ::testing::Values(
        ModeAxioms{GraphMode::kPositiveOnly, {Axiom::kT, Axiom::kM, Axiom::kVWM}},
        ModeAxioms{GraphMode::kNegativeOnly, {Axiom::kBT, Axiom::kBM}},
        ModeAxioms{GraphMode::kCombined, {Axiom::kTc, Axiom::kMc}}));

TEST(AxiomPropertyTest, MonotonicityImpliesVeryWeakMonotonicity) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 80; ++trial) {
    auto g = testing::RandomGraph(rng, 2 + trial % 3, 0.4, GraphMode::kPositiveOnly);
    for (const auto& r : EnumeratePreorders(g.NodeList())) {
      if (Check(g, r, Axiom::kM).passed) {
        ASSERT_TRUE(Check(g, r, Axiom::kVWM).passed);
      }
    }
  }
}

TEST(AxiomPropertyTest, TransitiveRankingsHaveNoMutualDominance) {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = testing::RandomGraph(rng, 4, 0.4, GraphMode::kPositiveOnly);
    for (const auto& r : EnumeratePreorders(g.NodeList())) {
      if (!Check(g, r, Axiom::kT).passed) continue;
      for (const auto& u : g.nodes()) {
        for (const auto& v : g.nodes()) {
          EXPECT_FALSE(MoreImportant(r, g.SupportSet(u), g.SupportSet(v)) &&
                       MoreImportant(r, g.SupportSet(v), g.SupportSet(u)));
        }
      }
    }
  }
}

// Any non-empty support beats the empty set, so a T-satisfying ranking puts
// every supported node above every unsupported one.
TEST(AxiomPropertyTest, SupportedNodesOutrankUnsupported) {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = testing::RandomGraph(rng, 2 + trial % 7, 0.2, GraphMode::kPositiveOnly);
    auto r = RankPositive(g).ranking;
    ASSERT_TRUE(Check(g, r, Axiom::kT).passed);
    for (const auto& u : g.nodes()) {
      for (const auto& v : g.nodes()) {
        if (!g.SupportSet(u).empty() && g.SupportSet(v).empty()) {
          EXPECT_LT(r.rank(u), r.rank(v));
        }
      }
    }
  }
}

TEST(AxiomCheckerTest, PairQueryMatchesCheck) {
  auto g = testing::TailedTriangleGraph();
  auto r = MakeRanking({{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}});
  AxiomChecker checker(g);
  EXPECT_TRUE(checker.ViolatesPair(r.levels(), Axiom::kM, 0, 1));
  EXPECT_FALSE(checker.ViolatesPair(r.levels(), Axiom::kT, 0, 1));
  EXPECT_EQ(checker.FirstViolation(r.levels(), Axiom::kM), std::pair(0, 1));
}

}  // namespace
}  // namespace repute
