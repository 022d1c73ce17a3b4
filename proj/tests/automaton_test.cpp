// Copyright 2026 The latdecode Authors.
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

#include <limits>
#include <string>

#include <gtest/gtest.h>

#include "latdecode/automaton.hpp"
#include "latdecode/text_format.hpp"
#include "test_util.hpp"

namespace latdecode {
namespace {

using testing::kA;
using testing::kB;
using testing::kC;
using testing::make_e1;

bool order_respects_arcs(const Automaton<LogSemiring> &a,
                         const std::vector<StateId> &order) {
  std::vector<std::size_t> pos(a.num_states());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (std::size_t q = 0; q < a.num_states(); ++q) {
    for (const Arc &arc : a.arcs(static_cast<StateId>(q))) {
      if (pos[arc.source] >= pos[arc.target]) return false;
    }
  }
  return true;
}

TEST(Automaton, ArcsSortedByLabelThenTarget) {
  const auto a = make_e1();
  const auto arcs = a.arcs(0);
  ASSERT_EQ(arcs.size(), 3u);
  EXPECT_EQ(arcs[0], (Arc{0, kA, 0.5, 1}));
  EXPECT_EQ(arcs[1], (Arc{0, kA, 0.5, 2}));
  EXPECT_EQ(arcs[2], (Arc{0, kC, 0.9, 3}));
}

TEST(Automaton, ParallelArcsKept) {
  Automaton<LogSemiring> a(2, 0);
  a.add_arc(0, 1, 0.3, 1);
  a.add_arc(0, 1, 0.4, 1);
  ASSERT_EQ(a.arcs(0).size(), 2u);
  EXPECT_EQ(a.arcs(0)[0].weight, 0.3);
  EXPECT_EQ(a.arcs(0)[1].weight, 0.4);
}

TEST(Automaton, ZeroWeightsPruned) {
  Automaton<LogSemiring> a(2, 0);
  a.add_arc(0, 1, kInfinity, 1);
  a.set_final(1, kInfinity);
  a.set_final(0, 0.0);
  EXPECT_EQ(a.num_arcs(), 0u);
  EXPECT_FALSE(a.is_final(1));
  EXPECT_TRUE(a.is_final(0));
  EXPECT_EQ(a.pruned_count(), 2u);

  Automaton<PlusTimesSemiring> r(2, 0);
  r.add_arc(0, 1, 0.0, 1);
  EXPECT_EQ(r.num_arcs(), 0u);
  EXPECT_EQ(r.final_weight(1), 0.0);
}

TEST(Validate, E1IsValid) { EXPECT_TRUE(validate(make_e1()).ok()); }

TEST(Validate, Cycle) {
  auto a = make_e1();
  a.add_arc(3, kA, 0.1, 0);
  const auto report = validate(a);
  EXPECT_FALSE(report.ok());
  ASSERT_TRUE(report.has(ViolationKind::kCycle));
  EXPECT_NE(report.violations.back().message.find("cycle detected"),
            std::string::npos);
}

TEST(Validate, EpsilonArc) {
  auto a = make_e1();
  a.add_arc(1, kEpsilon, 0.2, 2);
  const auto report = validate(a);
  ASSERT_TRUE(report.has(ViolationKind::kEpsilonArc));
  EXPECT_NE(report.violations.front().message.find("epsilon arc"),
            std::string::npos);
}

TEST(Validate, ReportsEveryViolation) {
  Automaton<PlusTimesSemiring> a(2, 0);
  a.add_arc(0, kEpsilon, 0.5, 1);
  a.add_arc(0, 2, -0.5, 1);
  a.add_arc(1, 3, 0.5, 7);
  a.add_arc(1, 3, 0.5, 0);
  a.set_final(1, std::numeric_limits<double>::quiet_NaN());
  const auto report = validate(a);
  EXPECT_TRUE(report.has(ViolationKind::kEpsilonArc));
  EXPECT_TRUE(report.has(ViolationKind::kNonMemberWeight));
  EXPECT_TRUE(report.has(ViolationKind::kTargetOutOfRange));
  EXPECT_TRUE(report.has(ViolationKind::kNonMemberFinal));
  EXPECT_TRUE(report.has(ViolationKind::kCycle));
  EXPECT_EQ(report.violations.size(), 5u);
}

TEST(Validate, InitialOutOfRange) {
  Automaton<LogSemiring> a(1, 4);
  EXPECT_TRUE(validate(a).has(ViolationKind::kInitialOutOfRange));
  EXPECT_TRUE(validate(Automaton<LogSemiring>()).has(ViolationKind::kNoStates));
}

TEST(TopologicalOrder, E1) {
  const auto a = make_e1();
  const auto order = topological_order(a);
  EXPECT_EQ(order, (std::vector<StateId>{0, 1, 2, 3}));
  EXPECT_TRUE(order_respects_arcs(a, order));
}

TEST(TopologicalOrder, SmallCases) {
  Automaton<LogSemiring> single(1, 0);
  EXPECT_EQ(topological_order(single), std::vector<StateId>{0});

  Automaton<LogSemiring> back(2, 1);
  back.add_arc(1, 1, 0.0, 0);
  EXPECT_EQ(topological_order(back), (std::vector<StateId>{1, 0}));
}

TEST(TopologicalOrder, CycleNamesBackEdge) {
  Automaton<LogSemiring> a(3, 0);
  a.add_arc(0, 1, 0.0, 1);
  a.add_arc(1, 1, 0.0, 2);
  a.add_arc(2, 1, 0.0, 1);
  try {
    topological_order(a);
    FAIL() << "expected CycleError";
  } catch (const CycleError &e) {
    EXPECT_EQ(e.source(), 2u);
    EXPECT_EQ(e.target(), 1u);
  }
}

TEST(TopologicalOrder, AgreesWithValidateOnRandomGraphs) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    Automaton<LogSemiring> a(static_cast<std::size_t>(n), 0);
    const int m = static_cast<int>(rng() % 10);
    for (int k = 0; k < m; ++k) {
      a.add_arc(static_cast<StateId>(rng() % n), 1, 0.5,
                static_cast<StateId>(rng() % n));
    }
    bool threw = false;
    std::vector<StateId> order;
    try {
      order = topological_order(a);
    } catch (const CycleError &) {
      threw = true;
    }
    EXPECT_EQ(validate(a).ok(), !threw);
    if (!threw) {
      EXPECT_TRUE(order_respects_arcs(a, order));
    }
  }
}

TEST(Convert, ToPlusTimes) {
  const auto r = to_plus_times(make_e1());
  EXPECT_NEAR(r.arcs(0)[0].weight, std::exp(-0.5), 1e-15);
  EXPECT_EQ(r.final_weight(3), 1.0);
}

}  // namespace
}  // namespace latdecode
