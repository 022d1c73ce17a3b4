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

#include <cmath>

#include <gtest/gtest.h>

#include "latdecode/oracle.hpp"
#include "latdecode/shortest_distance.hpp"
#include "test_util.hpp"

namespace latdecode {
namespace {

using testing::make_e1;

TEST(BackwardDistance, E1Base) {
  const auto beta = backward_distance(make_e1());
  EXPECT_EQ(beta[3], 0.0);
  EXPECT_NEAR(beta[1], 0.7, 1e-15);
  EXPECT_NEAR(beta[2], 0.9, 1e-15);
  EXPECT_NEAR(beta[0], testing::kE1Total, 1e-12);
  EXPECT_EQ(beta.direction(), Direction::kBackward);
  EXPECT_EQ(beta.view(), View::kBase);
}

TEST(BackwardDistance, E1Companion) {
  const auto beta_hat = backward_distance(make_e1(), View::kCompanion);
  EXPECT_NEAR(beta_hat[0], 0.9, 1e-15);
}

TEST(BackwardDistance, DeadStateIsZero) {
  auto a = make_e1();
  const StateId dead = a.add_state();
  a.add_arc(0, testing::kB, 0.1, dead);
  const auto beta = backward_distance(a);
  EXPECT_EQ(beta[dead], LogSemiring::zero());
  EXPECT_NEAR(beta[0], testing::kE1Total, 1e-12);
}

TEST(BackwardDistance, CyclicInputThrows) {
  auto a = make_e1();
  a.add_arc(3, 1, 0.1, 0);
  EXPECT_THROW(backward_distance(a), CycleError);
  EXPECT_THROW(forward_distance(a), CycleError);
}

TEST(ForwardDistance, E1) {
  const auto alpha = forward_distance(make_e1());
  EXPECT_EQ(alpha[0], 0.0);
  EXPECT_NEAR(alpha[1], 0.5, 1e-15);
  EXPECT_NEAR(alpha[3], testing::kE1Total, 1e-12);
  const auto alpha_hat = forward_distance(make_e1(), View::kCompanion);
  EXPECT_NEAR(alpha_hat[3], 0.9, 1e-15);
}

TEST(ForwardDistance, InitialIsOne) {
  const auto r = to_plus_times(make_e1());
  EXPECT_EQ(forward_distance(r)[r.initial()], 1.0);
}

TEST(TotalDistance, Cases) {
  EXPECT_NEAR(total_distance(make_e1()), testing::kE1Total, 1e-12);

  Automaton<LogSemiring> no_final(2, 0);
  no_final.add_arc(0, 1, 0.5, 1);
  EXPECT_EQ(total_distance(no_final), LogSemiring::zero());

  Automaton<LogSemiring> single(1, 0);
  single.set_final(0, 0.3);
  EXPECT_EQ(total_distance(single), 0.3);
}

template <typename S>
void check_distance_properties(const Automaton<S> &a) {
  const auto alpha = forward_distance(a);
  const auto beta = backward_distance(a);
  const auto beta_hat = backward_distance(a, View::kCompanion);

  // beta(s) == (+)_f alpha(f) (x) omega(f)
  Weight mass = S::zero();
  for (const auto &[f, w] : a.finals()) mass = S::plus(mass, S::times(alpha[f], w));
  EXPECT_TRUE(approx_eq(beta[a.initial()], mass, 1e-9));

  // beta(s) == (+) over complete paths, enumerated independently.
  Weight paths = S::zero();
  for (const auto &[z, w] : enumerate_strings(a)) paths = S::plus(paths, w);
  EXPECT_TRUE(approx_eq(beta[a.initial()], paths,
                        1e-9 * std::max(1.0, std::fabs(paths))));

  for (std::size_t q = 0; q < a.num_states(); ++q) {
    const auto s = static_cast<StateId>(q);
    EXPECT_TRUE(leq_within<S>(beta[s], beta_hat[s], 1e-12));
  }
}

TEST(DistanceProperties, RandomLog) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    check_distance_properties(testing::random_dag<LogSemiring>(seed));
  }
}

TEST(DistanceProperties, RandomPlusTimes) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    check_distance_properties(testing::random_dag<PlusTimesSemiring>(seed));
  }
}

// Removing an arc never improves beta in the semiring order.
TEST(DistanceProperties, ArcRemovalIsMonotone) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto a = testing::random_dag<LogSemiring>(seed);
    if (a.num_arcs() == 0) continue;
    const auto beta = backward_distance(a);
    Automaton<LogSemiring> reduced(a.num_states(), a.initial());
    bool dropped = false;
    for (std::size_t q = 0; q < a.num_states(); ++q) {
      for (const Arc &arc : a.arcs(static_cast<StateId>(q))) {
        if (!dropped) {
          dropped = true;
          continue;
        }
        reduced.add_arc(arc.source, arc.label, arc.weight, arc.target);
      }
    }
    for (const auto &[f, w] : a.finals()) reduced.set_final(f, w);
    const auto beta_reduced = backward_distance(reduced);
    for (std::size_t q = 0; q < a.num_states(); ++q) {
      const auto s = static_cast<StateId>(q);
      EXPECT_TRUE(leq_within<LogSemiring>(beta[s], beta_reduced[s], 1e-12));
    }
  }
}

}  // namespace
}  // namespace latdecode
