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

// Forward and backward shortest distance over acyclic acceptors, computed
// by one relaxation pass in (reverse) topological order.

#ifndef LATDECODE_SHORTEST_DISTANCE_HPP_
#define LATDECODE_SHORTEST_DISTANCE_HPP_

#include <span>
#include <vector>

#include "latdecode/automaton.hpp"
#include "latdecode/semiring.hpp"

namespace latdecode {

enum class Direction { kForward, kBackward };

/// One weight per state. States with no relevant path hold zero.
class DistanceTable {
 public:
  DistanceTable() = default;
  DistanceTable(std::vector<Weight> values, Direction direction, View view)
      : values_(std::move(values)), direction_(direction), view_(view) {}

  Weight operator[](StateId q) const { return values_[q]; }
  std::size_t size() const { return values_.size(); }
  std::span<const Weight> values() const { return values_; }
  Direction direction() const { return direction_; }
  View view() const { return view_; }

 private:
  std::vector<Weight> values_;
  Direction direction_ = Direction::kBackward;
  View view_ = View::kBase;
};

/// beta(q) = omega(q) (+) sum over arcs (q,z,k,r) of k (x) beta(r).
/// Summation follows reverse topological order, then stored arc order.
template <MonotonicNegativeSemiring S>
DistanceTable backward_distance(const Automaton<S> &a,
                                View view = View::kBase) {
  const auto order = topological_order(a);
  std::vector<Weight> beta(a.num_states(), S::zero());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const StateId q = *it;
    Weight d = a.final_weight(q);
    for (const Arc &arc : a.arcs(q)) {
      d = view_plus<S>(view, d, S::times(arc.weight, beta[arc.target]));
    }
    beta[q] = d;
  }
  return DistanceTable(std::move(beta), Direction::kBackward, view);
}

/// alpha(s) = one; alpha(r) = sum over arcs (q,z,k,r) of alpha(q) (x) k.
template <MonotonicNegativeSemiring S>
DistanceTable forward_distance(const Automaton<S> &a,
                               View view = View::kBase) {
  const auto order = topological_order(a);
  std::vector<Weight> alpha(a.num_states(), S::zero());
  if (a.valid_state(a.initial())) alpha[a.initial()] = S::one();
  for (const StateId q : order) {
    if (alpha[q] == S::zero()) continue;
    for (const Arc &arc : a.arcs(q)) {
      alpha[arc.target] = view_plus<S>(view, alpha[arc.target],
                                       S::times(alpha[q], arc.weight));
    }
  }
  return DistanceTable(std::move(alpha), Direction::kForward, view);
}

/// beta(s) over the base semiring.
template <MonotonicNegativeSemiring S>
Weight total_distance(const Automaton<S> &a) {
  return backward_distance(a, View::kBase)[a.initial()];
}

}  // namespace latdecode

#endif  // LATDECODE_SHORTEST_DISTANCE_HPP_
