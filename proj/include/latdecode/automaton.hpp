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

// Single-initial-state, epsilon-free weighted acceptors.

#ifndef LATDECODE_AUTOMATON_HPP_
#define LATDECODE_AUTOMATON_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "latdecode/errors.hpp"
#include "latdecode/semiring.hpp"

namespace latdecode {

using StateId = std::int32_t;
using Label = std::int32_t;

/// Reserved for epsilon; never legal on a stored arc.
inline constexpr Label kEpsilon = 0;
inline constexpr StateId kNoState = -1;

struct Arc {
  StateId source;
  Label label;
  Weight weight;
  StateId target;

  bool operator==(const Arc &) const = default;
};

/// Weighted acceptor over semiring S.
///
/// Arcs are grouped by source and kept ordered by (label, target); parallel
/// arcs with the same (label, target) are kept in insertion order and never
/// merged. Arcs and final weights equal to zero are dropped on insertion and
/// counted in pruned_count().
///
/// The container itself is permissive: epsilon labels, out-of-range targets
/// and non-member weights are stored so that validate() can report them.
template <MonotonicNegativeSemiring S>
class Automaton {
 public:
  using Semiring = S;

  Automaton() = default;
  explicit Automaton(std::size_t num_states, StateId initial = 0)
      : arcs_(num_states), initial_(initial) {}

  StateId add_state() {
    arcs_.emplace_back();
    return static_cast<StateId>(arcs_.size() - 1);
  }

  /// Grows the state set so that `state` is a valid id.
  void reserve_state(StateId state) {
    if (state >= 0 && static_cast<std::size_t>(state) >= arcs_.size()) {
      arcs_.resize(static_cast<std::size_t>(state) + 1);
    }
  }

  void set_initial(StateId state) { initial_ = state; }

  void add_arc(StateId source, Label label, Weight weight, StateId target) {
    if (weight == S::zero()) {
      ++pruned_;
      return;
    }
    reserve_state(source);
    auto &list = arcs_[static_cast<std::size_t>(source)];
    const Arc arc{source, label, weight, target};
    auto pos = std::upper_bound(
        list.begin(), list.end(), arc, [](const Arc &x, const Arc &y) {
          return std::tie(x.label, x.target) < std::tie(y.label, y.target);
        });
    list.insert(pos, arc);
  }

  void set_final(StateId state, Weight weight) {
    if (weight == S::zero()) {
      finals_.erase(state);
      ++pruned_;
      return;
    }
    reserve_state(state);
    finals_[state] = weight;
  }

  std::size_t num_states() const { return arcs_.size(); }
  StateId initial() const { return initial_; }

  std::span<const Arc> arcs(StateId state) const {
    return arcs_[static_cast<std::size_t>(state)];
  }

  std::size_t num_arcs() const {
    std::size_t n = 0;
    for (const auto &list : arcs_) n += list.size();
    return n;
  }

  /// Zero for non-final states.
  Weight final_weight(StateId state) const {
    auto it = finals_.find(state);
    return it == finals_.end() ? S::zero() : it->second;
  }

  bool is_final(StateId state) const { return finals_.count(state) != 0; }

  const std::map<StateId, Weight> &finals() const { return finals_; }

  std::size_t pruned_count() const { return pruned_; }

  bool valid_state(StateId state) const {
    return state >= 0 && static_cast<std::size_t>(state) < arcs_.size();
  }

  /// Same ids, labels, weights and arc order.
  bool operator==(const Automaton &other) const {
    return initial_ == other.initial_ && arcs_ == other.arcs_ &&
           finals_ == other.finals_;
  }

 private:
  std::vector<std::vector<Arc>> arcs_;
  std::map<StateId, Weight> finals_;
  StateId initial_ = 0;
  std::size_t pruned_ = 0;
};

enum class ViolationKind {
  kNoStates,
  kInitialOutOfRange,
  kEpsilonArc,
  kTargetOutOfRange,
  kNonMemberWeight,
  kNonMemberFinal,
  kCycle,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  bool has(ViolationKind kind) const {
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const Violation &v) { return v.kind == kind; });
  }
};

namespace internal {

// Kahn's algorithm with a min-heap so that among ready states the smallest
// id goes first. Returns the partial order; fewer than num_states() entries
// means a cycle among the remaining states. Arcs with out-of-range targets
// are ignored.
template <typename S>
std::vector<StateId> kahn_order(const Automaton<S> &a) {
  const std::size_t n = a.num_states();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t q = 0; q < n; ++q) {
    for (const Arc &arc : a.arcs(static_cast<StateId>(q))) {
      if (a.valid_state(arc.target)) ++indegree[arc.target];
    }
  }
  std::priority_queue<StateId, std::vector<StateId>, std::greater<>> ready;
  for (std::size_t q = 0; q < n; ++q) {
    if (indegree[q] == 0) ready.push(static_cast<StateId>(q));
  }
  std::vector<StateId> order;
  order.reserve(n);
  while (!ready.empty()) {
    const StateId q = ready.top();
    ready.pop();
    order.push_back(q);
    for (const Arc &arc : a.arcs(q)) {
      if (a.valid_state(arc.target) && --indegree[arc.target] == 0) {
        ready.push(arc.target);
      }
    }
  }
  return order;
}

// Finds a back-edge among the states Kahn's algorithm could not order.
template <typename S>
Arc find_back_edge(const Automaton<S> &a, const std::vector<StateId> &order) {
  const std::size_t n = a.num_states();
  std::vector<char> ordered(n, 0);
  for (StateId q : order) ordered[q] = 1;
  // 0 white, 1 grey, 2 black
  std::vector<char> color(n, 0);
  struct Frame {
    StateId state;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (ordered[root] || color[root]) continue;
    std::vector<Frame> stack{{static_cast<StateId>(root), 0}};
    color[root] = 1;
    while (!stack.empty()) {
      Frame &top = stack.back();
      auto arcs = a.arcs(top.state);
      if (top.next == arcs.size()) {
        color[top.state] = 2;
        stack.pop_back();
        continue;
      }
      const Arc &arc = arcs[top.next++];
      if (!a.valid_state(arc.target) || ordered[arc.target]) continue;
      if (color[arc.target] == 1) return arc;
      if (color[arc.target] == 0) {
        color[arc.target] = 1;
        stack.push_back({arc.target, 0});
      }
    }
  }
  return Arc{kNoState, kEpsilon, 0.0, kNoState};
}

}  // namespace internal

/// States ordered so that every arc goes forward; among ready states the
/// smallest id comes first. Throws CycleError naming one back-edge.
template <MonotonicNegativeSemiring S>
std::vector<StateId> topological_order(const Automaton<S> &a) {
  auto order = internal::kahn_order(a);
  if (order.size() != a.num_states()) {
    const Arc back = internal::find_back_edge(a, order);
    throw CycleError(static_cast<std::size_t>(back.source),
                     static_cast<std::size_t>(back.target));
  }
  return order;
}

/// Lists every structural violation; never throws.
template <MonotonicNegativeSemiring S>
ValidationReport validate(const Automaton<S> &a) {
  ValidationReport report;
  auto add = [&report](ViolationKind kind, std::string message) {
    report.violations.push_back({kind, std::move(message)});
  };
  if (a.num_states() == 0) {
    add(ViolationKind::kNoStates, "automaton has no states");
    return report;
  }
  if (!a.valid_state(a.initial())) {
    add(ViolationKind::kInitialOutOfRange,
        "initial state " + std::to_string(a.initial()) + " out of range");
  }
  for (std::size_t q = 0; q < a.num_states(); ++q) {
    for (const Arc &arc : a.arcs(static_cast<StateId>(q))) {
      const std::string where = std::to_string(arc.source) + " -> " +
                                std::to_string(arc.target) + " (label " +
                                std::to_string(arc.label) + ")";
      if (arc.label == kEpsilon) {
        add(ViolationKind::kEpsilonArc, "epsilon arc " + where);
      } else if (arc.label < 0) {
        add(ViolationKind::kEpsilonArc, "negative label on arc " + where);
      }
      if (!a.valid_state(arc.target)) {
        add(ViolationKind::kTargetOutOfRange, "target out of range " + where);
      }
      if (!S::member(arc.weight)) {
        add(ViolationKind::kNonMemberWeight,
            "non-member weight " + format_weight(arc.weight) + " on " + where);
      }
    }
  }
  for (const auto &[q, w] : a.finals()) {
    if (!S::member(w)) {
      add(ViolationKind::kNonMemberFinal,
          "non-member final weight " + format_weight(w) + " at state " +
              std::to_string(q));
    }
  }
  const auto order = internal::kahn_order(a);
  if (order.size() != a.num_states()) {
    const Arc back = internal::find_back_edge(a, order);
    add(ViolationKind::kCycle, "cycle detected: back-edge " +
                                   std::to_string(back.source) + " -> " +
                                   std::to_string(back.target));
  }
  return report;
}

/// Throws InvalidAutomatonError with the first violation unless valid.
template <MonotonicNegativeSemiring S>
void require_valid(const Automaton<S> &a) {
  auto report = validate(a);
  if (!report.ok()) {
    throw InvalidAutomatonError(report.violations.front().message);
  }
}

/// Re-weights a log-semiring automaton into plus-times via exp(-w).
inline Automaton<PlusTimesSemiring> to_plus_times(
    const Automaton<LogSemiring> &a) {
  Automaton<PlusTimesSemiring> out(a.num_states(), a.initial());
  for (std::size_t q = 0; q < a.num_states(); ++q) {
    for (const Arc &arc : a.arcs(static_cast<StateId>(q))) {
      out.add_arc(arc.source, arc.label, std::exp(-arc.weight), arc.target);
    }
  }
  for (const auto &[q, w] : a.finals()) out.set_final(q, std::exp(-w));
  return out;
}

}  // namespace latdecode

#endif  // LATDECODE_AUTOMATON_HPP_
