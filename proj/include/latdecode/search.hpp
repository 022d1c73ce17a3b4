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

/**
 * @file search.hpp
 *
 * Shortest-string search for acyclic acceptors over a monotonic negative
 * semiring.
 *
 * The input NFA is determinized on demand, and the DFA is searched with A*
 * over the companion semiring: path weights combine with times, and the
 * frontier is ordered by the semiring's total order. The heuristic of a DFA
 * state is its backward distance over the *base* semiring, computed from
 * the NFA's backward distance without materializing the DFA. That
 * heuristic is admissible and consistent for the companion search, so each
 * DFA state is settled at most once, and the first goal popped carries the
 * shortest string.
 *
 * Goals are modelled as a virtual superfinal node: every DFA state with a
 * non-zero final weight has an arc into it carrying that weight. A state
 * being popped does not certify its final weight, since its continuations
 * may be shorter.
 *
 * Priority ties are broken by string length, then by label sequence, then
 * by insertion order.
 */

#ifndef LATDECODE_SEARCH_HPP_
#define LATDECODE_SEARCH_HPP_

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "latdecode/automaton.hpp"
#include "latdecode/determinize.hpp"
#include "latdecode/errors.hpp"
#include "latdecode/semiring.hpp"
#include "latdecode/shortest_distance.hpp"

namespace latdecode {

struct SearchStats {
  std::size_t popped = 0;  // settled DFA states, plus the superfinal pop
  std::size_t pushed = 0;
  std::size_t subsets_built = 0;
  std::size_t queue_peak = 0;
  std::size_t arcs_relaxed = 0;
};

struct SearchResult {
  std::vector<Label> string;
  Weight weight;
  SearchStats stats;
};

struct SearchOptions {
  DeterminizeOptions determinize;
  /// One line per pop when set.
  std::ostream *trace = nullptr;
  /// Throw std::logic_error if popped priorities ever decrease by more than
  /// `tolerance` in the semiring order.
  bool check_monotone = false;
  double tolerance = 1e-9;
};

/// Shortlex: shorter first, then lexicographic.
inline bool shortlex_less(std::span<const Label> a, std::span<const Label> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace internal {

inline constexpr DfaHandle kSuperfinal = -2;

// Backpointer arena for label paths.
class Trails {
 public:
  static constexpr std::int32_t kRoot = -1;

  std::int32_t extend(std::int32_t parent, Label label) {
    nodes_.push_back({parent, label});
    return static_cast<std::int32_t>(nodes_.size() - 1);
  }

  std::vector<Label> labels(std::int32_t trail) const {
    std::vector<Label> out;
    for (; trail != kRoot; trail = nodes_[trail].parent) {
      out.push_back(nodes_[trail].label);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  struct Node {
    std::int32_t parent;
    Label label;
  };
  std::vector<Node> nodes_;
};

struct QueueEntry {
  Weight fscore;
  Weight gscore;
  std::uint32_t length;
  std::int32_t trail;
  std::uint64_t counter;
  DfaHandle node;
};

// Heuristic from a materialized DFA's backward distance, arcs from an
// already fully expanded determinizer.
template <typename S>
class MaterializedGraph {
 public:
  MaterializedGraph(LazyDeterminizer<S> &det, DistanceTable beta_d)
      : det_(det), beta_d_(std::move(beta_d)) {}

  DfaHandle start() { return det_.start(); }
  std::span<const DfaArc> expand(DfaHandle h) { return det_.expand(h); }
  Weight final_weight(DfaHandle h) const { return det_.final_weight(h); }
  Weight heuristic(DfaHandle h) const { return beta_d_[h]; }
  std::size_t size() const { return det_.size(); }

 private:
  LazyDeterminizer<S> &det_;
  DistanceTable beta_d_;
};

template <typename S>
void trace_pop(std::ostream &out, const QueueEntry &e, Weight heuristic,
               const Trails &trails) {
  out << "pop\t";
  if (e.node == kSuperfinal) {
    out << "final";
  } else {
    out << e.node;
  }
  out << "\tg=" << format_weight(e.gscore) << "\th=" << format_weight(heuristic)
      << "\tf=" << format_weight(e.fscore) << "\tpath=";
  const auto labels = trails.labels(e.trail);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out << ' ';
    out << labels[i];
  }
  out << '\n';
}

// A* over the companion semiring. Graph provides start(), expand(h),
// final_weight(h), heuristic(h) and size().
template <MonotonicNegativeSemiring S, typename Graph>
SearchResult astar(Graph &graph, const SearchOptions &options) {
  Trails trails;
  SearchStats stats;

  auto better = [&trails](const QueueEntry &a, const QueueEntry &b) {
    if (less<S>(a.fscore, b.fscore)) return true;
    if (less<S>(b.fscore, a.fscore)) return false;
    if (a.length != b.length) return a.length < b.length;
    if (a.trail != b.trail) {
      const auto la = trails.labels(a.trail);
      const auto lb = trails.labels(b.trail);
      if (la != lb) return shortlex_less(la, lb);
    }
    return a.counter < b.counter;
  };
  auto worse = [&better](const QueueEntry &a, const QueueEntry &b) {
    return better(b, a);
  };
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, decltype(worse)>
      queue(worse);

  std::vector<Weight> best_g;
  std::vector<char> settled;
  Weight best_final_g = S::zero();
  std::uint64_t counter = 0;

  auto grow = [&](DfaHandle h) {
    if (static_cast<std::size_t>(h) >= best_g.size()) {
      best_g.resize(static_cast<std::size_t>(h) + 1, S::zero());
      settled.resize(static_cast<std::size_t>(h) + 1, 0);
    }
  };
  auto push = [&](QueueEntry e) {
    e.counter = counter++;
    queue.push(e);
    ++stats.pushed;
    stats.queue_peak = std::max(stats.queue_peak, queue.size());
  };

  const DfaHandle root = graph.start();
  grow(root);
  best_g[root] = S::one();
  push({S::times(S::one(), graph.heuristic(root)), S::one(), 0,
        Trails::kRoot, 0, root});

  bool have_last = false;
  Weight last_f = S::one();
  while (!queue.empty()) {
    const QueueEntry top = queue.top();
    queue.pop();
    if (top.node != kSuperfinal) {
      if (settled[top.node]) continue;  // stale
      settled[top.node] = 1;
    }
    ++stats.popped;
    if (options.check_monotone) {
      if (have_last && !leq_within<S>(last_f, top.fscore, options.tolerance)) {
        throw std::logic_error("A* priorities decreased: " +
                               format_weight(last_f) + " then " +
                               format_weight(top.fscore));
      }
      have_last = true;
      last_f = top.fscore;
    }
    if (options.trace != nullptr) {
      trace_pop<S>(*options.trace, top,
                   top.node == kSuperfinal ? S::one()
                                           : graph.heuristic(top.node),
                   trails);
    }
    if (top.node == kSuperfinal) {
      stats.subsets_built = graph.size();
      return SearchResult{trails.labels(top.trail), top.gscore, stats};
    }

    const Weight final_weight = graph.final_weight(top.node);
    if (final_weight != S::zero()) {
      ++stats.arcs_relaxed;
      const Weight g = S::times(top.gscore, final_weight);
      if (best_final_g == S::zero() || S::leq(g, best_final_g)) {
        best_final_g = g;
        push({g, g, top.length, top.trail, 0, kSuperfinal});
      }
    }
    for (const DfaArc &arc : graph.expand(top.node)) {
      ++stats.arcs_relaxed;
      grow(arc.target);
      if (settled[arc.target]) continue;
      const Weight g = S::times(top.gscore, arc.weight);
      if (best_g[arc.target] != S::zero() && !S::leq(g, best_g[arc.target])) {
        continue;
      }
      best_g[arc.target] = g;
      push({S::times(g, graph.heuristic(arc.target)), g, top.length + 1,
            trails.extend(top.trail, arc.label), 0, arc.target});
    }
  }
  throw EmptyLanguageError();
}

}  // namespace internal

/// Lazy determinization + A*. Throws EmptyLanguageError when no complete
/// path exists, BudgetError when the determinization budget runs out and
/// InvalidAutomatonError on invalid input.
template <MonotonicNegativeSemiring S>
SearchResult shortest_string(const Automaton<S> &a,
                             const SearchOptions &options = {}) {
  require_valid(a);
  DistanceTable beta_n = backward_distance(a, View::kBase);
  if (beta_n[a.initial()] == S::zero()) throw EmptyLanguageError();
  LazyDeterminizer<S> det(a, std::move(beta_n), options.determinize);
  return internal::astar<S>(det, options);
}

/// Same search on a caller-owned determinizer, which keeps the expanded
/// sub-DFA for inspection afterwards. options.determinize is ignored.
template <MonotonicNegativeSemiring S>
SearchResult shortest_string(LazyDeterminizer<S> &det,
                             const SearchOptions &options = {}) {
  if (det.beta_n()[det.nfa().initial()] == S::zero()) {
    throw EmptyLanguageError();
  }
  return internal::astar<S>(det, options);
}

/// Baseline: determinizes completely, takes the heuristic from the
/// materialized DFA's backward distance, then runs the same A*.
template <MonotonicNegativeSemiring S>
SearchResult shortest_string_via_full_determinization(
    const Automaton<S> &a, const SearchOptions &options = {}) {
  require_valid(a);
  LazyDeterminizer<S> det(a, options.determinize);
  if (det.beta_n()[a.initial()] == S::zero()) throw EmptyLanguageError();
  det.full_expand();
  internal::MaterializedGraph<S> graph(
      det, backward_distance(det.expanded_dfa(), View::kBase));
  return internal::astar<S>(graph, options);
}

struct AuditReport {
  std::size_t dfa_states = 0;
  std::size_t dfa_arcs = 0;
  std::size_t admissibility_violations = 0;
  std::size_t consistency_violations = 0;  // DFA arcs
  std::size_t final_violations = 0;        // virtual superfinal arcs
  /// Handles where the on-demand heuristic differs from the backward
  /// distance of the materialized DFA.
  std::size_t heuristic_mismatches = 0;
  std::vector<std::string> details;  // first few violations

  bool ok() const {
    return admissibility_violations == 0 && consistency_violations == 0 &&
           final_violations == 0 && heuristic_mismatches == 0;
  }
};

/// Fully determinizes `a` and checks the heuristic against the companion
/// backward distance (admissibility) and along every DFA arc and final
/// weight (consistency), forgiving `tolerance`.
template <MonotonicNegativeSemiring S>
AuditReport heuristic_audit(const Automaton<S> &a,
                            const DeterminizeOptions &determinize = {},
                            double tolerance = 1e-9) {
  require_valid(a);
  LazyDeterminizer<S> det(a, determinize);
  AuditReport report;
  report.dfa_states = det.full_expand();
  const auto dfa = det.expanded_dfa();
  const auto beta_hat = backward_distance(dfa, View::kCompanion);
  const auto beta_direct = backward_distance(dfa, View::kBase);
  auto note = [&report](std::string msg) {
    if (report.details.size() < 16) report.details.push_back(std::move(msg));
  };
  for (std::size_t i = 0; i < report.dfa_states; ++i) {
    const auto h = static_cast<DfaHandle>(i);
    const Weight estimate = det.heuristic(h);
    if (!leq_within<S>(estimate, beta_hat[h], tolerance)) {
      ++report.admissibility_violations;
      note("admissibility at " + std::to_string(h) + ": " +
           format_weight(estimate) + " vs " + format_weight(beta_hat[h]));
    }
    if (!approx_eq(estimate, beta_direct[h], tolerance)) {
      ++report.heuristic_mismatches;
      note("heuristic at " + std::to_string(h) + ": " +
           format_weight(estimate) + " vs DFA distance " +
           format_weight(beta_direct[h]));
    }
    const Weight fw = det.final_weight(h);
    if (fw != S::zero() && !leq_within<S>(estimate, fw, tolerance)) {
      ++report.final_violations;
      note("final consistency at " + std::to_string(h));
    }
    for (const DfaArc &arc : det.expand(h)) {
      ++report.dfa_arcs;
      const Weight bound = S::times(arc.weight, det.heuristic(arc.target));
      if (!leq_within<S>(estimate, bound, tolerance)) {
        ++report.consistency_violations;
        note("consistency on " + std::to_string(h) + " -> " +
             std::to_string(arc.target) + ": " + format_weight(estimate) +
             " vs " + format_weight(bound));
      }
    }
  }
  return report;
}

}  // namespace latdecode

#endif  // LATDECODE_SEARCH_HPP_
