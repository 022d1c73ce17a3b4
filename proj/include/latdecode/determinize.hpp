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
 * @file determinize.hpp
 *
 * On-demand weighted subset construction.
 *
 * A DFA state is a canonical subset {(q, v)} of NFA states with residual
 * weights v. Expanding a subset on label z collects the contributions
 * v (x) k of every arc (q, z, k, r), sums them per target r, and factors
 * out the common divisor d_z = (+)-sum of all contributions:
 *
 *     arc weight    = d_z
 *     target subset = {(r, c_r / d_z)}
 *
 * so residuals of every created subset (+)-sum to one. Alongside each
 * subset the determinizer memoizes its final weight
 * (+) v (x) omega(q) and its heuristic (+) v (x) beta_n(q), where beta_n
 * is the backward distance of the input automaton. The heuristic equals
 * the backward distance of the full DFA at that subset.
 *
 * Subsets are matched by identical state lists and residuals equal within
 * DeterminizeOptions::delta.
 */

#ifndef LATDECODE_DETERMINIZE_HPP_
#define LATDECODE_DETERMINIZE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "latdecode/automaton.hpp"
#include "latdecode/errors.hpp"
#include "latdecode/semiring.hpp"
#include "latdecode/shortest_distance.hpp"
#include "latdecode/text_format.hpp"

namespace latdecode {

using DfaHandle = std::int32_t;

struct SubsetElement {
  StateId state;
  Weight residual;

  bool operator==(const SubsetElement &) const = default;
};

/// Sorted by state, no duplicate states, no zero residuals.
using Subset = std::vector<SubsetElement>;

struct DfaArc {
  Label label;
  Weight weight;
  DfaHandle target;
};

struct DeterminizeOptions {
  double delta = kDefaultDelta;
  std::size_t max_states = 1'000'000;
};

/// (+) over members of residual (x) omega(q).
template <MonotonicNegativeSemiring S>
Weight subset_final_weight(const Automaton<S> &nfa, const Subset &subset) {
  Weight w = S::zero();
  for (const auto &[q, v] : subset) {
    w = S::plus(w, S::times(v, nfa.final_weight(q)));
  }
  return w;
}

/// (+) over members of residual (x) beta_n(q).
template <MonotonicNegativeSemiring S>
Weight subset_heuristic(const DistanceTable &beta_n, const Subset &subset) {
  Weight w = S::zero();
  for (const auto &[q, v] : subset) w = S::plus(w, S::times(v, beta_n[q]));
  return w;
}

template <MonotonicNegativeSemiring S>
class LazyDeterminizer {
 public:
  /// Computes beta_n itself. Throws InvalidAutomatonError unless `nfa` is
  /// valid; `nfa` must outlive the determinizer.
  explicit LazyDeterminizer(const Automaton<S> &nfa,
                            DeterminizeOptions options = {})
      : nfa_(checked(nfa)),
        beta_n_(backward_distance(nfa, View::kBase)),
        options_(options) {}

  LazyDeterminizer(const Automaton<S> &nfa, DistanceTable beta_n,
                   DeterminizeOptions options = {})
      : nfa_(checked(nfa)), beta_n_(std::move(beta_n)), options_(options) {}

  LazyDeterminizer(const Automaton<S> &&, DeterminizeOptions = {}) = delete;

  const Automaton<S> &nfa() const { return nfa_; }
  const DistanceTable &beta_n() const { return beta_n_; }
  const DeterminizeOptions &options() const { return options_; }

  /// Handle of {(s, one)}; created on first call.
  DfaHandle start() {
    if (start_ == kNoHandle) {
      start_ = find_or_create(Subset{{nfa_.initial(), S::one()}});
    }
    return start_;
  }

  /// Outgoing DFA arcs, one per label, in label order. Computed at most
  /// once per handle.
  std::span<const DfaArc> expand(DfaHandle h) {
    if (!entries_[h].expanded) compute_arcs(h);
    return entries_[h].arcs;
  }

  bool expanded(DfaHandle h) const { return entries_[h].expanded; }

  /// (+) over members of residual (x) omega(q); zero means non-final.
  Weight final_weight(DfaHandle h) const { return entries_[h].final_weight; }

  /// beta_d(h) = (+) over members of residual (x) beta_n(q).
  Weight heuristic(DfaHandle h) const { return entries_[h].heuristic; }

  const Subset &subset(DfaHandle h) const { return entries_[h].subset; }

  /// Number of handles created so far.
  std::size_t size() const { return entries_.size(); }

  /// Expands every reachable subset breadth-first; returns the DFA size.
  std::size_t full_expand() {
    std::deque<DfaHandle> queue{start()};
    std::vector<char> seen(size(), 0);
    seen[queue.front()] = 1;
    while (!queue.empty()) {
      const DfaHandle h = queue.front();
      queue.pop_front();
      for (const DfaArc &arc : expand(h)) {
        if (static_cast<std::size_t>(arc.target) >= seen.size()) {
          seen.resize(size(), 0);
        }
        if (!seen[arc.target]) {
          seen[arc.target] = 1;
          queue.push_back(arc.target);
        }
      }
    }
    return size();
  }

  /// The DFA built so far, handles as state ids; unexpanded handles have
  /// no arcs.
  Automaton<S> expanded_dfa() const {
    Automaton<S> dfa(entries_.size(), start_ == kNoHandle ? 0 : start_);
    for (std::size_t h = 0; h < entries_.size(); ++h) {
      const auto &e = entries_[h];
      for (const DfaArc &arc : e.arcs) {
        dfa.add_arc(static_cast<StateId>(h), arc.label, arc.weight,
                    arc.target);
      }
      if (e.final_weight != S::zero()) {
        dfa.set_final(static_cast<StateId>(h), e.final_weight);
      }
    }
    return dfa;
  }

  /// expanded_dfa() in the acceptor text format.
  std::string dump_text(const SymbolTable *symbols = nullptr) const {
    return write_text(expanded_dfa(), symbols);
  }

 private:
  static constexpr DfaHandle kNoHandle = -1;

  struct Entry {
    Subset subset;
    Weight final_weight;
    Weight heuristic;
    bool expanded = false;
    std::vector<DfaArc> arcs;
  };

  struct StateListHash {
    std::size_t operator()(const std::vector<StateId> &v) const noexcept {
      std::size_t h = v.size();
      for (StateId q : v) {
        h ^= std::hash<StateId>{}(q) + 0x9e3779b97f4a7c15ULL + (h << 6) +
             (h >> 2);
      }
      return h;
    }
  };

  struct Contribution {
    Label label;
    StateId target;
    Weight weight;
  };

  static const Automaton<S> &checked(const Automaton<S> &a) {
    require_valid(a);
    return a;
  }

  DfaHandle find_or_create(Subset subset) {
    std::vector<StateId> key;
    key.reserve(subset.size());
    for (const auto &e : subset) key.push_back(e.state);
    // Candidates have the same state list and a first residual within
    // delta; the earliest created match wins, so ids do not depend on the
    // bucket layout.
    auto &bucket = index_[key];
    const Weight first = subset.front().residual;
    DfaHandle match = kNoHandle;
    for (auto it = bucket.lower_bound(first - options_.delta);
         it != bucket.end() && it->first <= first + options_.delta; ++it) {
      const DfaHandle h = it->second;
      if (match != kNoHandle && h > match) continue;
      const Subset &other = entries_[h].subset;
      bool same = true;
      for (std::size_t i = 0; i < subset.size() && same; ++i) {
        same = approx_eq(subset[i].residual, other[i].residual,
                         options_.delta);
      }
      if (same) match = h;
    }
    if (match != kNoHandle) return match;
    if (entries_.size() >= options_.max_states) {
      throw BudgetError("determinization exceeded the budget of " +
                        std::to_string(options_.max_states) + " states");
    }
    const Weight final_weight = subset_final_weight(nfa_, subset);
    const Weight heuristic = subset_heuristic<S>(beta_n_, subset);
    const auto h = static_cast<DfaHandle>(entries_.size());
    entries_.push_back(Entry{std::move(subset), final_weight, heuristic, false, {}});
    bucket.emplace(first, h);
    return h;
  }

  void compute_arcs(DfaHandle h) {
    std::vector<Contribution> contributions;
    for (const auto &[q, v] : entries_[h].subset) {
      for (const Arc &arc : nfa_.arcs(q)) {
        contributions.push_back({arc.label, arc.target, S::times(v, arc.weight)});
      }
    }
    std::stable_sort(contributions.begin(), contributions.end(),
                     [](const Contribution &x, const Contribution &y) {
                       return std::tie(x.label, x.target) <
                              std::tie(y.label, y.target);
                     });
    std::vector<DfaArc> arcs;
    std::vector<SubsetElement> sums;
    for (std::size_t i = 0; i < contributions.size();) {
      const Label label = contributions[i].label;
      sums.clear();
      for (; i < contributions.size() && contributions[i].label == label; ++i) {
        const auto &c = contributions[i];
        if (!sums.empty() && sums.back().state == c.target) {
          sums.back().residual = S::plus(sums.back().residual, c.weight);
        } else {
          sums.push_back({c.target, c.weight});
        }
      }
      Weight divisor = S::zero();
      for (const auto &s : sums) divisor = S::plus(divisor, s.residual);
      // Only reachable through plus-times underflow; the arc is absent.
      if (divisor == S::zero()) continue;
      Subset next;
      next.reserve(sums.size());
      for (const auto &s : sums) {
        const Weight residual = S::divide(s.residual, divisor);
        if (residual != S::zero()) next.push_back({s.state, residual});
      }
      if (next.empty()) continue;
      // find_or_create may reallocate entries_, so no references are held.
      const DfaHandle target = find_or_create(std::move(next));
      arcs.push_back({label, divisor, target});
    }
    entries_[h].arcs = std::move(arcs);
    entries_[h].expanded = true;
  }

  const Automaton<S> &nfa_;
  DistanceTable beta_n_;
  DeterminizeOptions options_;
  std::vector<Entry> entries_;
  std::unordered_map<std::vector<StateId>, std::multimap<Weight, DfaHandle>,
                     StateListHash>
      index_;
  DfaHandle start_ = kNoHandle;
};

}  // namespace latdecode

#endif  // LATDECODE_DETERMINIZE_HPP_
