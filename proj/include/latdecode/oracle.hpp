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

// Brute-force ground truth by complete-path enumeration. Independent of the
// determinization and search code; only small automata are practical.

#ifndef LATDECODE_ORACLE_HPP_
#define LATDECODE_ORACLE_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latdecode/automaton.hpp"
#include "latdecode/errors.hpp"
#include "latdecode/semiring.hpp"

namespace latdecode {

/// Label sequence -> (+)-sum of complete-path weights with that string.
using StringWeightMap = std::map<std::vector<Label>, Weight>;

struct StringWeight {
  std::vector<Label> string;
  Weight weight;
};

namespace internal {

// Depth-first over all paths from the initial state; calls
// on_complete(labels, weight) for each complete path (path weight times
// final weight), in arc order. `budget` bounds the number of paths visited,
// complete or not.
template <typename S, typename F>
void for_each_complete_path(const Automaton<S> &a, std::size_t budget,
                            F &&on_complete) {
  require_valid(a);
  struct Frame {
    StateId state;
    Weight weight;
    std::size_t next_arc;
  };
  std::vector<Frame> stack{{a.initial(), S::one(), 0}};
  std::vector<Label> labels;
  std::size_t visited = 1;
  if (a.is_final(a.initial())) {
    on_complete(labels, S::times(S::one(), a.final_weight(a.initial())));
  }
  while (!stack.empty()) {
    Frame &top = stack.back();
    const auto arcs = a.arcs(top.state);
    if (top.next_arc == arcs.size()) {
      stack.pop_back();
      if (!labels.empty()) labels.pop_back();
      continue;
    }
    const Arc &arc = arcs[top.next_arc++];
    if (++visited > budget) {
      throw BudgetError("path enumeration exceeded the budget of " +
                        std::to_string(budget) + " paths");
    }
    const Weight w = S::times(top.weight, arc.weight);
    labels.push_back(arc.label);
    if (a.is_final(arc.target)) {
      on_complete(labels, S::times(w, a.final_weight(arc.target)));
    }
    stack.push_back({arc.target, w, 0});
  }
}

inline bool shortlex_less_oracle(const std::vector<Label> &a,
                                 const std::vector<Label> &b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

template <typename S>
bool prefer(const StringWeight &cand, const StringWeight &best) {
  if (less<S>(cand.weight, best.weight)) return true;
  if (less<S>(best.weight, cand.weight)) return false;
  return shortlex_less_oracle(cand.string, best.string);
}

}  // namespace internal

inline constexpr std::size_t kDefaultPathBudget = 1'000'000;

/// sigma(z) for every accepted string z, including the empty string when
/// the initial state is final.
template <MonotonicNegativeSemiring S>
StringWeightMap enumerate_strings(const Automaton<S> &a,
                                  std::size_t budget = kDefaultPathBudget) {
  StringWeightMap sigma;
  internal::for_each_complete_path(
      a, budget, [&sigma](const std::vector<Label> &z, Weight w) {
        auto [it, inserted] = sigma.try_emplace(z, w);
        if (!inserted) it->second = S::plus(it->second, w);
      });
  return sigma;
}

/// argmin of sigma under the semiring order; exact ties go to the shorter,
/// then lexicographically smaller, string.
template <MonotonicNegativeSemiring S>
StringWeight oracle_shortest_string(const Automaton<S> &a,
                                    std::size_t budget = kDefaultPathBudget) {
  const auto sigma = enumerate_strings(a, budget);
  if (sigma.empty()) throw EmptyLanguageError();
  std::optional<StringWeight> best;
  for (const auto &[z, w] : sigma) {
    StringWeight cand{z, w};
    if (!best || internal::prefer<S>(cand, *best)) best = std::move(cand);
  }
  return *best;
}

/// Best single complete path under the order (the companion view of the
/// automaton); ties as in oracle_shortest_string.
template <MonotonicNegativeSemiring S>
StringWeight oracle_shortest_path(const Automaton<S> &a,
                                  std::size_t budget = kDefaultPathBudget) {
  std::optional<StringWeight> best;
  internal::for_each_complete_path(
      a, budget, [&best](const std::vector<Label> &z, Weight w) {
        StringWeight cand{z, w};
        if (!best || internal::prefer<S>(cand, *best)) best = std::move(cand);
      });
  if (!best) throw EmptyLanguageError();
  return *best;
}

}  // namespace latdecode

#endif  // LATDECODE_ORACLE_HPP_
