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
 * @file lattice_gen.hpp
 *
 * Synthetic word lattices and the size benchmark.
 *
 * A generated lattice is layered like a confusion network: the initial
 * state, then `depth` layers of `width` states. Every state outside the
 * last layer has `width` outgoing alternatives into the next layer;
 * alternative j goes to state j of that layer, or with probability
 * `merge_prob` to a uniformly drawn state of it. Labels are uniform over
 * [1, vocab], so repeated labels out of one state make the lattice
 * non-deterministic. Arc weights are -log of masses u^skew normalized per
 * state, u uniform in (0, 1]; larger skew concentrates the mass. The last
 * layer is final with weight one.
 */

#ifndef LATDECODE_LATTICE_GEN_HPP_
#define LATDECODE_LATTICE_GEN_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "latdecode/automaton.hpp"
#include "latdecode/determinize.hpp"
#include "latdecode/errors.hpp"
#include "latdecode/search.hpp"
#include "latdecode/semiring.hpp"

namespace latdecode {

struct LatticeSpec {
  int depth = 1;
  int width = 1;
  int vocab = 1;
  double skew = 1.0;
  double merge_prob = 0.0;
  std::uint64_t seed = 0;

  void check() const {
    if (depth < 1 || width < 1 || vocab < 1) {
      throw std::invalid_argument("lattice spec: depth, width, vocab must be >= 1");
    }
    if (!(merge_prob >= 0.0 && merge_prob <= 1.0)) {
      throw std::invalid_argument("lattice spec: merge_prob must be in [0, 1]");
    }
    if (!std::isfinite(skew)) {
      throw std::invalid_argument("lattice spec: skew must be finite");
    }
  }
};

namespace internal {

// Portable draws: std distributions are implementation-defined.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in (0, 1].
  double unit() {
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace internal

/// Deterministic in `spec`; throws std::invalid_argument on a bad spec.
inline Automaton<LogSemiring> generate(const LatticeSpec &spec) {
  spec.check();
  internal::SplitRng rng(spec.seed);
  const std::size_t width = static_cast<std::size_t>(spec.width);
  const std::size_t num_states = 1 + static_cast<std::size_t>(spec.depth) * width;
  Automaton<LogSemiring> a(num_states, 0);
  auto layer_state = [width](int layer, std::size_t j) {
    return static_cast<StateId>(1 + static_cast<std::size_t>(layer) * width + j);
  };

  std::vector<StateId> sources{0};
  std::vector<double> mass(width);
  for (int layer = 0; layer < spec.depth; ++layer) {
    for (StateId src : sources) {
      double total = 0.0;
      for (auto &m : mass) {
        m = std::pow(rng.unit(), spec.skew);
        total += m;
      }
      double check = 0.0;
      for (std::size_t j = 0; j < width; ++j) {
        const std::size_t slot =
            rng.unit() <= spec.merge_prob
                ? rng.below(width)
                : j;
        const auto label = static_cast<Label>(
            1 + rng.below(static_cast<std::uint64_t>(spec.vocab)));
        const double p = mass[j] / total;
        check += p;
        a.add_arc(src, label, -std::log(p), layer_state(layer, slot));
      }
      if (std::fabs(check - 1.0) > 1e-9) {
        throw std::logic_error("lattice generator: masses do not sum to 1");
      }
    }
    sources.clear();
    for (std::size_t j = 0; j < width; ++j) {
      sources.push_back(layer_state(layer, j));
    }
  }
  for (StateId q : sources) a.set_final(q, LogSemiring::one());
  return a;
}

struct BenchRow {
  std::optional<LatticeSpec> spec;  // empty for injected instances
  std::size_t nfa_states = 0;
  std::size_t dfa_states = 0;
  std::size_t visited_states = 0;
  std::int64_t wall_time_us = 0;
  std::string status = "ok";
};

struct BenchOptions {
  DeterminizeOptions determinize;
};

/// Sizes for one instance: NFA states, full DFA states, and DFA states
/// popped by the lazy search (superfinal included). Budget failures become
/// status "budget"; an empty language becomes "empty".
template <MonotonicNegativeSemiring S>
BenchRow bench_instance(const Automaton<S> &a, const BenchOptions &options = {}) {
  BenchRow row;
  row.nfa_states = a.num_states();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    LazyDeterminizer<S> det(a, options.determinize);
    row.dfa_states = det.full_expand();
    SearchOptions search;
    search.determinize = options.determinize;
    row.visited_states = shortest_string(a, search).stats.popped;
  } catch (const BudgetError &) {
    row.status = "budget";
  } catch (const EmptyLanguageError &) {
    row.status = "empty";
  }
  row.wall_time_us = std::chrono::duration_cast<std::chrono::microseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return row;
}

inline std::vector<BenchRow> bench_run(const std::vector<LatticeSpec> &specs,
                                       const BenchOptions &options = {}) {
  std::vector<BenchRow> rows;
  rows.reserve(specs.size());
  for (const auto &spec : specs) {
    BenchRow row = bench_instance(generate(spec), options);
    row.spec = spec;
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Least-squares slope of log(visited) against log(nfa_states) over the
/// "ok" rows; nullopt with fewer than two distinct x values.
inline std::optional<double> loglog_slope(const std::vector<BenchRow> &rows) {
  std::vector<std::pair<double, double>> pts;
  for (const auto &r : rows) {
    if (r.status == "ok" && r.nfa_states > 0 && r.visited_states > 0) {
      pts.emplace_back(std::log(static_cast<double>(r.nfa_states)),
                       std::log(static_cast<double>(r.visited_states)));
    }
  }
  if (pts.size() < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (auto [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= pts.size();
  my /= pts.size();
  double sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

/// CSV with header, one line per row, then `#slope=<value>` (or `#slope=nan`).
/// With `timing` false the wall-time column is written as 0.
inline std::string bench_csv(const std::vector<BenchRow> &rows,
                             bool timing = true) {
  std::ostringstream out;
  out << "seed,depth,width,vocab,nfa_states,dfa_states,visited_states,"
         "wall_time_us,status\n";
  for (const auto &r : rows) {
    if (r.spec) {
      out << r.spec->seed << ',' << r.spec->depth << ',' << r.spec->width
          << ',' << r.spec->vocab;
    } else {
      out << ",,,";
    }
    out << ',' << r.nfa_states << ',' << r.dfa_states << ','
        << r.visited_states << ',' << (timing ? r.wall_time_us : 0) << ','
        << r.status << '\n';
  }
  const auto slope = loglog_slope(rows);
  char buf[32];
  if (slope) {
    std::snprintf(buf, sizeof buf, "%.6f", *slope);
  } else {
    std::snprintf(buf, sizeof buf, "nan");
  }
  out << "#slope=" << buf << '\n';
  return out.str();
}

}  // namespace latdecode

#endif  // LATDECODE_LATTICE_GEN_HPP_
