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
 * @file semiring.hpp
 *
 * Monotonic negative semirings over 64-bit floating-point weights.
 *
 * |            | carrier         | plus      | times | zero | one | order |
 * | Log        | R u {-inf,+inf} | -log-sum- | +     | +inf | 0   | <=    |
 * |            |                 | exp       |       |      |     |       |
 * | PlusTimes  | R+              | +         | *     | 0    | 1   | >=    |
 *
 * Each semiring also exposes its companion view: the same carrier and times,
 * with plus replaced by the minimum under the total order (tropical for log,
 * max-times for plus-times). The companion is never a separate weight type;
 * an automaton over Log is simply read over the companion when searching.
 *
 * divide() is the residual needed by weighted subset construction. Both
 * carriers are cancellative on non-zero elements.
 */

#ifndef LATDECODE_SEMIRING_HPP_
#define LATDECODE_SEMIRING_HPP_

#include <cmath>
#include <concepts>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "latdecode/errors.hpp"

namespace latdecode {

using Weight = double;

enum class SemiringKind { kLog, kPlusTimes };

inline constexpr Weight kInfinity = std::numeric_limits<Weight>::infinity();

/// Default absolute tolerance for weight equality in algorithmic caches.
inline constexpr double kDefaultDelta = 1e-6;

/// |a - b| <= delta, with infinities equal only to themselves.
inline bool approx_eq(Weight a, Weight b, double delta) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::fabs(a - b) <= delta;
}

/// Renders a weight for diagnostics: up to 9 significant digits, "+inf" and
/// "-inf" for infinities.
inline std::string format_weight(Weight w) {
  if (std::isnan(w)) return "nan";
  if (std::isinf(w)) return w > 0 ? "+inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", w);
  return buf;
}

struct LogSemiring {
  static constexpr SemiringKind kind = SemiringKind::kLog;
  static constexpr std::string_view name = "log";

  static constexpr Weight zero() { return kInfinity; }
  static constexpr Weight one() { return 0.0; }

  static bool member(Weight a) { return !std::isnan(a); }

  static Weight plus(Weight a, Weight b) {
    check(a);
    check(b);
    if (a == kInfinity) return b;
    if (b == kInfinity) return a;
    if (a == b && std::isinf(a)) return a;  // -inf (+) -inf
    const Weight lo = a < b ? a : b;
    return lo - std::log1p(std::exp(-std::fabs(a - b)));
  }

  static Weight times(Weight a, Weight b) {
    check(a);
    check(b);
    // Zero annihilates, including against -inf.
    if (a == kInfinity || b == kInfinity) return kInfinity;
    return a + b;
  }

  static Weight divide(Weight a, Weight b) {
    check(a);
    check(b);
    if (b == kInfinity) throw DivisionByZeroError("log: division by zero");
    if (a == kInfinity) return kInfinity;
    if (b == -kInfinity) {
      if (a == -kInfinity) return one();
      throw DomainError("log: no finite residual for division by -inf");
    }
    return a - b;
  }

  static bool leq(Weight a, Weight b) { return a <= b; }

  static Weight companion_plus(Weight a, Weight b) {
    check(a);
    check(b);
    return leq(a, b) ? a : b;
  }

 private:
  static void check(Weight a) {
    if (!member(a)) throw DomainError("log: weight is not a member (NaN)");
  }
};

struct PlusTimesSemiring {
  static constexpr SemiringKind kind = SemiringKind::kPlusTimes;
  static constexpr std::string_view name = "real";

  static constexpr Weight zero() { return 0.0; }
  static constexpr Weight one() { return 1.0; }

  static bool member(Weight a) { return std::isfinite(a) && a >= 0.0; }

  static Weight plus(Weight a, Weight b) {
    check(a);
    check(b);
    return a + b;
  }

  static Weight times(Weight a, Weight b) {
    check(a);
    check(b);
    return a * b;
  }

  static Weight divide(Weight a, Weight b) {
    check(a);
    check(b);
    if (b == 0.0) throw DivisionByZeroError("real: division by zero");
    return a / b;
  }

  static bool leq(Weight a, Weight b) { return a >= b; }

  static Weight companion_plus(Weight a, Weight b) {
    check(a);
    check(b);
    return leq(a, b) ? a : b;
  }

 private:
  static void check(Weight a) {
    if (!member(a)) {
      throw DomainError("real: weight " + format_weight(a) +
                        " is not a member of R+");
    }
  }
};

template <typename S>
concept MonotonicNegativeSemiring = requires(Weight a, Weight b) {
  { S::zero() } -> std::same_as<Weight>;
  { S::one() } -> std::same_as<Weight>;
  { S::member(a) } -> std::same_as<bool>;
  { S::plus(a, b) } -> std::same_as<Weight>;
  { S::times(a, b) } -> std::same_as<Weight>;
  { S::divide(a, b) } -> std::same_as<Weight>;
  { S::companion_plus(a, b) } -> std::same_as<Weight>;
  { S::leq(a, b) } -> std::same_as<bool>;
};

/// Selects between the base semiring and its companion when summing.
enum class View { kBase, kCompanion };

template <MonotonicNegativeSemiring S>
Weight view_plus(View view, Weight a, Weight b) {
  return view == View::kBase ? S::plus(a, b) : S::companion_plus(a, b);
}

/// Strict order: a strictly better than b.
template <MonotonicNegativeSemiring S>
bool less(Weight a, Weight b) {
  return S::leq(a, b) && !S::leq(b, a);
}

/// leq() that forgives violations up to an absolute tolerance.
template <MonotonicNegativeSemiring S>
bool leq_within(Weight a, Weight b, double tolerance) {
  return S::leq(a, b) || approx_eq(a, b, tolerance);
}

inline std::optional<SemiringKind> parse_semiring_kind(std::string_view s) {
  if (s == "log") return SemiringKind::kLog;
  if (s == "real") return SemiringKind::kPlusTimes;
  return std::nullopt;
}

/// Invokes f with a default-constructed semiring tag for the runtime kind.
template <typename F>
decltype(auto) dispatch_semiring(SemiringKind kind, F &&f) {
  if (kind == SemiringKind::kLog) return f(LogSemiring{});
  return f(PlusTimesSemiring{});
}

}  // namespace latdecode

#endif  // LATDECODE_SEMIRING_HPP_
