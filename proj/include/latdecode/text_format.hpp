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
 * @file text_format.hpp
 *
 * Acceptor text format, one record per line, whitespace-separated:
 *
 *     src dst label [weight]     arc; weight defaults to one
 *     state [weight]             final state; weight defaults to one
 *
 * The initial state is the source of the first record. Blank lines and
 * lines starting with '#' are ignored. Symbol tables are `token id` lines.
 */

#ifndef LATDECODE_TEXT_FORMAT_HPP_
#define LATDECODE_TEXT_FORMAT_HPP_

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "latdecode/automaton.hpp"
#include "latdecode/errors.hpp"
#include "latdecode/semiring.hpp"

namespace latdecode {

/// Bijection between tokens and labels. Id 0 is reserved for the epsilon
/// token and may only be bound once.
class SymbolTable {
 public:
  void add(const std::string &token, Label id, std::size_t line = 0) {
    if (id < 0) throw ParseError(line, "negative symbol id for '" + token + "'");
    if (by_token_.count(token)) {
      throw ParseError(line, "duplicate symbol '" + token + "'");
    }
    if (by_label_.count(id)) {
      throw ParseError(line, "duplicate symbol id " + std::to_string(id));
    }
    by_token_.emplace(token, id);
    by_label_.emplace(id, token);
  }

  std::optional<Label> find(std::string_view token) const {
    auto it = by_token_.find(std::string(token));
    if (it == by_token_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::string> find(Label id) const {
    auto it = by_label_.find(id);
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const { return by_token_.size(); }

 private:
  std::unordered_map<std::string, Label> by_token_;
  std::unordered_map<Label, std::string> by_label_;
};

namespace internal {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

template <typename F>
void for_each_record(std::string_view text, F &&f) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, end == std::string_view::npos ? text.size() - pos
                                                       : end - pos);
    ++line_no;
    auto fields = split_fields(line);
    if (!fields.empty() && fields.front().front() != '#') f(line_no, fields);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
}

inline std::int64_t parse_int(std::string_view s, std::size_t line,
                              const char *what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, std::string("malformed ") + what + " '" +
                               std::string(s) + "'");
  }
  return value;
}

inline StateId parse_state(std::string_view s, std::size_t line) {
  const auto v = parse_int(s, line, "state id");
  if (v < 0 || v > std::numeric_limits<StateId>::max()) {
    throw ParseError(line, "state id out of range '" + std::string(s) + "'");
  }
  return static_cast<StateId>(v);
}

inline Weight parse_double(std::string_view s, std::size_t line) {
  std::string_view body = s;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  Weight value = 0;
  auto [ptr, ec] =
      std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc() || ptr != body.data() + body.size() || body.empty()) {
    throw ParseError(line, "malformed weight '" + std::string(s) + "'");
  }
  return value;
}

template <typename S>
Weight parse_weight(std::string_view s, std::size_t line) {
  const Weight w = parse_double(s, line);
  if (!S::member(w)) {
    throw ParseError(line, "weight '" + std::string(s) +
                               "' is not a member of the " +
                               std::string(S::name) + " semiring");
  }
  return w;
}

inline Label parse_label(std::string_view s, std::size_t line,
                         const SymbolTable *symbols) {
  Label label;
  if (symbols != nullptr) {
    auto found = symbols->find(s);
    if (!found) throw ParseError(line, "unknown token '" + std::string(s) + "'");
    label = *found;
  } else {
    const auto v = parse_int(s, line, "label");
    if (v < 0 || v > std::numeric_limits<Label>::max()) {
      throw ParseError(line, "label out of range '" + std::string(s) + "'");
    }
    label = static_cast<Label>(v);
  }
  if (label == kEpsilon) {
    throw ParseError(line, "epsilon label '" + std::string(s) +
                               "' is not allowed on arcs");
  }
  return label;
}

// Shortest representation that parses back to the same double.
inline std::string render_exact(Weight w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, ptr);
}

}  // namespace internal

inline SymbolTable read_symbols(std::string_view text) {
  SymbolTable table;
  internal::for_each_record(
      text, [&](std::size_t line, const std::vector<std::string_view> &f) {
        if (f.size() != 2) {
          throw ParseError(line, "expected 'token id', got " +
                                     std::to_string(f.size()) + " fields");
        }
        const auto id = internal::parse_int(f[1], line, "symbol id");
        if (id > std::numeric_limits<Label>::max()) {
          throw ParseError(line, "symbol id out of range");
        }
        table.add(std::string(f[0]), static_cast<Label>(id), line);
      });
  return table;
}

/// Parses the acceptor text format. Zero-weight arcs and finals are dropped
/// (see Automaton::pruned_count()); structural checks such as acyclicity
/// are left to validate().
template <MonotonicNegativeSemiring S>
Automaton<S> read_text(std::string_view text,
                       const SymbolTable *symbols = nullptr) {
  Automaton<S> a;
  bool seen_first = false;
  internal::for_each_record(
      text, [&](std::size_t line, const std::vector<std::string_view> &f) {
        const StateId src = internal::parse_state(f[0], line);
        if (!seen_first) {
          a.set_initial(src);
          seen_first = true;
        }
        a.reserve_state(src);
        switch (f.size()) {
          case 1:
            a.set_final(src, S::one());
            break;
          case 2:
            a.set_final(src, internal::parse_weight<S>(f[1], line));
            break;
          case 3:
          case 4: {
            const StateId dst = internal::parse_state(f[1], line);
            const Label label = internal::parse_label(f[2], line, symbols);
            const Weight w = f.size() == 4
                                 ? internal::parse_weight<S>(f[3], line)
                                 : S::one();
            a.reserve_state(dst);
            a.add_arc(src, label, w, dst);
            break;
          }
          default:
            throw ParseError(line, "expected 1 to 4 fields, got " +
                                       std::to_string(f.size()));
        }
      });
  return a;
}

/// Inverse of read_text. The initial state's block is written first so
/// that it is re-read as initial; remaining states follow in id order. Each
/// block lists arcs in stored order, then the final record. Weights use the
/// shortest decimal form that re-reads to the same double.
template <MonotonicNegativeSemiring S>
std::string write_text(const Automaton<S> &a,
                       const SymbolTable *symbols = nullptr) {
  std::string out;
  auto label_text = [symbols](Label l) {
    if (symbols != nullptr) {
      if (auto tok = symbols->find(l)) return *tok;
    }
    return std::to_string(l);
  };
  auto emit_state = [&](StateId q) {
    for (const Arc &arc : a.arcs(q)) {
      out += std::to_string(arc.source);
      out += '\t';
      out += std::to_string(arc.target);
      out += '\t';
      out += label_text(arc.label);
      out += '\t';
      out += internal::render_exact(arc.weight);
      out += '\n';
    }
    if (a.is_final(q)) {
      out += std::to_string(q);
      out += '\t';
      out += internal::render_exact(a.final_weight(q));
      out += '\n';
    }
  };
  if (a.valid_state(a.initial())) emit_state(a.initial());
  for (std::size_t q = 0; q < a.num_states(); ++q) {
    if (static_cast<StateId>(q) != a.initial()) {
      emit_state(static_cast<StateId>(q));
    }
  }
  return out;
}

/// Reads a whole file; throws ParseError(0, ...) if it cannot be opened.
inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace latdecode

#endif  // LATDECODE_TEXT_FORMAT_HPP_
