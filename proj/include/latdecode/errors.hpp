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

#ifndef LATDECODE_ERRORS_HPP_
#define LATDECODE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latdecode {

// Weight outside the carrier of the active semiring (NaN, or negative /
// infinite for plus-times).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZeroError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The automaton has a cycle; carries one back-edge.
class CycleError : public std::runtime_error {
 public:
  CycleError(std::size_t source, std::size_t target)
      : std::runtime_error("cycle detected: back-edge " +
                           std::to_string(source) + " -> " +
                           std::to_string(target)),
        source_(source),
        target_(target) {}

  std::size_t source() const noexcept { return source_; }
  std::size_t target() const noexcept { return target_; }

 private:
  std::size_t source_;
  std::size_t target_;
};

// Malformed text input. line() is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " +
                                           what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A state / path budget was exhausted.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No complete path exists.
class EmptyLanguageError : public std::runtime_error {
 public:
  EmptyLanguageError() : std::runtime_error("empty language") {}
};

// Structurally invalid automaton handed to an algorithm that requires a
// valid one.
class InvalidAutomatonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace latdecode

#endif  // LATDECODE_ERRORS_HPP_
