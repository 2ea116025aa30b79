/* Copyright 2026 fuzmet contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

namespace fuzmet {

/// Syntax error with the 0-based byte offset of the first unparsable token.
struct ParseError : std::runtime_error {
  ParseError(std::size_t off, const std::string& what)
      : std::runtime_error(what + " at offset " + std::to_string(off)),
        offset(off) {}
  std::size_t offset;
};

/// Evaluation error: division by zero or a non-finite result.
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Arithmetic expressions over decimal literals and the free variable n.
///
/// Grammar (whitespace insignificant):
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := base ("^" (integer | "n"))?
///   base   := number | "n" | "(" expr ")" | "-" base
///   number := integer ("." digits)?
///
/// The power exponent is restricted to an integer literal or n.
/// ASTs are immutable; Expr is a cheap shared handle.
class Expr {
 public:
  struct Node;

  Expr() = default;

  static Expr parse(const std::string& text);

  /// Evaluates at integer n >= 1. All arithmetic is IEEE double; values of
  /// n beyond 2^52 lose integer precision.
  double eval(long long n) const;

  /// Canonical text form; parse(str()) is structurally identical to *this.
  std::string str() const;

  /// Structural AST equality (node kinds and literal values).
  bool same_ast(const Expr& other) const;

  bool valid() const { return root_ != nullptr; }

  /// The source text the expression was parsed from.
  const std::string& source() const { return source_; }

 private:
  std::shared_ptr<const Node> root_;
  std::string source_;
};

}  // namespace fuzmet
