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

#include <variant>
#include <vector>

#include "fuzmet/expr.hpp"

namespace fuzmet {

struct Formula {
  Expr expr;
};

/// x_{2m-1} = a(m), x_{2m} = b(m).
struct Interleave {
  Expr a;
  Expr b;
};

/// Defined only on [1, prefix.size()].
struct Explicit {
  std::vector<double> points;
};

class SequenceSpec {
 public:
  using Variant = std::variant<Formula, Interleave, Explicit>;

  SequenceSpec() : v_(Formula{Expr::parse("n")}) {}
  SequenceSpec(Variant v) : v_(std::move(v)) {}  // NOLINT

  /// n-th term, n >= 1. Throws EvalError on expression failure and
  /// std::out_of_range past an explicit prefix.
  double term(long long n) const;

  const Variant& variant() const { return v_; }

 private:
  Variant v_;
};

}  // namespace fuzmet
