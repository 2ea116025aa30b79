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

#include <memory>
#include <random>
#include <variant>
#include <vector>

#include "fuzmet/expr.hpp"

namespace fuzmet {

class DomainSpec;

/// Interval with extended-real endpoints (use +-infinity for unbounded).
struct Interval {
  double lo;
  double hi;
  bool lo_open;
  bool hi_open;
};

struct PositiveIntegers {};

struct ExplicitSet {
  std::vector<double> points;
};

/// {expr(n) : n >= from}. Membership is decided against the value set
/// materialized up to index bound 10^6, at tolerance 1e-12.
struct SequenceRange {
  Expr expr;
  long long from;
};

struct UnionOf {
  std::vector<DomainSpec> parts;
};

/// Point-set descriptions for the working spaces. Points are IEEE doubles;
/// point identity is exact representation equality.
class DomainSpec {
 public:
  using Variant =
      std::variant<Interval, PositiveIntegers, ExplicitSet, SequenceRange, UnionOf>;

  DomainSpec() : DomainSpec(Interval{0.0, 1.0, true, true}) {}
  DomainSpec(Variant v);  // NOLINT: implicit by design

  bool contains(double x) const;

  /// Deterministic for a fixed seed; open endpoints are never returned.
  /// Unbounded intervals are sampled through u -> lo + u/(1-u).
  std::vector<double> sample(int count, unsigned long long seed) const;

  /// Structural equality (used for oracle catalog matching). SequenceRange
  /// expressions compare by AST.
  bool same_shape(const DomainSpec& other) const;

  const Variant& variant() const { return v_; }

 private:
  double draw(std::mt19937_64& rng) const;

  Variant v_;
  // lazily materialized, sorted value set for SequenceRange membership
  mutable std::shared_ptr<std::vector<double>> seq_values_;
};

}  // namespace fuzmet
