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

#include "fuzmet/tnorm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace fuzmet {

namespace {

void require_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::domain_error(std::string("t-norm argument '") + name +
                            "' outside [0,1]: " + std::to_string(v));
  }
}

double raw_apply(TNormKind kind, double a, double b) {
  switch (kind) {
    case TNormKind::Product: return a * b;
    case TNormKind::Minimum: return std::min(a, b);
    default:
      // special-case the identity so 1 stays exact under rounding
      if (a == 1.0) return b;
      if (b == 1.0) return a;
      return std::max(a + b - 1.0, 0.0);
  }
}

}  // namespace

double tnorm_apply(TNormKind kind, double a, double b) {
  require_unit(a, "a");
  require_unit(b, "b");
  return raw_apply(kind, a, b);
}

const char* tnorm_name(TNormKind kind) {
  switch (kind) {
    case TNormKind::Product: return "product";
    case TNormKind::Minimum: return "minimum";
    default: return "lukasiewicz";
  }
}

TNormKind tnorm_from_name(const std::string& name) {
  if (name == "product") return TNormKind::Product;
  if (name == "minimum") return TNormKind::Minimum;
  if (name == "lukasiewicz") return TNormKind::Lukasiewicz;
  throw std::invalid_argument("unknown t-norm name: " + name);
}

Verdict check_tnorm_axioms(TNormKind kind, int grid_size) {
  if (grid_size < 2) throw std::invalid_argument("grid_size must be >= 2");
  constexpr double kTol = 1e-12;

  std::vector<double> grid(static_cast<size_t>(grid_size));
  for (int i = 0; i < grid_size; ++i) {
    grid[static_cast<size_t>(i)] =
        static_cast<double>(i) / static_cast<double>(grid_size - 1);
  }

  auto violation = [&](const char* axiom, std::vector<double> tuple) {
    Witness w;
    w.points = std::move(tuple);
    return fails(std::move(w), std::string("t-norm axiom violated: ") + axiom);
  };

  for (double a : grid) {
    // identity a*1 = a, exact
    if (raw_apply(kind, a, 1.0) != a) return violation("identity", {a, 1.0});
    for (double b : grid) {
      double ab = raw_apply(kind, a, b);
      if (ab < -kTol || ab > 1.0 + kTol) return violation("range", {a, b});
      if (raw_apply(kind, b, a) != ab) return violation("commutativity", {a, b});
      for (double c : grid) {
        double l = raw_apply(kind, raw_apply(kind, a, b), c);
        double r = raw_apply(kind, a, raw_apply(kind, b, c));
        if (std::fabs(l - r) > kTol) return violation("associativity", {a, b, c});
      }
    }
  }

  // Monotonicity over adjacent grid steps; transitivity gives the general
  // 4-tuple form. The full quadruple check is kept for small grids.
  for (size_t i = 0; i + 1 < grid.size(); ++i) {
    for (double c : grid) {
      if (raw_apply(kind, grid[i], c) > raw_apply(kind, grid[i + 1], c) + kTol) {
        return violation("monotonicity", {grid[i], grid[i + 1], c});
      }
    }
  }
  if (grid_size <= 11) {
    for (double a : grid)
      for (double b : grid) {
        if (a > b) continue;
        for (double c : grid)
          for (double d : grid) {
            if (c > d) continue;
            if (raw_apply(kind, a, c) > raw_apply(kind, b, d) + kTol) {
              return violation("monotonicity", {a, b, c, d});
            }
          }
      }
  }

  Witness w;
  w.indices = {static_cast<long long>(grid_size)};
  return holds(std::move(w), "all sampled t-norm axioms hold");
}

}  // namespace fuzmet
