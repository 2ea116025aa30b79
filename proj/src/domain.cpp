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

#include "fuzmet/domain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fuzmet {

namespace {

constexpr double kMemberTol = 1e-12;
constexpr long long kSeqIndexBound = 1000000;

bool interval_contains(const Interval& iv, double x) {
  if (!std::isfinite(x)) return false;
  if (iv.lo_open ? !(x > iv.lo) : !(x >= iv.lo)) return false;
  if (iv.hi_open ? !(x < iv.hi) : !(x <= iv.hi)) return false;
  return true;
}

}  // namespace

DomainSpec::DomainSpec(Variant v) : v_(std::move(v)) {}

bool DomainSpec::contains(double x) const {
  return std::visit(
      [&](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Interval>) {
          return interval_contains(d, x);
        } else if constexpr (std::is_same_v<T, PositiveIntegers>) {
          return std::isfinite(x) && x >= 1.0 && std::floor(x) == x;
        } else if constexpr (std::is_same_v<T, ExplicitSet>) {
          return std::find(d.points.begin(), d.points.end(), x) !=
                 d.points.end();
        } else if constexpr (std::is_same_v<T, SequenceRange>) {
          if (!seq_values_) {
            auto vals = std::make_shared<std::vector<double>>();
            vals->reserve(1024);
            for (long long n = d.from; n < d.from + kSeqIndexBound; ++n) {
              try {
                vals->push_back(d.expr.eval(n));
              } catch (const EvalError&) {
                // undefined indices do not contribute values
              }
            }
            std::sort(vals->begin(), vals->end());
            seq_values_ = std::move(vals);
          }
          auto it = std::lower_bound(seq_values_->begin(), seq_values_->end(),
                                     x - kMemberTol);
          return it != seq_values_->end() && *it <= x + kMemberTol;
        } else {  // UnionOf
          for (const auto& part : d.parts)
            if (part.contains(x)) return true;
          return false;
        }
      },
      v_);
}

double DomainSpec::draw(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return std::visit(
      [&](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Interval>) {
          for (int attempt = 0; attempt < 256; ++attempt) {
            double u = unit(rng);
            double x;
            bool lo_inf = std::isinf(d.lo), hi_inf = std::isinf(d.hi);
            if (!lo_inf && !hi_inf) {
              x = d.lo + u * (d.hi - d.lo);
            } else if (!lo_inf) {
              x = u >= 1.0 ? d.lo : d.lo + u / (1.0 - u);
            } else if (!hi_inf) {
              x = u >= 1.0 ? d.hi : d.hi - u / (1.0 - u);
            } else {
              double m = u >= 1.0 ? 0.0 : u / (1.0 - u);
              x = (rng() & 1) ? m : -m;
            }
            if (interval_contains(d, x)) return x;
          }
          throw std::runtime_error("interval sampling failed (empty interval?)");
        } else if constexpr (std::is_same_v<T, PositiveIntegers>) {
          std::uniform_int_distribution<long long> di(1, 1000);
          return static_cast<double>(di(rng));
        } else if constexpr (std::is_same_v<T, ExplicitSet>) {
          if (d.points.empty())
            throw std::invalid_argument("cannot sample an empty explicit set");
          std::uniform_int_distribution<size_t> di(0, d.points.size() - 1);
          return d.points[di(rng)];
        } else if constexpr (std::is_same_v<T, SequenceRange>) {
          std::uniform_int_distribution<long long> di(d.from, d.from + 9999);
          for (int attempt = 0; attempt < 256; ++attempt) {
            try {
              return d.expr.eval(di(rng));
            } catch (const EvalError&) {
            }
          }
          throw std::runtime_error("sequence-range sampling failed");
        } else {  // UnionOf
          if (d.parts.empty())
            throw std::invalid_argument("cannot sample an empty union");
          std::uniform_int_distribution<size_t> di(0, d.parts.size() - 1);
          return d.parts[di(rng)].draw(rng);
        }
      },
      v_);
}

std::vector<double> DomainSpec::sample(int count, unsigned long long seed) const {
  if (count < 1) throw std::invalid_argument("sample count must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<double> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(draw(rng));
  return out;
}

bool DomainSpec::same_shape(const DomainSpec& other) const {
  if (v_.index() != other.v_.index()) return false;
  return std::visit(
      [&](const auto& a) -> bool {
        using T = std::decay_t<decltype(a)>;
        const auto& b = std::get<T>(other.v_);
        if constexpr (std::is_same_v<T, Interval>) {
          return a.lo == b.lo && a.hi == b.hi && a.lo_open == b.lo_open &&
                 a.hi_open == b.hi_open;
        } else if constexpr (std::is_same_v<T, PositiveIntegers>) {
          return true;
        } else if constexpr (std::is_same_v<T, ExplicitSet>) {
          return a.points == b.points;
        } else if constexpr (std::is_same_v<T, SequenceRange>) {
          return a.from == b.from && a.expr.same_ast(b.expr);
        } else {  // UnionOf
          if (a.parts.size() != b.parts.size()) return false;
          for (size_t i = 0; i < a.parts.size(); ++i)
            if (!a.parts[i].same_shape(b.parts[i])) return false;
          return true;
        }
      },
      v_);
}

}  // namespace fuzmet
