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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fuzmet {

/// Index-pair scan kernels. Every kernel has a serial reference path and an
/// OpenMP path; both produce identical results (the parallel paths reduce to
/// the lexicographically first / smallest-index answer, matching a
/// left-to-right serial scan).
enum class ExecMode { Serial, Parallel };

ExecMode exec_mode();
void set_exec_mode(ExecMode mode);

struct PairHit {
  long long first;
  long long second;
};

struct PairMax {
  long long first = 0;
  long long second = 0;
  double value = 0.0;
};

namespace detail {

template <class Pred>
std::optional<PairHit> first_pair_serial(long long lo, long long hi,
                                         Pred&& pred) {
  for (long long m = lo; m < hi; ++m)
    for (long long n = m + 1; n <= hi; ++n)
      if (pred(m, n)) return PairHit{m, n};
  return std::nullopt;
}

template <class Pred>
std::optional<PairHit> first_pair_parallel(long long lo, long long hi,
                                           Pred&& pred) {
#ifdef _OPENMP
  const long long rows = hi - lo;
  if (rows <= 0) return std::nullopt;
  const int threads = omp_get_max_threads();
  const long long block = static_cast<long long>(threads) * 8;
  for (long long row0 = lo; row0 < hi; row0 += block) {
    const long long row1 = std::min(hi, row0 + block);
    long long best_m = -1, best_n = -1;
#pragma omp parallel
    {
      long long loc_m = -1, loc_n = -1;
#pragma omp for schedule(static, 1) nowait
      for (long long m = row0; m < row1; ++m) {
        if (loc_m >= 0) continue;  // this thread already has a hit
        for (long long n = m + 1; n <= hi; ++n) {
          if (pred(m, n)) {
            loc_m = m;
            loc_n = n;
            break;
          }
        }
      }
#pragma omp critical
      if (loc_m >= 0 &&
          (best_m < 0 || loc_m < best_m ||
           (loc_m == best_m && loc_n < best_n))) {
        best_m = loc_m;
        best_n = loc_n;
      }
    }
    if (best_m >= 0) return PairHit{best_m, best_n};
  }
  return std::nullopt;
#else
  return first_pair_serial(lo, hi, std::forward<Pred>(pred));
#endif
}

template <class Fn>
PairMax max_pair_serial(long long lo, long long hi, Fn&& fn) {
  PairMax best{lo, lo + 1, fn(lo, lo + 1)};
  for (long long m = lo; m < hi; ++m)
    for (long long n = m + 1; n <= hi; ++n) {
      double v = fn(m, n);
      if (v > best.value) best = {m, n, v};
    }
  return best;
}

template <class Fn>
PairMax max_pair_parallel(long long lo, long long hi, Fn&& fn) {
#ifdef _OPENMP
  PairMax best{lo, lo + 1, fn(lo, lo + 1)};
#pragma omp parallel
  {
    PairMax loc = best;
#pragma omp for schedule(dynamic, 16) nowait
    for (long long m = lo; m < hi; ++m)
      for (long long n = m + 1; n <= hi; ++n) {
        double v = fn(m, n);
        if (v > loc.value ||
            (v == loc.value && (m < loc.first ||
                                (m == loc.first && n < loc.second))))
          loc = {m, n, v};
      }
#pragma omp critical
    if (loc.value > best.value ||
        (loc.value == best.value &&
         (loc.first < best.first ||
          (loc.first == best.first && loc.second < best.second))))
      best = loc;
  }
  return best;
#else
  return max_pair_serial(lo, hi, std::forward<Fn>(fn));
#endif
}

}  // namespace detail

/// Lexicographically first pair (m, n), lo <= m < n <= hi, with pred(m, n).
template <class Pred>
std::optional<PairHit> find_first_pair(long long lo, long long hi, Pred&& pred) {
  if (lo >= hi) return std::nullopt;
  return exec_mode() == ExecMode::Parallel
             ? detail::first_pair_parallel(lo, hi, std::forward<Pred>(pred))
             : detail::first_pair_serial(lo, hi, std::forward<Pred>(pred));
}

/// Maximum of fn over pairs m < n with the lexicographically smallest argmax.
template <class Fn>
PairMax max_over_pairs(long long lo, long long hi, Fn&& fn) {
  return exec_mode() == ExecMode::Parallel
             ? detail::max_pair_parallel(lo, hi, std::forward<Fn>(fn))
             : detail::max_pair_serial(lo, hi, std::forward<Fn>(fn));
}

struct RangeMax {
  long long index = 0;
  double value = 0.0;
};

/// Maximum of fn over [lo, hi] with the smallest maximizing index.
template <class Fn>
RangeMax max_over_range(long long lo, long long hi, Fn&& fn) {
  RangeMax best{lo, fn(lo)};
  if (exec_mode() == ExecMode::Parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      RangeMax loc = best;
#pragma omp for schedule(static) nowait
      for (long long i = lo + 1; i <= hi; ++i) {
        double v = fn(i);
        if (v > loc.value || (v == loc.value && i < loc.index)) loc = {i, v};
      }
#pragma omp critical
      if (loc.value > best.value ||
          (loc.value == best.value && loc.index < best.index))
        best = loc;
    }
    return best;
#endif
  }
  for (long long i = lo + 1; i <= hi; ++i) {
    double v = fn(i);
    if (v > best.value) best = {i, v};
  }
  return best;
}

/// Count of indices in [lo, hi] satisfying pred.
template <class Pred>
long long count_in_range(long long lo, long long hi, Pred&& pred) {
  long long count = 0;
  if (exec_mode() == ExecMode::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : count) schedule(static)
    for (long long i = lo; i <= hi; ++i)
      if (pred(i)) ++count;
    return count;
#endif
  }
  for (long long i = lo; i <= hi; ++i)
    if (pred(i)) ++count;
  return count;
}

}  // namespace fuzmet
