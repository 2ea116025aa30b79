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

// Serial vs OpenMP comparison for the pair-scan kernels that dominate the
// classifier runtimes.

#include <benchmark/benchmark.h>

#include "fuzmet/scan.hpp"
#include "fuzmet/space.hpp"

namespace {

double pair_value(long long m, long long n) {
  double x = static_cast<double>(m), y = static_cast<double>(n);
  return fuzmet::metric_eval(fuzmet::MetricKind::Euclidean1D, x, y) /
         (1.0 + x + y);
}

void bench_find_first_pair(benchmark::State& state, fuzmet::ExecMode mode) {
  fuzmet::set_exec_mode(mode);
  long long n = state.range(0);
  for (auto _ : state) {
    // threshold no pair reaches, forcing a full scan
    auto hit = fuzmet::find_first_pair(
        1, n, [](long long m, long long k) { return pair_value(m, k) > 2.0; });
    benchmark::DoNotOptimize(hit);
  }
  state.SetComplexityN(n);
}

void bench_max_over_pairs(benchmark::State& state, fuzmet::ExecMode mode) {
  fuzmet::set_exec_mode(mode);
  long long n = state.range(0);
  for (auto _ : state) {
    auto best = fuzmet::max_over_pairs(1, n, pair_value);
    benchmark::DoNotOptimize(best);
  }
  state.SetComplexityN(n);
}

void bench_count_in_range(benchmark::State& state, fuzmet::ExecMode mode) {
  fuzmet::set_exec_mode(mode);
  long long n = state.range(0) * state.range(0);
  for (auto _ : state) {
    long long c = fuzmet::count_in_range(
        1, n, [](long long i) { return pair_value(i, i + 1) > 0.1; });
    benchmark::DoNotOptimize(c);
  }
  state.SetComplexityN(n);
}

}  // namespace

BENCHMARK_CAPTURE(bench_find_first_pair, serial, fuzmet::ExecMode::Serial)
    ->Range(256, 4096)
    ->Complexity();
BENCHMARK_CAPTURE(bench_find_first_pair, parallel, fuzmet::ExecMode::Parallel)
    ->Range(256, 4096)
    ->Complexity();
BENCHMARK_CAPTURE(bench_max_over_pairs, serial, fuzmet::ExecMode::Serial)
    ->Range(256, 4096)
    ->Complexity();
BENCHMARK_CAPTURE(bench_max_over_pairs, parallel, fuzmet::ExecMode::Parallel)
    ->Range(256, 4096)
    ->Complexity();
BENCHMARK_CAPTURE(bench_count_in_range, serial, fuzmet::ExecMode::Serial)
    ->Range(256, 4096)
    ->Complexity();
BENCHMARK_CAPTURE(bench_count_in_range, parallel, fuzmet::ExecMode::Parallel)
    ->Range(256, 4096)
    ->Complexity();

BENCHMARK_MAIN();
