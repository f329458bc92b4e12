// Copyright 2026 The chenbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Parallel kernels against their serial references. The second argument of
// the parallel cases is the OpenMP thread count.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <vector>

#include "chenbound/kernels.hpp"
#include "chenbound/reference.hpp"

namespace {

using chenbound::kernels::u64;
namespace kernels = chenbound::kernels;
namespace reference = chenbound::reference;

std::vector<u64> bounds(u64 hi, int n) {
  std::vector<u64> b;
  for (int i = 1; i <= n; ++i) b.push_back(hi / static_cast<u64>(n) * static_cast<u64>(i));
  return b;
}

void BM_CountPrimes(benchmark::State& st) {
  omp_set_num_threads(static_cast<int>(st.range(1)));
  const u64 hi = static_cast<u64>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::count_primes(2, hi));
}
void BM_CountPrimesReference(benchmark::State& st) {
  const u64 hi = static_cast<u64>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(reference::count_primes(2, hi));
}

void BM_ReciprocalSums(benchmark::State& st) {
  omp_set_num_threads(static_cast<int>(st.range(1)));
  const auto b = bounds(static_cast<u64>(st.range(0)), 64);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::reciprocal_sums(b));
}
void BM_ReciprocalSumsReference(benchmark::State& st) {
  const auto b = bounds(static_cast<u64>(st.range(0)), 64);
  for (auto _ : st) benchmark::DoNotOptimize(reference::reciprocal_sums(b));
}

void BM_SquarefreeSums(benchmark::State& st) {
  omp_set_num_threads(static_cast<int>(st.range(1)));
  const u64 x = static_cast<u64>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::squarefree_sums(x));
}
void BM_SquarefreeSumsReference(benchmark::State& st) {
  const u64 x = static_cast<u64>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(reference::squarefree_sums(x));
}

void BM_GapScan(benchmark::State& st) {
  omp_set_num_threads(static_cast<int>(st.range(1)));
  const u64 hi = static_cast<u64>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::gap_scan(9551, hi, 996, 1000));
}
void BM_GapScanReference(benchmark::State& st) {
  const u64 hi = static_cast<u64>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(reference::gap_scan(9551, hi, 996, 1000));
}

void threads(benchmark::internal::Benchmark* b, long n) {
  const int max = omp_get_num_procs();
  for (int t = 1; t <= max; t *= 2) b->Args({n, t});
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_CountPrimes)->Apply([](auto* b) { threads(b, 10'000'000); });
BENCHMARK(BM_CountPrimesReference)->Arg(10'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReciprocalSums)->Apply([](auto* b) { threads(b, 10'000'000); });
BENCHMARK(BM_ReciprocalSumsReference)->Arg(10'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SquarefreeSums)->Apply([](auto* b) { threads(b, 10'000'000); });
BENCHMARK(BM_SquarefreeSumsReference)->Arg(10'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GapScan)->Apply([](auto* b) { threads(b, 10'000'000); });
BENCHMARK(BM_GapScanReference)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
