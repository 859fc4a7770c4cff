// Copyright 2026 The symtotient Authors
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
#include <benchmark/benchmark.h>

#include "symtot/arith.hpp"
#include "symtot/totient.hpp"
#include "symtot/zeros.hpp"

namespace {

using symtot::SymSystem;

void BM_ZerosBruteforce(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  const SymSystem sys(k, {1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(symtot::count_zeros_bruteforce(sys, 11));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(symtot::saturating_pow(11, k)));
}
BENCHMARK(BM_ZerosBruteforce)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_ZerosClosed(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symtot::closed_N_e1e2(k, 1'000'000'007ULL));
}
BENCHMARK(BM_ZerosClosed)->Arg(6)->Arg(64);

void BM_PhiBruteforce(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const SymSystem sys(3, {1, 2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(symtot::phi_bruteforce(sys, n));
}
BENCHMARK(BM_PhiBruteforce)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_VarphiClosed(benchmark::State& state) {
  const SymSystem sys(4, {2});
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(symtot::varphi(sys, 1'000'000 + n));
    n = n % 1000 + 1;
  }
}
BENCHMARK(BM_VarphiClosed);

void BM_Factorize(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symtot::factorize(n));
}
BENCHMARK(BM_Factorize)->Arg(999'999'000'001LL)->Arg(4'611'686'014'132'420'609LL);

}  // namespace

BENCHMARK_MAIN();
