// Copyright 2026 The sextic-index Authors
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

#include <benchmark/benchmark.h>

#include "sextic/classifier.hpp"
#include "sextic/fp_poly.hpp"
#include "sextic/ore.hpp"
#include "sextic/trinomial.hpp"

namespace {

using sextic::Integer;
using sextic::Trinomial;

void BM_IndexOfField(benchmark::State& state) {
  const Trinomial t{Integer(360), Integer(35)};
  for (auto _ : state) benchmark::DoNotOptimize(sextic::index_of_field(t));
}
BENCHMARK(BM_IndexOfField);

void BM_IndexBox(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    std::uint64_t sum = 0;
    for (long a = -n; a <= n; ++a) {
      for (long b = 1; b <= n; ++b) {
        const Trinomial t{Integer(a), Integer(b)};
        if (!t.is_reduced() || !sextic::is_irreducible(t)) continue;
        sum += sextic::index_of_field(t).index;
      }
    }
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_IndexBox)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_OreAnalyze(benchmark::State& state) {
  const auto f = Trinomial(Integer(-42), Integer(-1258)).polynomial();
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sextic::ore_analyze(f, p));
}
BENCHMARK(BM_OreAnalyze)->Arg(2)->Arg(3)->Arg(5);

void BM_FpFactor(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto f = sextic::FpPoly::from_zpoly(Trinomial(Integer(18), Integer(33)).polynomial(), p);
  for (auto _ : state) benchmark::DoNotOptimize(sextic::fp_factor(f));
}
BENCHMARK(BM_FpFactor)->Arg(7)->Arg(101)->Arg(65537);

void BM_IsIrreducible(benchmark::State& state) {
  const Trinomial t{Integer(state.range(0)), Integer(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(sextic::is_irreducible(t));
}
BENCHMARK(BM_IsIrreducible)->Args({18, 33})->Args({123456, 987654});

}  // namespace

BENCHMARK_MAIN();
