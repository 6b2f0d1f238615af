/*
 * Copyright 2026 The pftrace Authors
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

#include <benchmark/benchmark.h>

#include "pftrace/pftrace.hpp"

namespace {

using namespace pftrace;

void BM_PfElimination(benchmark::State& state) {
    MatrixSampler s(1);
    const auto a = s.skew<double>(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(pf_elimination(a).value);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PfElimination)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNCubed);

void BM_PfTraces(benchmark::State& state) {
    MatrixSampler s(1);
    const auto a = s.skew<double>(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(pfaffian(a));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PfTraces)->RangeMultiplier(2)->Range(8, 128)->Complexity([](benchmark::IterationCount n) {
    const double d = static_cast<double>(n);
    return d * d * d * d;
});

void BM_PfExactElimination(benchmark::State& state) {
    MatrixSampler s(1);
    const auto a = s.skew<Rational>(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(pf_elimination(a).value);
}
BENCHMARK(BM_PfExactElimination)->DenseRange(4, 16, 4);

void BM_PfExactTraces(benchmark::State& state) {
    MatrixSampler s(1);
    const auto a = s.skew<Rational>(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(pfaffian(a));
}
BENCHMARK(BM_PfExactTraces)->DenseRange(4, 16, 4);

void BM_LuDet(benchmark::State& state) {
    MatrixSampler s(2);
    const auto c = s.general<double>(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lu_det_inverse(c).det);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LuDet)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

void BM_DetBell(benchmark::State& state) {
    MatrixSampler s(2);
    const auto c = s.general<double>(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(det_via_bell(c));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DetBell)->RangeMultiplier(2)->Range(8, 128);

}  // namespace

BENCHMARK_MAIN();
