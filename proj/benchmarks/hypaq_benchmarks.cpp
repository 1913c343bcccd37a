// Copyright 2026 The HyPAQ Authors
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

#include "hypaq/builders.hpp"
#include "hypaq/circuit_text.hpp"
#include "hypaq/generators.hpp"
#include "hypaq/partition.hpp"

using namespace hypaq;

namespace {

void BM_ParseRus(benchmark::State &state) {
    auto text = serialize_circuit(gen_rus(static_cast<std::uint32_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(parse_circuit(text));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseRus)->Arg(8)->Arg(48);

void BM_BuildStaticQpe(benchmark::State &state) {
    auto c = gen_qpe(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_static(c));
}
BENCHMARK(BM_BuildStaticQpe)->Arg(4)->Arg(10)->Arg(20);

void BM_BuildAdaptiveRandom(benchmark::State &state) {
    auto c = gen_random_adaptive(static_cast<std::uint32_t>(state.range(0)), 16, 1);
    for (auto _ : state) benchmark::DoNotOptimize(build_adaptive(c));
}
BENCHMARK(BM_BuildAdaptiveRandom)->Arg(8)->Arg(16)->Arg(32);

void BM_PartitionFm(benchmark::State &state) {
    auto g = build_adaptive(gen_random_adaptive(static_cast<std::uint32_t>(state.range(0)), 16, 1));
    PartitionConfig cfg;
    cfg.k = 4;
    for (auto _ : state) benchmark::DoNotOptimize(partition(g, cfg));
}
BENCHMARK(BM_PartitionFm)->Arg(16)->Arg(32)->Arg(64);

void BM_PartitionKl(benchmark::State &state) {
    auto g = build_adaptive(gen_random_adaptive(static_cast<std::uint32_t>(state.range(0)), 16, 1));
    PartitionConfig cfg;
    cfg.heuristic = Heuristic::KL;
    for (auto _ : state) benchmark::DoNotOptimize(partition(g, cfg));
}
BENCHMARK(BM_PartitionKl)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
