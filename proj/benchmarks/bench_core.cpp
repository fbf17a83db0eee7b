// Copyright 2026 The sptmqc Authors
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

#include <numbers>

#include <benchmark/benchmark.h>

#include "sptmqc/sptmqc.hpp"
#include "sweep.hpp"

namespace {

using namespace sptmqc;

void BM_ChannelFixedPoints(benchmark::State &state) {
    const MPSTensor t = toy_tensor({1.1, 0.4}).parent();
    for (auto _ : state) benchmark::DoNotOptimize(channel_fixed_points(t));
}
BENCHMARK(BM_ChannelFixedPoints);

void BM_Buffer(benchmark::State &state) {
    const FactorizedTensor t = toy_tensor({1.1, 0.4});
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(buffer(t, Axis::z, m));
}
BENCHMARK(BM_Buffer)->Arg(0)->Arg(4)->Arg(64);

void BM_FixedPoint(benchmark::State &state) {
    const FactorizedTensor t = toy_tensor({1.1, 0.4});
    for (auto _ : state) benchmark::DoNotOptimize(fixed_point(t, Axis::z));
}
BENCHMARK(BM_FixedPoint);

void BM_SweepCell(benchmark::State &state) {
    const tools::SweepConfig config;
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tools::evaluate_cell(config, 1.1, 0.4, m));
}
BENCHMARK(BM_SweepCell)->Arg(2)->Arg(tools::kInfiniteDepth);

void BM_StringOrderBare(benchmark::State &state) {
    const MPSTensor t = toy_tensor({1.1, 0.4}).parent();
    for (auto _ : state) benchmark::DoNotOptimize(string_order_bare(t, Axis::z, 50));
}
BENCHMARK(BM_StringOrderBare);

void BM_ProtocolRun(benchmark::State &state) {
    const ProtocolSimulator sim(aklt_factorized());
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(sim.run(Axis::z, 1, std::numbers::pi / 2, ++seed));
}
BENCHMARK(BM_ProtocolRun);

}  // namespace

BENCHMARK_MAIN();
