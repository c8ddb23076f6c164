// Copyright 2026 The eulb Authors
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

#include <vector>

#include "eulb/bounds.hpp"
#include "eulb/channel.hpp"
#include "eulb/linalg.hpp"
#include "eulb/reservoir.hpp"
#include "eulb/sweep.hpp"

namespace {

void BM_DecayAmplitude(benchmark::State &state) {
    const eulb::ReservoirParams p{1.0, state.range(0) / 10.0, 5};
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eulb::decay_amplitude(p, t));
        t = t < 20.0 ? t + 1e-3 : 0.0;
    }
}
BENCHMARK(BM_DecayAmplitude)->Arg(1)->Arg(400);

void BM_Eigenvalues4(benchmark::State &state) {
    const eulb::TwoQubit rho = eulb::apply_memory_decay(eulb::bell_diagonal_initial({0.3}), 0.7);
    const eulb::Mat4 m = rho.matrix();
    for (auto _ : state) benchmark::DoNotOptimize(eulb::eigenvalues_hermitian(m));
}
BENCHMARK(BM_Eigenvalues4);

void BM_BoundsRecord(benchmark::State &state) {
    const eulb::TwoQubit rho = eulb::apply_memory_decay(eulb::max_entangled_initial(), 0.6);
    const auto x = eulb::pauli_x(), z = eulb::pauli_z();
    for (auto _ : state) benchmark::DoNotOptimize(eulb::bounds_record(rho, x, z));
}
BENCHMARK(BM_BoundsRecord);

void BM_KernelOde(benchmark::State &state) {
    std::vector<double> grid(2001);
    for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = 0.01 * i;
    const eulb::ReservoirParams p{1.0, 0.1, 2};
    for (auto _ : state) benchmark::DoNotOptimize(eulb::kernel_ode_oracle(p, grid));
}
BENCHMARK(BM_KernelOde)->Unit(benchmark::kMillisecond);

void BM_SweepPreset(benchmark::State &state) {
    const eulb::SweepConfig cfg = eulb::figure_preset(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(eulb::run_sweep(cfg));
}
BENCHMARK(BM_SweepPreset)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
