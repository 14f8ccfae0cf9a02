// Copyright 2026 The dimwit Authors
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

#include <random>

#include "benchmark/benchmark.h"

#include "dimwit/bounds.h"
#include "dimwit/models.h"
#include "dimwit/pulse.h"
#include "dimwit/random.h"
#include "dimwit/witness.h"

using namespace dimwit;

static void BM_determinant(benchmark::State &state) {
    auto m = assemble_matrix(protocol_table(noisy_protocol({NoiseKind::kQutritLeak, 0.05})));
    for (auto _ : state) {
        benchmark::DoNotOptimize(determinant(m));
    }
}
BENCHMARK(BM_determinant);

static void BM_cofactor_matrix(benchmark::State &state) {
    auto m = assemble_matrix(protocol_table(ideal_protocol()));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cofactor_matrix(m));
    }
}
BENCHMARK(BM_cofactor_matrix);

static void BM_protocol_table(benchmark::State &state) {
    auto spec = noisy_protocol({NoiseKind::kAmplitudeDamping, 0.1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(protocol_table(spec));
    }
}
BENCHMARK(BM_protocol_table);

static void BM_qutrit_witness(benchmark::State &state) {
    QutritParams q{0.59, 2.76, 1.1, 0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(qutrit_witness(q));
    }
}
BENCHMARK(BM_qutrit_witness);

static void BM_maximize_qutrit(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(maximize_qutrit(1, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_maximize_qutrit)->Arg(1)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_leak_amplitude_z(benchmark::State &state) {
    PulseParams p;
    for (auto _ : state) {
        benchmark::DoNotOptimize(leak_amplitude_z(p));
    }
}
BENCHMARK(BM_leak_amplitude_z)->Unit(benchmark::kMillisecond);

static void BM_simulate_three_level(benchmark::State &state) {
    PulseParams p;
    std::array<std::complex<double>, 3> psi = {1, 0, 0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_three_level(p, psi));
    }
}
BENCHMARK(BM_simulate_three_level)->Unit(benchmark::kMillisecond);

static void BM_sample_binomial(benchmark::State &state) {
    Rng rng(1);
    auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_binomial(rng, n, 0.1464));
    }
}
BENCHMARK(BM_sample_binomial)->Arg(20)->Arg(100000)->Arg(100000000);

BENCHMARK_MAIN();
