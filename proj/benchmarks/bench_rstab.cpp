// Copyright 2026 The rstab authors
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

#include <random>

#include "rstab/counting.hpp"
#include "rstab/exact.hpp"
#include "rstab/normal_form.hpp"
#include "rstab/rewrite.hpp"
#include "rstab/tableau.hpp"

namespace {

using namespace rstab;

Circuit bench_circuit(int n, int length, uint32_t seed) {
    std::mt19937 rng(seed);
    Circuit c;
    c.n_qubits = n;
    std::uniform_int_distribution<int> wire(0, n - 1);
    while (static_cast<int>(c.gates.size()) < length) {
        switch (rng() % 4) {
            case 0:
                c.push(Gate{GateKind::H, wire(rng)});
                break;
            case 1:
                c.push(Gate{GateKind::Z, wire(rng)});
                break;
            case 2:
                c.push(Gate{GateKind::MinusOne});
                break;
            default: {
                if (n < 2) {
                    c.push(Gate{GateKind::H, 0});
                    break;
                }
                int q = wire(rng);
                c.push(Gate{GateKind::CZ, q, q + 1 < n ? q + 1 : q - 1});
                break;
            }
        }
    }
    return c;
}

void BM_TableauOfCircuit(benchmark::State& state) {
    Circuit c = bench_circuit(static_cast<int>(state.range(0)), 40, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Tableau::of_circuit(c));
    }
}
BENCHMARK(BM_TableauOfCircuit)->Arg(2)->Arg(3)->Arg(5);

void BM_Synthesize(benchmark::State& state) {
    Circuit c = bench_circuit(static_cast<int>(state.range(0)), 40, 2);
    Tableau t = Tableau::of_circuit(c);
    for (auto _ : state) {
        benchmark::DoNotOptimize(synthesize(t, &c));
    }
}
BENCHMARK(BM_Synthesize)->Arg(2)->Arg(3)->Arg(5);

void BM_RewriteNormalize(benchmark::State& state) {
    Circuit c = bench_circuit(static_cast<int>(state.range(0)), 30, 3);
    const RuleDatabase& db = RuleDatabase::derived();
    for (auto _ : state) {
        benchmark::DoNotOptimize(normalize_by_rewriting(c, db));
    }
}
BENCHMARK(BM_RewriteNormalize)->Arg(2)->Arg(3);

void BM_ExactCircuitMatrix(benchmark::State& state) {
    Circuit c = bench_circuit(static_cast<int>(state.range(0)), 30, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(circuit_matrix(c));
    }
}
BENCHMARK(BM_ExactCircuitMatrix)->Arg(3)->Arg(5);

void BM_Fingerprint(benchmark::State& state) {
    Circuit c = bench_circuit(3, 40, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fingerprint(c));
    }
}
BENCHMARK(BM_Fingerprint);

void BM_BfsClosure2(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(bfs_closure_order(2));
    }
}
BENCHMARK(BM_BfsClosure2);

}  // namespace

BENCHMARK_MAIN();
