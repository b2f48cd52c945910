// Copyright 2026 The postfoot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial vs OpenMP kernels: power-log integration and parameter sweeps.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "postfoot/kernels.hpp"
#include "postfoot/parameters.hpp"
#include "postfoot/sensitivity.hpp"

namespace {

struct Trace {
  std::vector<double> t;
  std::vector<double> p;
};

Trace make_trace(std::size_t n) {
  Trace tr;
  tr.t.resize(n);
  tr.p.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    tr.t[i] = static_cast<double>(i) * 0.5;
    tr.p[i] = 700.0 + 80.0 * std::sin(static_cast<double>(i) * 1e-3);
  }
  return tr;
}

void BM_TrapezoidSerial(benchmark::State& state) {
  auto tr = make_trace(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(postfoot::kernels::trapezoid_wh_serial(tr.t, tr.p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TrapezoidParallel(benchmark::State& state) {
  auto tr = make_trace(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(postfoot::kernels::trapezoid_wh_parallel(tr.t, tr.p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

postfoot::SweepSpec make_sweep(std::size_t n) {
  postfoot::SweepSpec spec{"global.i_elec", {}};
  for (std::size_t i = 0; i < n; ++i) spec.values.push_back(0.1 + 0.8 * static_cast<double>(i) / static_cast<double>(n));
  return spec;
}

void BM_SweepSerial(benchmark::State& state) {
  auto s = postfoot::method2_scenario();
  auto spec = make_sweep(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(postfoot::sweep_serial(s, spec));
}

void BM_SweepParallel(benchmark::State& state) {
  auto s = postfoot::method2_scenario();
  auto spec = make_sweep(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(postfoot::sweep(s, spec));
}

}  // namespace

BENCHMARK(BM_TrapezoidSerial)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_TrapezoidParallel)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_SweepSerial)->Range(16, 1024);
BENCHMARK(BM_SweepParallel)->Range(16, 1024);

BENCHMARK_MAIN();
