// Copyright 2026 The mmtest Authors
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

// Serial vs OpenMP trial loops on the null-statistics kernel.

#include <benchmark/benchmark.h>

#include "mmtest/experiments.hpp"
#include "mmtest/mm_solver.hpp"

namespace {

using namespace mmtest;

struct Fixture {
  Distribution pi0 = uniform_distribution(19);
  FunctionClass cls;
  MmSolver solver;

  explicit Fixture(std::size_t d)
      : cls(make_class(d)), solver(pi0, cls) {}

  FunctionClass make_class(std::size_t d) {
    RandomStream stream(11, 0);
    return FunctionClass::linear(random_features(d, pi0, {}, stream), pi0);
  }
};

template <Execution kExec>
void BM_MismatchedTrials(benchmark::State& state) {
  const Fixture fx(static_cast<std::size_t>(state.range(0)));
  const std::int64_t trials = state.range(1);
  for (auto _ : state) {
    auto out = run_trials(trials, 1, kExec, [&](std::int64_t t, std::span<double> row) {
      RandomStream stream(3, trial_stream_index(Hypothesis::kNull, 0,
                                                static_cast<std::uint64_t>(t)));
      row[0] = fx.solver.solve(sample_type(fx.pi0, 40, stream).as_distribution()).value;
    });
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * trials);
}

BENCHMARK_TEMPLATE(BM_MismatchedTrials, Execution::kSerial)
    ->Args({5, 2000})
    ->Args({18, 2000})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_MismatchedTrials, Execution::kParallel)
    ->Args({5, 2000})
    ->Args({18, 2000})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
