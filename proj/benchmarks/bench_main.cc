// Copyright 2026 The multisum Authors
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

#include "multisum/admm_solver.h"
#include "multisum/alternating_minimizer.h"
#include "multisum/correlation.h"
#include "multisum/synthetic.h"

namespace multisum {
namespace {

Matrix Features(int dim, int segments, std::uint64_t seed) {
  SyntheticSpec spec;
  spec.videos = 1;
  spec.segments = segments;
  spec.dim = dim;
  spec.prototypes = 0;
  spec.seed = seed;
  return GenerateSynthetic(spec).collection.video(0).data();
}

void BM_AdmmSolve(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  const Matrix x = Features(64, n, 1);
  SolverConfig config;
  config.affine_weight = 0.0;
  config.threads = threads;
  const double lambda = LambdaMax(x) / 10.0;
  int iterations = 0;
  for (auto _ : state) {
    const SubproblemResult r = AdmmSolve(x, {Vector::Ones(n)}, lambda, config);
    iterations = r.iterations;
    benchmark::DoNotOptimize(r.z.data.data());
  }
  state.counters["admm_iters"] = iterations;
}
BENCHMARK(BM_AdmmSolve)
    ->ArgsProduct({{50, 100, 200}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_SlhCorrelation(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const Matrix a = Features(64, n, 2);
  const Matrix b = Features(64, n, 3);
  for (auto _ : state) {
    const CorrelationMatrix c =
        SlhCorrelation(GaussianSimilarity(a, b, std::nullopt));
    benchmark::DoNotOptimize(c.data.data());
  }
}
BENCHMARK(BM_SlhCorrelation)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SolveCollection(benchmark::State& state) {
  SyntheticSpec spec;
  spec.videos = static_cast<int>(state.range(0));
  spec.segments = 30;
  spec.dim = 16;
  spec.prototypes = 4;
  spec.noise = 0.05;
  spec.seed = 4;
  const VideoCollection collection = GenerateSynthetic(spec).collection;
  SolverConfig config;
  config.admm_max_iter = 10000;
  config.threads = static_cast<int>(state.range(1));
  int sweeps = 0;
  for (auto _ : state) {
    const CollectionSolution s = SolveCollection(collection, config);
    sweeps = s.sweeps;
    benchmark::DoNotOptimize(s.objective_trace.data());
  }
  state.counters["sweeps"] = sweeps;
}
BENCHMARK(BM_SolveCollection)
    ->ArgsProduct({{2, 4}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace multisum

BENCHMARK_MAIN();
