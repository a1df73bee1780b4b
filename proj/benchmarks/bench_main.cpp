// Copyright 2026 The rpdlp authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "rpdlp/instance_gen.hpp"
#include "rpdlp/kkt.hpp"
#include "rpdlp/scaling.hpp"
#include "rpdlp/solver.hpp"

namespace rpdlp {
namespace {

void BM_MatVec(benchmark::State& state) {
  const Index n = state.range(0);
  const LpProblem p = GenPagerank({n, 0.85, 3, 1});
  const auto [k, q] = StackK(p);
  std::vector<double> x(k.cols(), 1.0 / double(n));
  std::vector<double> out(k.rows());
  for (auto _ : state) {
    k.Multiply(x, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * k.nnz());
}
BENCHMARK(BM_MatVec)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_MatVecTranspose(benchmark::State& state) {
  const Index n = state.range(0);
  const LpProblem p = GenPagerank({n, 0.85, 3, 1});
  const auto [k, q] = StackK(p);
  std::vector<double> y(k.rows(), 1.0);
  std::vector<double> out(k.cols());
  for (auto _ : state) {
    k.MultiplyTranspose(y, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * k.nnz());
}
BENCHMARK(BM_MatVecTranspose)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_Equilibrate(benchmark::State& state) {
  const Index n = state.range(0);
  const LpProblem p = GenPagerank({n, 0.85, 3, 1});
  const auto [k, q] = StackK(p);
  for (auto _ : state) {
    ScalingInfo info = ComputeScaling(k, ScalingConfig{});
    benchmark::DoNotOptimize(info.row_scale.data());
  }
}
BENCHMARK(BM_Equilibrate)->Arg(1000)->Arg(10000);

void BM_ResidualEvaluation(benchmark::State& state) {
  const Index n = state.range(0);
  const LpProblem p = GenPagerank({n, 0.85, 3, 1});
  ResidualEvaluator eval(p);
  std::vector<double> x(n, 1.0 / double(n));
  std::vector<double> y(n + 1, 0.0);
  for (auto _ : state) {
    ResidualReport r = eval.Evaluate(x, y);
    benchmark::DoNotOptimize(r.primal_res);
  }
}
BENCHMARK(BM_ResidualEvaluation)->Arg(1000)->Arg(10000);

void BM_SolvePagerank(benchmark::State& state) {
  const Index n = state.range(0);
  const LpProblem p = GenPagerank({n, 0.85, 3, 1});
  SolverParams params;
  params.eps = 1e-6;
  for (auto _ : state) {
    SolveResult r = Solve(p, params);
    benchmark::DoNotOptimize(r.iterations);
  }
}
BENCHMARK(BM_SolvePagerank)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_SolveRandomLp(benchmark::State& state) {
  const Index m = state.range(0);
  const LpProblem p = GenRandomLp(m, m, 0.2, 3);
  SolverParams params;
  params.eps = 1e-6;
  for (auto _ : state) {
    SolveResult r = Solve(p, params);
    benchmark::DoNotOptimize(r.iterations);
  }
}
BENCHMARK(BM_SolveRandomLp)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace rpdlp

BENCHMARK_MAIN();
