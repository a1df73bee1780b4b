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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rpdlp/bench.hpp"
#include "rpdlp/instance_gen.hpp"
#include "rpdlp/mps.hpp"
#include "rpdlp/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLimit = 2;
constexpr int kExitInputError = 3;
constexpr int kExitNumericalFailure = 4;

struct SolveArgs {
  std::string file;
  std::string out;
  rpdlp::SolverParams params;
  bool no_scaling = false;
  bool no_restarts = false;
  bool strict_mps = false;
};

int RunSolve(const SolveArgs& args) {
  rpdlp::MpsOptions mps_options;
  mps_options.fixed_format = args.strict_mps;
  rpdlp::LpProblem problem;
  try {
    problem = rpdlp::ParseMpsFile(args.file, mps_options);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  rpdlp::SolverParams params = args.params;
  params.scaling.enabled = !args.no_scaling;
  params.restart_enabled = !args.no_restarts;

  rpdlp::SolveResult result;
  try {
    result = rpdlp::Solve(problem, params);
  } catch (const rpdlp::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumericalFailure;
  }

  const double sign = problem.negated_objective ? -1.0 : 1.0;
  std::printf("status=%s objective=%.12e iterations=%lld restarts=%lld "
              "solve_seconds=%.3f\n",
              rpdlp::ToString(result.status).c_str(),
              sign * result.report.primal_obj,
              static_cast<long long>(result.iterations),
              static_cast<long long>(result.restarts), result.solve_seconds);
  if (!args.out.empty()) {
    std::ofstream out(args.out);
    if (!out) {
      std::cerr << "error: cannot write " << args.out << "\n";
      return kExitInputError;
    }
    out << rpdlp::SolutionToJson(result, problem.negated_objective).dump(2)
        << "\n";
  }
  return result.status == rpdlp::SolveStatus::kOptimal ? kExitOk : kExitLimit;
}

struct BenchArgs {
  std::string dir;
  std::string report;
  std::string csv;
  double delta = 10.0;
  bool redact_timing = false;
  bool no_scaling = false;
  rpdlp::SolverParams params;
};

int RunBench(const BenchArgs& args) {
  rpdlp::SolverParams params = args.params;
  params.scaling.enabled = !args.no_scaling;
  rpdlp::SuiteSummary summary;
  try {
    summary = rpdlp::RunSuite(args.dir, params, args.delta);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  for (const rpdlp::BenchRecord& r : summary.records) {
    std::printf("instance=%s status=%s solve_seconds=%.3f iterations=%lld\n",
                r.instance.c_str(), r.status.c_str(), r.solve_seconds,
                static_cast<long long>(r.iterations));
  }
  std::printf("solved=%d/%zu sgm10=%.4f\n", summary.solved_count,
              summary.records.size(), summary.sgm10);
  try {
    if (!args.report.empty()) {
      rpdlp::WriteSummaryJson(summary, args.report, args.redact_timing);
    }
    if (!args.csv.empty()) rpdlp::WriteSummaryCsv(summary, args.csv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restarted primal-dual hybrid gradient LP solver"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Solve a single MPS file");
  solve->add_option("file", solve_args.file, "MPS file (.mps or .mps.gz)")
      ->required();
  solve->add_option("--eps", solve_args.params.eps, "Relative tolerance");
  solve->add_option("--time-limit", solve_args.params.time_limit, "Seconds");
  solve->add_option("--iter-limit", solve_args.params.iter_limit,
                    "Iteration limit");
  solve->add_option("--log-every", solve_args.params.log_every,
                    "Progress log cadence in iterations (0 = off)");
  solve->add_option("--check-every", solve_args.params.check_every,
                    "Termination/restart check cadence");
  solve->add_option("--seed", solve_args.params.seed, "RNG seed");
  solve->add_option("--ruiz-iters", solve_args.params.scaling.ruiz_iters,
                    "Ruiz equilibration sweeps");
  solve->add_option("--pc-alpha", solve_args.params.scaling.pc_alpha,
                    "Pock-Chambolle alpha");
  solve->add_option("--out", solve_args.out, "Write solution JSON here");
  solve->add_flag("--no-scaling", solve_args.no_scaling, "Disable scaling");
  solve->add_flag("--no-restarts", solve_args.no_restarts,
                  "Disable the restart scheme");
  solve->add_flag("--adaptive-step", solve_args.params.adaptive_step,
                  "Experimental adaptive step size");
  solve->add_flag("--strict-mps", solve_args.strict_mps,
                  "Honor fixed-format MPS column positions");

  BenchArgs bench_args;
  CLI::App* bench =
      app.add_subcommand("bench", "Solve a directory of MPS files");
  bench->add_option("dir", bench_args.dir, "Directory of .mps/.mps.gz files")
      ->required();
  bench->add_option("--eps", bench_args.params.eps, "Relative tolerance");
  bench->add_option("--time-limit", bench_args.params.time_limit, "Seconds");
  bench->add_option("--iter-limit", bench_args.params.iter_limit,
                    "Iteration limit");
  bench->add_option("--seed", bench_args.params.seed, "RNG seed");
  bench->add_option("--delta", bench_args.delta, "SGM shift (default 10)");
  bench->add_option("--report", bench_args.report, "JSON report path");
  bench->add_option("--csv", bench_args.csv, "CSV report path");
  bench->add_flag("--no-scaling", bench_args.no_scaling, "Disable scaling");
  bench->add_flag("--redact-timing", bench_args.redact_timing,
                  "Zero wall-clock fields in the JSON report so runs with "
                  "identical seeds compare byte-identical");

  CLI::App* gen = app.add_subcommand("gen", "Generate synthetic instances");
  gen->require_subcommand(1);

  rpdlp::PagerankConfig pr_cfg;
  std::string pr_out;
  CLI::App* gen_pr = gen->add_subcommand("pagerank", "PageRank feasibility LP");
  gen_pr->add_option("--nodes", pr_cfg.n_nodes, "Node count")->required();
  gen_pr->add_option("--damping", pr_cfg.damping, "Damping factor");
  gen_pr->add_option("--attachment", pr_cfg.attachment,
                     "Out-edges per node in the random digraph");
  gen_pr->add_option("--seed", pr_cfg.seed, "RNG seed");
  gen_pr->add_option("--out", pr_out, "Output MPS path")->required();

  rpdlp::Index rand_rows = 0, rand_cols = 0;
  double rand_density = 0.5;
  std::uint64_t rand_seed = 0;
  std::string rand_out;
  CLI::App* gen_rand =
      gen->add_subcommand("random", "Random bounded-feasible LP");
  gen_rand->add_option("--rows", rand_rows, "Inequality row count")
      ->required();
  gen_rand->add_option("--cols", rand_cols, "Variable count")->required();
  gen_rand->add_option("--density", rand_density, "Nonzero density");
  gen_rand->add_option("--seed", rand_seed, "RNG seed");
  gen_rand->add_option("--out", rand_out, "Output MPS path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return RunSolve(solve_args);
    if (bench->parsed()) return RunBench(bench_args);
    if (gen_pr->parsed()) {
      rpdlp::WriteMpsFile(rpdlp::GenPagerank(pr_cfg), pr_out);
      return kExitOk;
    }
    if (gen_rand->parsed()) {
      rpdlp::WriteMpsFile(
          rpdlp::GenRandomLp(rand_rows, rand_cols, rand_density, rand_seed),
          rand_out);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
