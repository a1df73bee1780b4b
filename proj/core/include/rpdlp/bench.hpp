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

#ifndef RPDLP_BENCH_HPP_
#define RPDLP_BENCH_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rpdlp/solver.hpp"

namespace rpdlp {

struct BenchRecord {
  std::string instance;
  std::string status;        // Optimal | IterLimit | TimeLimit | Error
  double solve_seconds = 0;  // iteration loop only; parse/scaling excluded
  double parse_seconds = 0;
  double scaling_seconds = 0;
  Index iterations = 0;
  Index restarts = 0;
  ResidualReport residuals;
  std::string message;  // set when status == Error

  bool solved() const { return status == "Optimal"; }
};

struct SuiteSummary {
  std::vector<BenchRecord> records;
  double sgm10 = 0.0;
  int solved_count = 0;
  double tolerance = 0.0;
  double delta = 10.0;
  double time_limit = 3600.0;
};

// Shifted geometric mean (prod (t_i + delta))^(1/n) - delta, computed in
// log space. Unsolved entries contribute time_limit instead of their time.
// Throws std::invalid_argument on an empty list.
double Sgm(const std::vector<double>& times, double delta, double time_limit,
           const std::vector<bool>& solved_flags);

// Solves every *.mps / *.mps.gz file under `dir` (sorted by name).
// Per-instance failures become Error records and do not abort the suite.
SuiteSummary RunSuite(const std::string& dir, const SolverParams& params,
                      double delta = 10.0);

// Deterministic key order; `redact_timing` zeroes wall-clock fields so two
// runs with the same seeds compare byte-identical.
nlohmann::ordered_json SummaryToJson(const SuiteSummary& summary,
                                     bool redact_timing = false);
void WriteSummaryJson(const SuiteSummary& summary, const std::string& path,
                      bool redact_timing = false);
void WriteSummaryCsv(const SuiteSummary& summary, const std::string& path);

// Solution file schema for the solve subcommand. Objective values are
// negated back when the problem was a maximization.
nlohmann::ordered_json SolutionToJson(const SolveResult& result,
                                      bool negated_objective);

}  // namespace rpdlp

#endif  // RPDLP_BENCH_HPP_
