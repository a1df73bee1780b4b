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

#include "rpdlp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "rpdlp/mps.hpp"

namespace rpdlp {
namespace {

namespace fs = std::filesystem;

bool IsMpsPath(const fs::path& p) {
  const std::string name = p.filename().string();
  auto ends_with = [&name](const std::string& suffix) {
    return name.size() > suffix.size() &&
           name.compare(name.size() - suffix.size(), suffix.size(), suffix) ==
               0;
  };
  return ends_with(".mps") || ends_with(".mps.gz");
}

nlohmann::ordered_json ResidualsToJson(const ResidualReport& r) {
  return {{"primal_res", r.primal_res}, {"dual_res", r.dual_res},
          {"gap_abs", r.gap_abs},       {"primal_obj", r.primal_obj},
          {"dual_obj", r.dual_obj},     {"rel_primal", r.rel_primal},
          {"rel_dual", r.rel_dual},     {"rel_gap", r.rel_gap}};
}

}  // namespace

double Sgm(const std::vector<double>& times, double delta, double time_limit,
           const std::vector<bool>& solved_flags) {
  if (times.empty()) throw std::invalid_argument("SGM of an empty list");
  if (times.size() != solved_flags.size()) {
    throw std::invalid_argument("times/solved_flags length mismatch");
  }
  if (delta < 0.0) throw std::invalid_argument("negative SGM shift");
  double log_sum = 0.0;
  for (size_t i = 0; i < times.size(); ++i) {
    const double t = solved_flags[i] ? times[i] : time_limit;
    log_sum += std::log(t + delta);
  }
  return std::exp(log_sum / static_cast<double>(times.size())) - delta;
}

SuiteSummary RunSuite(const std::string& dir, const SolverParams& params,
                      double delta) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && IsMpsPath(entry.path())) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  SuiteSummary summary;
  summary.tolerance = params.eps;
  summary.delta = delta;
  summary.time_limit = params.time_limit;
  for (const fs::path& file : files) {
    BenchRecord record;
    record.instance = file.filename().string();
    try {
      const auto parse_start = std::chrono::steady_clock::now();
      const LpProblem problem = ParseMpsFile(file.string());
      record.parse_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                        parse_start)
              .count();
      const SolveResult result = Solve(problem, params);
      record.status = ToString(result.status);
      record.solve_seconds = result.solve_seconds;
      record.scaling_seconds = result.scaling_seconds;
      record.iterations = result.iterations;
      record.restarts = result.restarts;
      record.residuals = result.report;
    } catch (const std::exception& e) {
      record.status = "Error";
      record.message = e.what();
    }
    summary.records.push_back(std::move(record));
  }

  if (!summary.records.empty()) {
    std::vector<double> times;
    std::vector<bool> solved;
    for (const BenchRecord& r : summary.records) {
      times.push_back(r.solve_seconds);
      solved.push_back(r.solved());
      if (r.solved()) ++summary.solved_count;
    }
    summary.sgm10 = Sgm(times, delta, params.time_limit, solved);
  }
  return summary;
}

nlohmann::ordered_json SummaryToJson(const SuiteSummary& summary,
                                     bool redact_timing) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const BenchRecord& r : summary.records) {
    nlohmann::ordered_json rec = {
        {"instance", r.instance},
        {"status", r.status},
        {"solve_seconds", redact_timing ? 0.0 : r.solve_seconds},
        {"parse_seconds", redact_timing ? 0.0 : r.parse_seconds},
        {"scaling_seconds", redact_timing ? 0.0 : r.scaling_seconds},
        {"iterations", r.iterations},
        {"restarts", r.restarts},
        {"residuals", ResidualsToJson(r.residuals)},
    };
    if (!r.message.empty()) rec["message"] = r.message;
    records.push_back(std::move(rec));
  }
  return {{"tolerance", summary.tolerance},
          {"delta", summary.delta},
          {"time_limit", summary.time_limit},
          {"solved_count", summary.solved_count},
          {"sgm10", redact_timing ? 0.0 : summary.sgm10},
          {"records", std::move(records)}};
}

void WriteSummaryJson(const SuiteSummary& summary, const std::string& path,
                      bool redact_timing) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << SummaryToJson(summary, redact_timing).dump(2) << "\n";
}

void WriteSummaryCsv(const SuiteSummary& summary, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "instance,status,solve_seconds,parse_seconds,scaling_seconds,"
         "iterations,restarts,rel_primal,rel_dual,rel_gap,primal_obj\n";
  char buf[256];
  for (const BenchRecord& r : summary.records) {
    std::snprintf(buf, sizeof(buf),
                  "%s,%s,%.6f,%.6f,%.6f,%lld,%lld,%.6e,%.6e,%.6e,%.12e\n",
                  r.instance.c_str(), r.status.c_str(), r.solve_seconds,
                  r.parse_seconds, r.scaling_seconds,
                  static_cast<long long>(r.iterations),
                  static_cast<long long>(r.restarts), r.residuals.rel_primal,
                  r.residuals.rel_dual, r.residuals.rel_gap,
                  r.residuals.primal_obj);
    out << buf;
  }
}

nlohmann::ordered_json SolutionToJson(const SolveResult& result,
                                      bool negated_objective) {
  const double sign = negated_objective ? -1.0 : 1.0;
  return {{"status", ToString(result.status)},
          {"primal_objective", sign * result.report.primal_obj},
          {"dual_objective", sign * result.report.dual_obj},
          {"iterations", result.iterations},
          {"restarts", result.restarts},
          {"x", result.x},
          {"y", result.y},
          {"lambda", result.lambda},
          {"residuals", ResidualsToJson(result.report)}};
}

}  // namespace rpdlp
