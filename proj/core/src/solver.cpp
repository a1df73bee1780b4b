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

#include "rpdlp/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

namespace rpdlp {
namespace {

double Norm2(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

double Clamp(double v, double lo, double hi) {
  return std::min(std::max(v, lo), hi);
}

bool AllFinite(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

void SolverParams::Validate() const {
  if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
  if (!(0.0 < sufficient_decay && sufficient_decay < necessary_decay &&
        necessary_decay < 1.0)) {
    throw std::invalid_argument("restart decay constants out of order");
  }
  if (!(0.0 < long_loop_frac && long_loop_frac < 1.0)) {
    throw std::invalid_argument("long_loop_frac must lie in (0, 1)");
  }
  if (check_every < 1) throw std::invalid_argument("check_every must be >= 1");
  if (iter_limit < 0) throw std::invalid_argument("negative iter_limit");
}

std::string ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "Optimal";
    case SolveStatus::kIterLimit:
      return "IterLimit";
    case SolveStatus::kTimeLimit:
      return "TimeLimit";
  }
  return "Unknown";
}

double EstimateOpNorm(const SparseMatrix& k, int iters, std::uint64_t seed) {
  assert(iters >= 1);
  if (k.nnz() == 0) return 0.0;
  const Index n = k.cols();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> v(static_cast<size_t>(n));
  for (double& e : v) e = gauss(rng);
  double vnorm = Norm2(v);
  if (vnorm == 0.0) {
    v[0] = 1.0;
    vnorm = 1.0;
  }
  for (double& e : v) e /= vnorm;

  std::vector<double> kv(static_cast<size_t>(k.rows()));
  for (int it = 0; it < iters; ++it) {
    k.Multiply(v, kv);
    k.MultiplyTranspose(kv, v);
    const double norm = Norm2(v);
    if (norm == 0.0) return 0.0;  // v fell into the null space
    for (double& e : v) e /= norm;
  }
  k.Multiply(v, kv);
  // ||K v|| for unit v is a lower bound on the true operator norm.
  return Norm2(kv);
}

std::vector<double> PrimalStep(const LpProblem& problem,
                               std::span<const double> x,
                               std::span<const double> y, double eta,
                               double omega) {
  assert(eta > 0.0 && omega > 0.0);
  const Index m1 = problem.num_eq_rows();
  const Index n = problem.num_vars();
  std::vector<double> kty(static_cast<size_t>(n));
  problem.a.MultiplyTranspose(y.first(static_cast<size_t>(m1)), kty);
  problem.g.MultiplyTransposeAdd(1.0, y.subspan(static_cast<size_t>(m1)), kty);
  std::vector<double> out(static_cast<size_t>(n));
  const double step = eta / omega;
  for (Index j = 0; j < n; ++j) {
    out[j] = Clamp(x[j] - step * (problem.c[j] - kty[j]), problem.l[j],
                   problem.u[j]);
  }
  return out;
}

std::vector<double> DualStep(const LpProblem& problem,
                             std::span<const double> x_new,
                             std::span<const double> x_old,
                             std::span<const double> y, double eta,
                             double omega) {
  assert(eta > 0.0 && omega > 0.0);
  const Index m1 = problem.num_eq_rows();
  const Index m2 = problem.num_ineq_rows();
  const Index n = problem.num_vars();
  std::vector<double> ext(static_cast<size_t>(n));
  for (Index j = 0; j < n; ++j) ext[j] = 2.0 * x_new[j] - x_old[j];
  std::vector<double> kx(static_cast<size_t>(m1 + m2));
  problem.a.Multiply(ext, std::span(kx).first(static_cast<size_t>(m1)));
  problem.g.Multiply(ext, std::span(kx).subspan(static_cast<size_t>(m1)));
  std::vector<double> out(static_cast<size_t>(m1 + m2));
  const double step = eta * omega;
  for (Index i = 0; i < m1; ++i) {
    out[i] = y[i] + step * (problem.b[i] - kx[i]);
  }
  for (Index i = 0; i < m2; ++i) {
    out[m1 + i] = std::max(y[m1 + i] + step * (problem.h[i] - kx[m1 + i]), 0.0);
  }
  return out;
}

void RunningAverage::Add(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == x_.size() && y.size() == y_.size());
  const double w = weight_;
  for (size_t j = 0; j < x_.size(); ++j) x_[j] = (w * x_[j] + x[j]) / (w + 1.0);
  for (size_t i = 0; i < y_.size(); ++i) y_[i] = (w * y_[i] + y[i]) / (w + 1.0);
  weight_ = w + 1.0;
}

void RunningAverage::Reset() {
  std::fill(x_.begin(), x_.end(), 0.0);
  std::fill(y_.begin(), y_.end(), 0.0);
  weight_ = 0.0;
}

Iterate ChooseRestartCandidate(const LpProblem& problem, const Iterate& z_cur,
                               const Iterate& z_avg, double omega) {
  ResidualEvaluator eval(problem);
  const double kkt_cur = eval.KktOmega(z_cur.x, z_cur.y, omega);
  const double kkt_avg = eval.KktOmega(z_avg.x, z_avg.y, omega);
  return kkt_cur < kkt_avg ? z_cur : z_avg;
}

bool ShouldRestart(const SolverParams& params, Index t, Index k,
                   double kkt_candidate, double kkt_loop_start,
                   double kkt_prev_candidate) {
  assert(t >= 1);
  if (kkt_candidate <= params.sufficient_decay * kkt_loop_start) return true;
  if (kkt_candidate <= params.necessary_decay * kkt_loop_start &&
      kkt_candidate > kkt_prev_candidate) {
    return true;
  }
  return static_cast<double>(t) >=
         params.long_loop_frac * static_cast<double>(k);
}

double UpdatePrimalWeight(double omega, double dx_norm, double dy_norm) {
  assert(omega > 0.0);
  constexpr double kMinMovement = 1e-10;
  if (dx_norm <= kMinMovement || dy_norm <= kMinMovement) return omega;
  return std::exp(0.5 * std::log(dy_norm / dx_norm) + 0.5 * std::log(omega));
}

namespace {

// Everything the iteration loop touches, preallocated. The loop runs on the
// scaled problem with the stacked K; termination always re-evaluates the
// candidate in the original space.
class SolveLoop {
 public:
  SolveLoop(const LpProblem& original, const LpProblem& scaled,
            const ScalingInfo& scaling, const SolverParams& params,
            const EvalObserver& observer)
      : original_(original),
        scaled_(scaled),
        scaling_(scaling),
        params_(params),
        observer_(observer),
        m1_(scaled.num_eq_rows()),
        m_(scaled.num_rows()),
        n_(scaled.num_vars()),
        scaled_eval_(scaled_),
        original_eval_(original_),
        average_(n_, m_),
        kty_(static_cast<size_t>(n_)),
        kx_cur_(static_cast<size_t>(m_)),
        kx_new_(static_cast<size_t>(m_)),
        ext_(static_cast<size_t>(n_)),
        x_new_(static_cast<size_t>(n_)),
        y_new_(static_cast<size_t>(m_)),
        unscaled_x_(static_cast<size_t>(n_)),
        unscaled_y_(static_cast<size_t>(m_)) {
    auto [k, q] = StackK(scaled_);
    k_ = std::move(k);
    q_ = std::move(q);
  }

  SolveResult Run() {
    const double op_norm = EstimateOpNorm(k_, 100, params_.seed);
    eta_ = op_norm > 0.0 ? 0.9 / op_norm : 1.0;
    omega_ = 1.0;
    if (scaled_eval_.c_norm() > 1e-10 && scaled_eval_.q_norm() > 1e-10) {
      omega_ = scaled_eval_.c_norm() / scaled_eval_.q_norm();
    }

    cur_.x.assign(static_cast<size_t>(n_), 0.0);
    for (Index j = 0; j < n_; ++j) {
      cur_.x[j] = Clamp(0.0, scaled_.l[j], scaled_.u[j]);
    }
    cur_.y.assign(static_cast<size_t>(m_), 0.0);
    ComputeKx(cur_.x, kx_cur_);
    StartLoopAt(cur_);

    // The starting point is itself a termination candidate.
    if (EvaluateAndMaybeFinish(cur_, cur_)) return Finish();

    while (true) {
      if (iterations_ >= params_.iter_limit) {
        result_.status = SolveStatus::kIterLimit;
        break;
      }
      if (clock_.Seconds() >= params_.time_limit) {
        result_.status = SolveStatus::kTimeLimit;
        break;
      }
      Step();
      if (iterations_ % params_.check_every == 0) {
        if (Check()) return Finish();
      }
    }
    UseBestSeen();
    return Finish();
  }

 private:
  void ComputeKx(std::span<const double> x, std::span<double> out) {
    scaled_.a.Multiply(x, out.first(static_cast<size_t>(m1_)));
    scaled_.g.Multiply(x, out.subspan(static_cast<size_t>(m1_)));
  }

  void StartLoopAt(const Iterate& z) {
    loop_start_ = z;
    kkt_loop_start_ = scaled_eval_.KktOmega(z.x, z.y, omega_);
    kkt_prev_candidate_ = std::numeric_limits<double>::infinity();
    average_.Reset();
    inner_ = 0;
  }

  // One PDHG iteration; keeps kx_cur_ = K x in sync.
  void Step() {
    k_.MultiplyTranspose(cur_.y, kty_);
    const double primal_scale = eta_ / omega_;
    for (Index j = 0; j < n_; ++j) {
      x_new_[j] = Clamp(cur_.x[j] - primal_scale * (scaled_.c[j] - kty_[j]),
                        scaled_.l[j], scaled_.u[j]);
    }
    for (Index j = 0; j < n_; ++j) ext_[j] = x_new_[j];
    k_.Multiply(ext_, kx_new_);
    const double dual_scale = eta_ * omega_;
    for (Index i = 0; i < m_; ++i) {
      const double v =
          cur_.y[i] + dual_scale * (q_[i] - (2.0 * kx_new_[i] - kx_cur_[i]));
      y_new_[i] = i < m1_ ? v : std::max(v, 0.0);
    }
    if (params_.adaptive_step) AdaptStepSize();
    std::swap(cur_.x, x_new_);
    std::swap(cur_.y, y_new_);
    std::swap(kx_cur_, kx_new_);
    average_.Add(cur_.x, cur_.y);
    ++inner_;
    ++iterations_;
  }

  // One-pass variant of the PDLP step-size rule: bound eta by the local
  // curvature estimate ||dz||^2_omega / (2 dy' K dx) and drift upward slowly.
  void AdaptStepSize() {
    double dx_sq = 0.0, dy_sq = 0.0, interaction = 0.0;
    for (Index j = 0; j < n_; ++j) {
      const double d = x_new_[j] - cur_.x[j];
      dx_sq += d * d;
    }
    for (Index i = 0; i < m_; ++i) {
      const double dy = y_new_[i] - cur_.y[i];
      dy_sq += dy * dy;
      interaction += dy * (kx_new_[i] - kx_cur_[i]);
    }
    interaction = std::abs(interaction);
    if (interaction <= 0.0) return;
    const double limit =
        (omega_ * dx_sq + dy_sq / omega_) / (2.0 * interaction);
    const double k = static_cast<double>(iterations_ + 1);
    eta_ = std::min(limit * (1.0 - std::pow(k, -0.3)),
                    eta_ * (1.0 + std::pow(k, -0.6)));
  }

  bool EvaluateOriginal(const Iterate& z, ResidualReport* report) {
    for (Index j = 0; j < n_; ++j) {
      unscaled_x_[j] = z.x[j] * scaling_.col_scale[j];
    }
    for (Index i = 0; i < m_; ++i) {
      unscaled_y_[i] = z.y[i] * scaling_.row_scale[i];
    }
    *report = original_eval_.Evaluate(unscaled_x_, unscaled_y_);
    return CheckTermination(*report, params_.eps);
  }

  void RecordBest(const ResidualReport& report) {
    const double kkt1 =
        KktError(report.primal_res, report.dual_res, report.gap_abs, 1.0);
    if (!have_best_ || kkt1 < best_kkt1_) {
      have_best_ = true;
      best_kkt1_ = kkt1;
      best_.x.assign(unscaled_x_.begin(), unscaled_x_.end());
      best_.y.assign(unscaled_y_.begin(), unscaled_y_.end());
      best_report_ = report;
    }
  }

  // Evaluates both points in the original space. Returns true on
  // termination, leaving the winner in best_.
  bool EvaluateAndMaybeFinish(const Iterate& z_cur, const Iterate& z_avg) {
    ResidualReport report;
    if (EvaluateOriginal(z_cur, &report)) {
      result_.status = SolveStatus::kOptimal;
      best_.x.assign(unscaled_x_.begin(), unscaled_x_.end());
      best_.y.assign(unscaled_y_.begin(), unscaled_y_.end());
      best_report_ = report;
      have_best_ = true;
      last_report_ = report;
      return true;
    }
    RecordBest(report);
    last_report_ = report;
    if (&z_avg != &z_cur) {
      ResidualReport avg_report;
      if (EvaluateOriginal(z_avg, &avg_report)) {
        result_.status = SolveStatus::kOptimal;
        best_.x.assign(unscaled_x_.begin(), unscaled_x_.end());
        best_.y.assign(unscaled_y_.begin(), unscaled_y_.end());
        best_report_ = avg_report;
        have_best_ = true;
        last_report_ = avg_report;
        return true;
      }
      RecordBest(avg_report);
      if (KktError(avg_report.primal_res, avg_report.dual_res,
                   avg_report.gap_abs, 1.0) <
          KktError(report.primal_res, report.dual_res, report.gap_abs, 1.0)) {
        last_report_ = avg_report;
      }
    }
    return false;
  }

  // Restart-candidate evaluation + termination check + restart decision.
  bool Check() {
    if (!AllFinite(cur_.x) || !AllFinite(cur_.y)) {
      throw NumericalFailure("non-finite iterate at iteration " +
                             std::to_string(iterations_));
    }
    const Iterate z_avg{average_.x(), average_.y()};
    const double kkt_cur = scaled_eval_.KktOmega(cur_.x, cur_.y, omega_);
    const double kkt_avg = scaled_eval_.KktOmega(z_avg.x, z_avg.y, omega_);
    const bool take_current = kkt_cur < kkt_avg;
    const Iterate& candidate = take_current ? cur_ : z_avg;
    const double kkt_candidate = take_current ? kkt_cur : kkt_avg;

    if (EvaluateAndMaybeFinish(cur_, z_avg)) return true;

    EvalInfo info;
    info.iteration = iterations_;
    info.inner_iteration = inner_;
    info.restarts = result_.restarts;
    info.omega = omega_;
    info.eta = eta_;
    info.kkt_candidate = kkt_candidate;
    info.kkt_loop_start = kkt_loop_start_;
    info.candidate_is_current = take_current;
    info.original_report = last_report_;
    info.seconds = clock_.Seconds();

    if (params_.restart_enabled &&
        ShouldRestart(params_, inner_, iterations_, kkt_candidate,
                      kkt_loop_start_, kkt_prev_candidate_)) {
      info.restarted = true;
      Restart(candidate);
    } else {
      kkt_prev_candidate_ = kkt_candidate;
    }

    MaybeLog(info);
    if (observer_) observer_(info);
    return false;
  }

  void Restart(const Iterate& candidate) {
    const Index n = n_;
    double dx_sq = 0.0, dy_sq = 0.0;
    for (Index j = 0; j < n; ++j) {
      const double d = candidate.x[j] - loop_start_.x[j];
      dx_sq += d * d;
    }
    for (Index i = 0; i < m_; ++i) {
      const double d = candidate.y[i] - loop_start_.y[i];
      dy_sq += d * d;
    }
    omega_ = UpdatePrimalWeight(omega_, std::sqrt(dx_sq), std::sqrt(dy_sq));
    cur_ = candidate;
    ComputeKx(cur_.x, kx_cur_);
    StartLoopAt(cur_);
    ++result_.restarts;
  }

  void MaybeLog(const EvalInfo& info) {
    if (params_.log_every <= 0) return;
    if (info.iteration - last_log_iter_ < params_.log_every &&
        info.iteration != 0) {
      return;
    }
    last_log_iter_ = info.iteration;
    const ResidualReport& r = info.original_report;
    std::printf(
        "iter=%lld time=%.3f rel_primal=%.3e rel_dual=%.3e rel_gap=%.3e "
        "omega=%.3e restarts=%lld\n",
        static_cast<long long>(info.iteration), info.seconds, r.rel_primal,
        r.rel_dual, r.rel_gap, info.omega,
        static_cast<long long>(info.restarts));
  }

  void UseBestSeen() {
    // Limits hit before the first evaluation: fall back to the current point.
    if (!have_best_) {
      ResidualReport report;
      EvaluateOriginal(cur_, &report);
      RecordBest(report);
    }
  }

  SolveResult Finish() {
    result_.x = std::move(best_.x);
    result_.y = std::move(best_.y);
    result_.report = best_report_;
    result_.lambda = DeriveLambda(original_, result_.y);
    result_.iterations = iterations_;
    result_.solve_seconds = clock_.Seconds();
    return std::move(result_);
  }

  const LpProblem& original_;
  const LpProblem& scaled_;
  const ScalingInfo& scaling_;
  const SolverParams& params_;
  const EvalObserver& observer_;
  const Index m1_, m_, n_;

  SparseMatrix k_;
  std::vector<double> q_;
  ResidualEvaluator scaled_eval_;
  ResidualEvaluator original_eval_;

  double eta_ = 1.0;
  double omega_ = 1.0;
  Iterate cur_;
  Iterate loop_start_;
  RunningAverage average_;
  double kkt_loop_start_ = 0.0;
  double kkt_prev_candidate_ = std::numeric_limits<double>::infinity();
  Index inner_ = 0;
  Index iterations_ = 0;

  std::vector<double> kty_, kx_cur_, kx_new_, ext_, x_new_, y_new_;
  std::vector<double> unscaled_x_, unscaled_y_;

  Iterate best_;
  ResidualReport best_report_;
  ResidualReport last_report_;
  double best_kkt1_ = 0.0;
  bool have_best_ = false;
  Index last_log_iter_ = -1;

  SolveResult result_;
  Stopwatch clock_;
};

}  // namespace

SolveResult Solve(const LpProblem& problem, const SolverParams& params,
                  const EvalObserver& observer) {
  problem.Validate();
  params.Validate();

  Stopwatch scaling_clock;
  ScalingInfo scaling =
      ScalingInfo::Identity(problem.num_rows(), problem.num_vars());
  LpProblem scaled;
  const LpProblem* work = &problem;
  if (params.scaling.enabled) {
    auto [k, q] = StackK(problem);
    scaling = ComputeScaling(k, params.scaling);
    scaled = ApplyScaling(problem, scaling);
    work = &scaled;
  }
  const double scaling_seconds = scaling_clock.Seconds();

  SolveLoop loop(problem, *work, scaling, params, observer);
  SolveResult result = loop.Run();
  result.scaling_seconds = scaling_seconds;
  return result;
}

}  // namespace rpdlp
