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

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "rpdlp/instance_gen.hpp"
#include "rpdlp/kkt.hpp"

namespace rpdlp {
namespace {

// min x s.t. x >= 1, x >= 0. Optimum (x*, y*) = (1, 1).
LpProblem TinyLp() {
  LpProblem p;
  p.a = SparseMatrix::FromTriplets(0, 1, {});
  p.g = SparseMatrix::FromTriplets(1, 1, {{0, 0, 1.0}});
  p.c = {1.0};
  p.h = {1.0};
  p.l = {0.0};
  p.u = {kInf};
  return p;
}

TEST_CASE("derive_lambda projects by bound class") {
  LpProblem p;
  p.a = SparseMatrix::FromTriplets(0, 4, {});
  p.g = SparseMatrix::FromTriplets(0, 4, {});
  p.c = {5.0, -3.0, 3.0, -7.0};
  p.l = {-kInf, 0.0, 0.0, 0.0};
  p.u = {kInf, kInf, kInf, 1.0};
  const std::vector<double> lambda = DeriveLambda(p, std::vector<double>{});
  CHECK(lambda[0] == 0.0);   // free -> {0}
  CHECK(lambda[1] == 0.0);   // lower-only, negative reduced cost clipped
  CHECK(lambda[2] == 3.0);   // lower-only, positive kept
  CHECK(lambda[3] == -7.0);  // boxed -> identity
}

TEST_CASE("derive_lambda upper-only clips from above") {
  LpProblem p;
  p.a = SparseMatrix::FromTriplets(0, 2, {});
  p.g = SparseMatrix::FromTriplets(0, 2, {});
  p.c = {4.0, -4.0};
  p.l = {-kInf, -kInf};
  p.u = {2.0, 2.0};
  const std::vector<double> lambda = DeriveLambda(p, std::vector<double>{});
  CHECK(lambda[0] == 0.0);
  CHECK(lambda[1] == -4.0);
}

TEST_CASE("residuals vanish at the optimum of the tiny LP") {
  const LpProblem p = TinyLp();
  const ResidualReport r = ComputeResiduals(p, {{1.0}, {1.0}});
  CHECK(r.primal_res == 0.0);
  CHECK(r.dual_res == 0.0);
  CHECK(r.gap_abs == 0.0);
  CHECK(r.primal_obj == 1.0);
  CHECK(r.dual_obj == 1.0);
}

TEST_CASE("a single violated inequality contributes its own norm") {
  const LpProblem p = TinyLp();
  // x = 0.7 violates x >= 1 by 0.3.
  const ResidualReport r = ComputeResiduals(p, {{0.7}, {1.0}});
  CHECK(r.primal_res == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("residual report matches the dense reference on random LPs") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  for (int trial = 0; trial < 5; ++trial) {
    const LpProblem p = GenRandomLp(5, 5, 0.7, 100 + trial);
    Iterate z;
    z.x.resize(5);
    z.y.resize(5);
    for (double& v : z.x) v = val(rng);
    for (double& v : z.y) v = std::abs(val(rng));
    const ResidualReport r = ComputeResiduals(p, z);
    const oracle::DenseResiduals d = oracle::ComputeDenseResiduals(p, z.x, z.y);
    CHECK(r.primal_res == doctest::Approx(d.primal_res).epsilon(1e-12));
    CHECK(r.dual_res == doctest::Approx(d.dual_res).epsilon(1e-12));
    CHECK(r.gap_abs == doctest::Approx(d.gap_abs).epsilon(1e-12));
    CHECK(r.rel_primal == doctest::Approx(d.rel_primal).epsilon(1e-12));
    CHECK(r.rel_dual == doctest::Approx(d.rel_dual).epsilon(1e-12));
    CHECK(r.rel_gap == doctest::Approx(d.rel_gap).epsilon(1e-12));
  }
}

TEST_CASE("relative normalizations use the stated denominators") {
  const LpProblem p = TinyLp();
  const ResidualReport r = ComputeResiduals(p, {{0.5}, {0.25}});
  CHECK(r.rel_primal == doctest::Approx(r.primal_res / 2.0));  // 1 + ||q||
  CHECK(r.rel_dual == doctest::Approx(r.dual_res / 2.0));      // 1 + ||c||
  CHECK(r.rel_gap ==
        doctest::Approx(r.gap_abs /
                        (1.0 + std::abs(r.dual_obj) + std::abs(r.primal_obj))));
}

TEST_CASE("check_termination needs all three bullets") {
  ResidualReport r;
  CHECK(CheckTermination(r, 1e-12));
  r.rel_gap = 2e-4;
  CHECK_FALSE(CheckTermination(r, 1e-4));
  r.rel_primal = 9e-5;
  r.rel_dual = 9e-5;
  r.rel_gap = 9e-5;
  CHECK(CheckTermination(r, 1e-4));
  // Monotone in eps.
  CHECK(CheckTermination(r, 1e-3));
  CHECK_FALSE(CheckTermination(r, 1e-5));
}

TEST_CASE("kkt error hand values") {
  CHECK(KktError(3.0, 4.0, 0.0, 1.0) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(KktError(3.0, 4.0, 0.0, 2.0) ==
        doctest::Approx(std::sqrt(40.0)).epsilon(1e-15));
  CHECK(KktError(0.0, 0.0, 0.0, 7.0) == 0.0);
}

TEST_CASE("kkt_omega on a problem engineered to (3, 4, 0)") {
  // A = [0], b = [3] gives primal residual 3; free variable with c = 4 and
  // empty column gives dual residual 4; x = 0, y = 0 gives zero gap.
  LpProblem p;
  p.a = SparseMatrix::FromTriplets(1, 1, {});
  p.g = SparseMatrix::FromTriplets(0, 1, {});
  p.c = {4.0};
  p.b = {3.0};
  p.l = {-kInf};
  p.u = {kInf};
  const Iterate z{{0.0}, {0.0}};
  CHECK(KktOmega(p, z, 1.0) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(KktOmega(p, z, 2.0) ==
        doctest::Approx(std::sqrt(40.0)).epsilon(1e-15));
}

TEST_CASE("kkt_omega vanishes at an optimum for any omega") {
  const LpProblem p = TinyLp();
  const Iterate z{{1.0}, {1.0}};
  for (double omega : {0.1, 1.0, 3.0, 10.0}) {
    CHECK(KktOmega(p, z, omega) == 0.0);
  }
}

TEST_CASE("kkt formula against a scalar reference on random tuples") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> res(0.0, 50.0);
  std::uniform_real_distribution<double> om(0.05, 20.0);
  for (int i = 0; i < 100; ++i) {
    const double pr = res(rng), du = res(rng), gap = res(rng);
    const double w = om(rng);
    const double ref =
        std::sqrt(w * w * pr * pr + du * du / (w * w) + gap * gap);
    CHECK(KktError(pr, du, gap, w) == doctest::Approx(ref).epsilon(1e-12));
    // omega = 1 collapses to the plain root-sum-of-squares.
    CHECK(KktError(pr, du, gap, 1.0) ==
          doctest::Approx(std::sqrt(pr * pr + du * du + gap * gap))
              .epsilon(1e-15));
  }
}

TEST_CASE("derived lambda always lies in Lambda") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> val(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    LpProblem p = GenRandomLp(4, 6, 0.5, 500 + trial);
    // Mix in all four bound classes.
    p.l[0] = -kInf;
    p.u[0] = kInf;
    p.l[1] = -kInf;
    p.u[1] = 2.0;
    p.l[2] = 0.0;
    p.u[2] = kInf;
    std::vector<double> y(4);
    for (double& v : y) v = val(rng);
    const std::vector<double> lambda = DeriveLambda(p, y);
    const auto tags = ClassifyBounds(p);
    for (size_t j = 0; j < lambda.size(); ++j) {
      switch (tags[j]) {
        case BoundClass::kFree:
          CHECK(lambda[j] == 0.0);
          break;
        case BoundClass::kUpperOnly:
          CHECK(lambda[j] <= 0.0);
          break;
        case BoundClass::kLowerOnly:
          CHECK(lambda[j] >= 0.0);
          break;
        case BoundClass::kBoxed:
          break;
      }
    }
  }
}

}  // namespace
}  // namespace rpdlp
