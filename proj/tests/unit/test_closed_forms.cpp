/*
 * Copyright 2026 The torsionlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>

#include "closed_forms.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "specfun.hpp"
#include "zeta_reg.hpp"

using namespace torsionlab;
using namespace torsionlab::closed;
using specfun::kPi;

namespace {

const double kLog2 = std::log(2.0);

// Direct sums with an integral tail; s >= 2 in all uses.
double direct_t0(double s, double k) {
  double sum = 0.0;
  const long N = 200000;
  for (long m = N - 1; m >= 0; --m) sum += std::pow(2.0 * k * (m + 0.5 * (1.0 + k)), -s);
  const double x = 2.0 * k * (N + 0.5 * (1.0 + k));
  return sum + std::pow(x, 1.0 - s) / ((s - 1.0) * 2.0 * k) + 0.5 * std::pow(x, -s);
}

double direct_z(double s, double k) {
  double sum = 0.0;
  const long N = 200000;
  for (long m = N - 1; m >= 0; --m) sum += std::pow(k * (2.0 * m + 1.0) + k * k + 0.25, -s);
  const double x = k * (2.0 * N + 1.0) + k * k + 0.25;
  return sum + std::pow(x, 1.0 - s) / ((s - 1.0) * 2.0 * k) + 0.5 * std::pow(x, -s);
}

}  // namespace

TEST_CASE("h params") {
  const HParams p = h_params(1.0 / (2 * kPi));
  CHECK(std::abs(p.k - 1.0) < 1e-15);
  CHECK(std::abs(p.b - 1.25) < 1e-15);
  CHECK(std::abs(h_params(0.25 / (2 * kPi) * 2).b - 1.0) < 1e-15);  // k = 1/2
  CHECK_THROWS_AS(h_params(0.0), DomainError);
}

TEST_CASE("t0 and z special values") {
  for (double k : {0.5, 1.0, 2.0, 7.0}) {
    CHECK(std::abs(t0(0.0, k) + 0.5 * k) < 1e-12);
    CHECK(std::abs(z_fn(0.0, k) - z_at0(k)) < 1e-12);
    CHECK(std::abs(z_at0(k) + 0.5 * k + 0.125 / k) < 1e-15);
    const auto fd0 = zeta::deriv_at0_fd([k](double s) { return t0(s, k); });
    CHECK(std::abs(fd0.value - t0_ds0(k)) < 1e-8);
    const auto fdz = zeta::deriv_at0_fd([k](double s) { return z_fn(s, k); });
    CHECK(std::abs(fdz.value - z_ds0(k)) < 1e-8);
  }
  CHECK(std::abs(z_at0(1.0) + 0.625) < 1e-15);
  CHECK(std::abs(z_residue1(2.0) - 0.25) < 1e-15);
  CHECK_THROWS_AS(t0(1.0, 1.0), PoleError);
  CHECK_THROWS_AS(z_fn(1.0, 1.0), PoleError);
  CHECK_THROWS_AS(t0(2.0, 0.0), DomainError);
}

TEST_CASE("t0 and z against direct sums") {
  for (double k : {0.5, 1.0, 2.0, 7.0}) {
    for (double s : {2.0, 2.5, 3.0}) {
      CAPTURE(k);
      CAPTURE(s);
      CHECK(std::abs(t0(s, k) - direct_t0(s, k)) < 1e-10);
      CHECK(std::abs(z_fn(s, k) - direct_z(s, k)) < 1e-10);
    }
  }
}

TEST_CASE("z near 1") {
  const double k = 1.3;
  for (double e : {1e-4, -1e-4}) {
    const double lhs = z_fn(1.0 + e, k) - z_residue1(k) / e;
    CHECK(std::abs(lhs - z_finite1(k)) < 1e-3);
  }
  CHECK(std::abs(z_finite1(k) - z_finite1_alternative(k)) > 1e-3);
}

TEST_CASE("t1 expansion") {
  // mpmath: sum_m (a_m + 1/2)^{-4} + (a_m - 1/2)^{-4}
  const double k_vals[] = {0.5, 1.0, 2.0, 7.0};
  const double oracle[] = {18.9829111504935922, 1.49114068711085650, 0.143667547175669417, 0.00295468525370968362};
  for (int i = 0; i < 4; ++i) {
    CAPTURE(k_vals[i]);
    CHECK(std::abs(t1_series(2.0, k_vals[i], 30).value - oracle[i]) < 1e-8);
    CHECK(std::abs(t1(2.0, k_vals[i]) - oracle[i]) < 1e-8 * std::max(1.0, oracle[i]));
  }
  for (double k : {0.5, 1.0, 2.0, 7.0}) {
    CHECK(std::abs(t1(0.0, k) + k) < 1e-10);
    CHECK(std::abs(t1_at0(k) + k) < 1e-12);
    const auto fd = zeta::deriv_at0_fd([k](double s) { return t1(s, k); });
    CHECK(std::abs(fd.value - t1_ds0(k)) < 1e-7);
    CHECK(std::abs(t1_ds0_series(k) - t1_ds0(k)) < 1e-12);
  }
  // k = 1: 1/2 - log pi (the alternative form gives -log 2 / 4 + 1/2 - log pi)
  CHECK(std::abs(t1_ds0(1.0) - (0.5 - std::log(kPi))) < 1e-14);
  CHECK(std::abs(t1_ds0_alternative(1.0) - (-0.25 * kLog2 + 0.5 - std::log(kPi))) < 1e-14);
  CHECK(std::abs(t1_ds0(2.0) - t1_ds0_alternative(2.0)) < 1e-14);
  CHECK_THROWS_AS(t1_series(2.0, 1.0, 0), DomainError);
  CHECK_THROWS_AS(t1(1.0, 1.0), PoleError);
}

TEST_CASE("t_H") {
  for (double h : {-2.0, -0.1, 0.1, 1.0 / (2 * kPi), 0.5}) {
    CHECK(std::abs(tH_at0(h) - 2.0) < 1e-12);
    CHECK(std::abs(t_H(0.0, h) - 2.0) < 1e-10);
    CHECK(std::abs(tH_ds0(h) - tH_ds0_reassembled(h)) < 1e-12);
    CHECK(tH_ds0(h) == tH_ds0(-h));
    CHECK(torsion_H_local(h) == tH_ds0(h));
  }
  const double h1 = 1.0 / (2 * kPi);
  CHECK(std::abs(tH_ds0(h1) - (-2.25 * kLog2 + 0.5 + 0.25 * kLog2)) < 1e-13);  // -2 log 2 + 1/2
  CHECK(std::abs(tH_ds0_alternative(h1) - (-2.25 * kLog2 + 0.5)) < 1e-13);
  CHECK(std::abs(alternative_expression(h1) - (-2.25 * kLog2 + 0.5)) < 1e-13);
  // derivative of the assembled function
  const auto fd = zeta::deriv_at0_fd([](double s) { return t_H(s, 0.3); });
  CHECK(std::abs(fd.value - tH_ds0(0.3)) < 1e-7);
  // t_H(3, h) is finite for small h and matches a direct sum
  CHECK(std::isfinite(t_H(3.0, 0.01)));
  const double k = 0.7;
  double direct = std::pow(k, -6.0) + std::pow(1 + k, -6.0);
  for (long m = 0; m < 400000; ++m) {
    const double a = std::sqrt(k * (2.0 * m + 1.0) + k * k + 0.25);
    direct += std::pow(a + 0.5, -6.0) + std::pow(a - 0.5, -6.0) - 2.0 * std::pow(2.0 * k * (m + 0.5 * (1 + k)), -3.0);
  }
  CHECK(std::abs(t_H(3.0, k / (2 * kPi)) - direct) < 1e-10);
}

TEST_CASE("H residue at 1") {
  // residue of the graded zeta: t0 -> 1/(2k), t1 -> 1/k, so -2/(2k) + 1/k = 0
  CHECK(std::abs(tH_residue1(0.3)) < 1e-14);
}

TEST_CASE("circle") {
  CHECK(std::abs(torsion_circle(1.0 / 6.0)) < 1e-14);
  CHECK(std::abs(torsion_circle(0.5) - 2.0 * kLog2) < 1e-14);
  for (double a : {0.1, 0.2, 0.3, 0.4}) {
    CHECK(std::abs(torsion_circle(a) - torsion_circle(1.0 - a)) < 1e-12);
    CHECK(std::abs(t_circle(0.0, a)) < 1e-12);
  }
  CHECK_THROWS_AS(torsion_circle(0.0), DomainError);
  CHECK_THROWS_AS(t_circle(0.5, 0.3), PoleError);
}

TEST_CASE("R local") {
  CHECK(std::abs(torsion_R_local(1.0 / (2 * kPi))) < 1e-15);
  CHECK(std::abs(torsion_R_local(1.0) - 2.0 * std::log(2 * kPi)) < 1e-15);
  CHECK(t_R(0.0, 0.3) == -1.0);
  CHECK_THROWS_AS(t_R(1.0, 0.0), DomainError);
}
