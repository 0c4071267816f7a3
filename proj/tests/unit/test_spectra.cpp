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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "errors.hpp"
#include "specfun.hpp"
#include "spectra.hpp"

using namespace torsionlab;
using namespace torsionlab::spectra;
using specfun::kPi;

namespace {

std::vector<double> first_eigenvalues(const std::vector<Branch>& bs, int per_branch) {
  std::vector<double> out;
  for (const auto& b : bs) {
    const long n = b.is_family() ? per_branch : 1;
    for (long m = 0; m < n; ++m) out.push_back(b.eigenvalue(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("circle spectrum") {
  const auto f = circle_spectrum(0.5, 0);
  auto ev = first_eigenvalues(f.branches, 4);
  CHECK(std::abs(ev[0] - kPi * kPi) < 1e-12);
  CHECK(std::abs(ev[1] - kPi * kPi) < 1e-12);  // n = 0 and n = -1
  // n -> -1 - n symmetry at alpha = 1/2
  CHECK(std::abs(f.branches[0].eigenvalue(3) - f.branches[1].eigenvalue(3)) < 1e-12);
  const auto g = circle_spectrum(0.25, 1);
  CHECK(same_multiset(g.branches, circle_spectrum(0.25, 0).branches));
  CHECK(std::abs(g.branches[0].eigenvalue(2) - 4.0 * kPi * kPi * 2.25 * 2.25) < 1e-10);
  CHECK(std::abs(g.branches[1].eigenvalue(0) - 4.0 * kPi * kPi * 0.75 * 0.75) < 1e-12);
  CHECK_THROWS_AS(circle_spectrum(0.0, 0), DomainError);
  CHECK_THROWS_AS(circle_spectrum(1.0, 0), DomainError);
  CHECK_THROWS_AS(circle_spectrum(0.5, 2), DomainError);
}

TEST_CASE("R local spectrum") {
  CHECK(std::abs(r_local_spectrum(1.0, 0).branches[0].lambda - 4 * kPi * kPi) < 1e-12);
  CHECK(r_local_spectrum(-1.0, 1).branches[0].lambda == r_local_spectrum(1.0, 1).branches[0].lambda);
  CHECK(std::abs(r_local_spectrum(1.0 / (2 * kPi), 0).branches[0].lambda - 1.0) < 1e-14);
  CHECK_THROWS_AS(r_local_spectrum(0.0, 0), DomainError);
}

TEST_CASE("H local spectrum") {
  const double h = 1.0 / (2 * kPi);
  const auto f0 = h_local_spectrum(h, 0);
  REQUIRE(f0.branches.size() == 1);
  for (int m = 0; m < 5; ++m) CHECK(std::abs(f0.branches[0].eigenvalue(m) - (2.0 + 2.0 * m)) < 1e-12);
  const auto f1 = h_local_spectrum(h, 1);
  REQUIRE(f1.branches.size() == 5);
  CHECK(std::abs(f1.branches[0].lambda - 1.0) < 1e-14);
  CHECK(std::abs(f1.branches[1].lambda - 4.0) < 1e-14);
  CHECK(same_multiset(h_local_spectrum(-h, 1).branches, f1.branches));
  CHECK(same_multiset(h_local_spectrum(0.3, 2).branches, h_local_spectrum(0.3, 1).branches));
  CHECK(same_multiset(h_local_spectrum(0.3, 3).branches, h_local_spectrum(0.3, 0).branches));
  CHECK_THROWS_AS(h_local_spectrum(0.0, 1), DomainError);
  CHECK_THROWS_AS(h_local_spectrum(1.0, 4), DomainError);
}

TEST_CASE("branch monotonicity and positivity") {
  for (double h : {0.01, 0.1, 1.0 / (2 * kPi), 0.5, 3.0}) {
    for (int q = 0; q < 4; ++q) {
      for (const auto& b : h_local_spectrum(h, q).branches) {
        if (!b.is_family()) {
          CHECK(b.lambda > 0.0);
          continue;
        }
        double prev = b.eigenvalue(0);
        CHECK(prev > 0.0);
        for (long m = 1; m < 200; ++m) {
          const double v = b.eigenvalue(m);
          CHECK(v > prev);
          prev = v;
        }
      }
    }
  }
}

TEST_CASE("sqrt branches solve the characteristic cubic") {
  for (double k : {0.05, 0.5, 1.0, 7.0}) {
    const auto bs = h_branches_k(k, 1);
    for (int idx : {3, 4}) {
      for (long l = 0; l < 20; ++l) {
        // lambda = y^2 with y = 1/2 + u (plus) or y = 1/2 - u (minus)
        const double root = std::sqrt(bs[idx].eigenvalue(l));
        const double y = idx == 3 ? root : -root;
        const double r = y * (y * y - y - (2.0 * l + 1.0) * k - k * k);
        const double scale = std::abs(y) * (y * y + std::abs(y) + (2.0 * l + 1.0) * k + k * k);
        CHECK(std::abs(r) <= 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("Hred and N-quotient") {
  const auto h = hred_spectrum(0.5, 0);
  CHECK(same_multiset({h.lattice_branches(2)[0]}, {h.lattice_branches(2)[0]}));
  CHECK(std::abs(h.lattice_branches(2)[0].a - h.lattice_branches(-3)[0].a) < 1e-12);
  const auto h25 = hred_spectrum(0.25, 0);
  CHECK(std::abs(h25.lattice_branches(0)[0].a - 2 * kPi * 0.25) < 1e-14);
  CHECK(std::abs(h25.lattice_branches(0)[0].a - h_local_spectrum(0.25, 0).branches[0].a) < 1e-15);
  const auto bare = hred_spectrum(0.25, 0, KConvention::Bare);
  CHECK(std::abs(bare.lattice_branches(0)[0].a - 0.25) < 1e-15);
  const auto n1 = n_quotient_spectrum(0.3, 1);
  for (const auto& b : n1.lattice_branches(3)) CHECK(b.multiplicity == 3.0);
  for (const auto& b : n1.lattice_branches(-2)) CHECK(b.multiplicity == 2.0);
  CHECK(n1.lattice_branches(0).empty());
  CHECK(hred_spectrum(0.3, 3).lattice_branches(1).size() == hred_spectrum(0.3, 0).lattice_branches(1).size());
  CHECK_THROWS_AS(hred_spectrum(1.0, 0), DomainError);
  CHECK_THROWS_AS(n_quotient_spectrum(0.0, 0), DomainError);
}

TEST_CASE("graded weights and reduction") {
  const auto g1 = graded(GroupTag::Circle, 0.3);
  REQUIRE(g1.weights.size() == 2);
  CHECK(g1.weights[0] == 0.0);
  CHECK(g1.weights[1] == -1.0);
  for (const auto& wb : g1.reduced()) CHECK(wb.weight == -1.0);
  const auto g3 = graded(GroupTag::HLocal, 0.2);
  REQUIRE(g3.weights.size() == 4);
  CHECK(g3.weights == std::vector<double>{0.0, -1.0, 2.0, -3.0});
  const auto red = g3.reduced();
  REQUIRE(red.size() == 6);
  int plus = 0, minus3 = 0;
  for (const auto& wb : red) {
    if (wb.weight == 1.0) ++plus;
    if (wb.weight == -3.0) ++minus3;
  }
  CHECK(plus == 5);
  CHECK(minus3 == 1);
  CHECK(graded(GroupTag::Hred, 0.4).reduced_lattice(-2).size() == 6);
}

TEST_CASE("tag and convention parsing") {
  CHECK(group_tag_from_string("h_local") == GroupTag::HLocal);
  CHECK(group_tag_from_string("n_quotient") == GroupTag::NQuotient);
  CHECK(k_convention_from_string("bare") == KConvention::Bare);
  CHECK_THROWS_AS(group_tag_from_string("torus"), DomainError);
  CHECK_THROWS_AS(k_convention_from_string("4pi"), DomainError);
}
