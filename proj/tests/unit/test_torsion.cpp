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
#include "torsion.hpp"

using namespace torsionlab;
using namespace torsionlab::torsion;
using specfun::kPi;

TEST_CASE("spec validation and enum parsing") {
  QuadratureSpec s;
  CHECK_NOTHROW(s.validate());
  s.delta = 0.0;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = QuadratureSpec{};
  s.epsilon = -1.0;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = QuadratureSpec{};
  s.rel_tol = 0.0;
  CHECK_THROWS_AS(s.validate(), DomainError);
  CHECK(group_from_string("r") == Group::R);
  CHECK(group_from_string("h") == Group::H);
  CHECK_THROWS_AS(group_from_string("g"), DomainError);
  CHECK(local_route_from_string("both") == LocalRoute::Both);
  CHECK_THROWS_AS(local_route_from_string("fast"), DomainError);
  CHECK(std::string(to_string(Route::Lott)) == "lott");
}

TEST_CASE("relative torsion of R is zero") {
  for (double d : {0.3, 0.37, 1.0, 2.5}) {
    QuadratureSpec s;
    s.delta = d;
    const TorsionReport r = relative_torsion_R(s);
    CAPTURE(d);
    CHECK(std::abs(r.value) < 1e-10);
    CHECK(r.error >= 0.0);
    CHECK(std::abs(r.component("local_integral") - r.component("local_integral_closed")) < 1e-10);
  }
  CHECK(std::abs(log_sine_integral()) < 1e-6);
}

TEST_CASE("Lott route for R") {
  for (double e : {0.1, 0.5, 1.0}) {
    QuadratureSpec s;
    s.epsilon = e;
    const TorsionReport r = lott_relative_torsion(Group::R, s);
    CHECK(std::abs(r.value) < 1e-6);
    CHECK(r.route == Route::Lott);
  }
}

TEST_CASE("circle torsion routes") {
  const QuadratureSpec s;
  const TorsionReport c = torsion_circle(0.5, LocalRoute::Both, s);
  CHECK(std::abs(c.value - 2.0 * std::log(2.0)) < 1e-12);
  CHECK(std::abs(c.discrepancy("engine_minus_closed")) < 1e-4);
  const TorsionReport e = torsion_circle(0.3, LocalRoute::Engine, s);
  CHECK(e.route == Route::Engine);
  CHECK(std::abs(e.value - 2.0 * std::log(2.0 * std::sin(0.3 * kPi))) < 1e-4);
  CHECK_THROWS_AS(torsion_circle(1.0, LocalRoute::Closed, s), DomainError);
  CHECK_THROWS_AS(e.component("missing"), std::exception);
}

TEST_CASE("localized torsion") {
  const QuadratureSpec s;
  const TorsionReport r = localized_torsion(Group::R, 1.0, LocalRoute::Both, s);
  CHECK(std::abs(r.value - 2.0 * std::log(2.0 * kPi)) < 1e-13);
  CHECK(std::abs(r.discrepancy("engine_minus_closed")) < 1e-3);
  const double h = 1.0 / (2 * kPi);
  const TorsionReport hh = localized_torsion(Group::H, h, LocalRoute::Both, s);
  CHECK(std::abs(hh.value - closed::tH_ds0(h)) < 1e-14);
  CHECK(std::abs(hh.discrepancy("engine_minus_closed")) < 1e-3);
  CHECK(std::abs(hh.component("alternative_expression") - closed::alternative_expression(h)) == 0.0);
  const TorsionReport neg = localized_torsion(Group::H, -h, LocalRoute::Closed, s);
  CHECK(neg.value == hh.value);
  CHECK_THROWS_AS(localized_torsion(Group::H, 0.0, LocalRoute::Closed, s), DomainError);
}

TEST_CASE("lattice sums at s = 3 against the engine") {
  const QuadratureSpec s;
  const Consistency n = n_quotient_consistency(3.0, 0.25, s);
  CHECK(std::abs(n.difference) < 1e-6);
  CHECK(n.engine_error < 1e-6);
  const Consistency e = asymmetry_consistency(3.0, 0.25, s);
  CHECK(std::abs(e.difference) < 1e-6);
}

TEST_CASE("lattice sum symmetries") {
  // e(s; 1/2) vanishes, e(s; a) = -e(s; 1 - a)
  const auto conv = spectra::KConvention::TwoPi;
  const DirectSum half = lattice_direct_sum(3.0, 0.5, LatticeSumWeight::Sign, conv);
  CHECK(std::abs(half.value) <= half.tail_bound + 1e-15);
  const DirectSum a = lattice_direct_sum(3.0, 0.2, LatticeSumWeight::Sign, conv);
  const DirectSum b = lattice_direct_sum(3.0, 0.8, LatticeSumWeight::Sign, conv);
  CHECK(std::abs(a.value + b.value) <= a.tail_bound + b.tail_bound + 1e-14);
  // Every term of t(3; N, 1/2) is positive: t(3; H, h) > 0 for each h.
  const DirectSum n = lattice_direct_sum(3.0, 0.5, LatticeSumWeight::Abs, conv);
  CHECK(n.value > 0.0);
  CHECK_THROWS_AS(lattice_direct_sum(1.0, 0.5, LatticeSumWeight::Abs, conv), DomainError);
}

TEST_CASE("asymmetry invariant at 1/2 and split robustness of N") {
  const QuadratureSpec s;
  const TorsionReport e = asymmetry_E(0.5, s);
  CHECK(std::abs(e.value) < 1e-4);
  const TorsionReport n = torsion_N(0.4, s);
  CHECK(n.discrepancy("split_spread") <= n.error + 1e-12);
  CHECK(std::isfinite(n.component("zeta_at_0")));
}

TEST_CASE("local Plancherel integral") {
  // Antiderivative in k = 2 pi h of (-2 log k - 2 log(1 + k) + 1/(2k)) k, over 2 pi^2.
  auto closed_int = [](double delta) {
    const double K = 2 * kPi * delta;
    const double F = -(K * K * std::log(K) - 0.5 * K * K) - ((K * K - 1.0) * std::log1p(K) - 0.5 * K * K + K) + 0.5 * K;
    return F / (2 * kPi * kPi);
  };
  for (double d : {0.2, 1.0, 1.7}) {
    double err = 0.0;
    const double v = local_plancherel_integral(d, &err);
    CHECK(std::abs(v - closed_int(d)) < 1e-11);
    CHECK(err < 1e-9);
  }
  CHECK_THROWS_AS(local_plancherel_integral(0.0), DomainError);
}
