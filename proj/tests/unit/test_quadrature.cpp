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

#include "doctest.h"
#include "quadrature.hpp"
#include "specfun.hpp"

using namespace torsionlab;

TEST_CASE("gauss-legendre rule") {
  for (int n : {1, 5, 20, 64}) {
    const auto r = quad::gauss_legendre(n);
    double w = 0.0;
    for (double x : r.weights) w += x;
    CHECK(std::abs(w - 2.0) < 1e-13);
    // exact for degree 2n - 1
    double m = 0.0;
    for (int i = 0; i < n; ++i) m += r.weights[i] * std::pow(r.nodes[i], 2 * n - 2);
    CHECK(std::abs(m - 2.0 / (2 * n - 1)) < 1e-13);
  }
  const auto r = quad::gauss_legendre(8, 0.0, 1.0);
  double s = 0.0;
  for (int i = 0; i < 8; ++i) s += r.weights[i] * r.nodes[i] * r.nodes[i];
  CHECK(std::abs(s - 1.0 / 3.0) < 1e-15);
}

TEST_CASE("adaptive integration") {
  const auto r = quad::integrate([](double x) { return std::sin(x); }, 0.0, specfun::kPi);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 2.0) < 1e-12);
  CHECK(r.error < 1e-10);
  // log singularity at the endpoint
  const auto l = quad::integrate([](double x) { return std::log(x); }, 0.0, 1.0);
  CHECK(std::abs(l.value + 1.0) < 1e-10);
}

TEST_CASE("semi-infinite integration") {
  const auto g = quad::integrate_to_infinity([](double x) { return std::exp(-x * x); }, 0.0);
  CHECK(std::abs(g.value - 0.5 * std::sqrt(specfun::kPi)) < 1e-11);
  const auto p = quad::integrate_to_infinity([](double x) { return 1.0 / (1.0 + x * x); }, 0.0);
  CHECK(std::abs(p.value - 0.5 * specfun::kPi) < 1e-9);
}

TEST_CASE("fixed panels and compensated sum") {
  const double v = quad::integrate_gl_panels([](double x) { return std::exp(x); }, 0.0, 1.0, 4, 10);
  CHECK(std::abs(v - (std::exp(1.0) - 1.0)) < 1e-14);
  quad::KahanSum k;
  k.add(1.0);
  for (int i = 0; i < 1000; ++i) k.add(1e-16);
  CHECK(std::abs(k.value() - (1.0 + 1e-13)) < 1e-17);
}
