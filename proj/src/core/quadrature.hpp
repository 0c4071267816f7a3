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

// Adaptive Gauss-Kronrod and fixed Gauss-Legendre panel quadrature.
// Panel bookkeeping is deterministic: the same integrand and limits always
// produce the same subdivision and the same floating-point reduction order.

#pragma once

#include <functional>
#include <vector>

namespace torsionlab::quad {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  int panels = 0;
  bool converged = true;
};

struct AdaptiveOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_panels = 2000;
  int initial_panels = 1;
};

using Integrand = std::function<double(double)>;

// Adaptive G7/K15 on a finite interval [a, b].
QuadResult integrate(const Integrand& f, double a, double b, const AdaptiveOptions& opt = {});

// Integral over [a, inf) through the map x = a + u/(1-u), u in [0, 1).
QuadResult integrate_to_infinity(const Integrand& f, double a, const AdaptiveOptions& opt = {});

// Fixed rule: `panels` equal panels of `order`-point Gauss-Legendre.
double integrate_gl_panels(const Integrand& f, double a, double b, int panels, int order);

struct GaussLegendreRule {
  std::vector<double> nodes;    // on (-1, 1), ascending
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule via Newton iteration on P_n.
GaussLegendreRule gauss_legendre(int n);

// The rule mapped onto (a, b).
GaussLegendreRule gauss_legendre(int n, double a, double b);

// Neumaier-compensated accumulator.
class KahanSum {
 public:
  void add(double x);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace torsionlab::quad
