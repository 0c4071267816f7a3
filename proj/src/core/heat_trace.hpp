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

// Heat traces sum_lambda mult * exp(-t lambda) with truncation bounds, graded
// traces, lattice sums over the Fourier index and the Plancherel Gamma-traces.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spectra.hpp"

namespace torsionlab::heat {

struct HeatValue {
  double value = 0.0;
  double error = 0.0;  // truncation bound plus a rounding estimate
};

// Tolerances are relative to the sum of absolute values of the terms.
inline constexpr double kDefaultTol = 1e-16;

// sum_m mult * exp(-t lambda(m)) over one branch.
HeatValue branch_trace(const spectra::Branch& b, double t, double tol = kDefaultTol);

// Non-graded trace of one degree. Lattice families are summed over n.
HeatValue local_heat_trace(const spectra::SpectrumFamily& fam, double t, double tol = kDefaultTol);

// Graded trace sum_q (-1)^q q Tr exp(-t Delta_q).
HeatValue graded_heat_trace(const spectra::GradedSpectrum& gs, double t, double tol = kDefaultTol);

// Graded H-local trace at k = 2 pi |h|, computed termwise so that the
// cancellation between degrees happens before summation.
HeatValue h_graded_trace_k(double k, double t, double tol = kDefaultTol);

// Cheap upper bound for |h_graded_trace_k(k, t)|.
double h_graded_bound_k(double k, double t);

enum class LatticeWeight { One, Abs, Sign };

// sum_n w(n) * h_graded_trace_k(k(n + alpha), t). Sign uses sgn(0) = +1.
HeatValue lattice_graded_trace(double alpha, LatticeWeight w, double t, spectra::KConvention conv,
                               double tol = kDefaultTol);

// 2 int_0^inf exp(-4 pi^2 h^2 t) dh by quadrature; checked against
// 1/(2 sqrt(pi t)) and throws IdentityGateError beyond 1e-10 relative.
double gamma_heat_trace_R(double t);

// 2 int_{h_lo}^inf Theta_H(t; h) h dh (h_lo = 0 gives the full Gamma-trace).
HeatValue gamma_heat_trace_H(double t, double h_lo = 0.0, double rel_tol = 1e-12, int max_panels = 4000);

// Same integral by fixed Gauss-Legendre panels (second rule for cross-checks).
double gamma_heat_trace_H_fixed(double t, int panels, int order, double h_lo = 0.0);

struct HeatCurve {
  std::function<HeatValue(double)> sample;
  std::string descriptor;
  // Characteristic spectral scale; fit windows are placed at t ~ 1/scale.
  double spectral_scale = 1.0;
  // true if the curve decays only polynomially at large t.
  bool polynomial_decay = false;
  // Suggested small-t exponent ladder (empty: engine default by dimension).
  std::vector<double> ladder;
  int dimension = 1;
};

HeatCurve curve_local(const spectra::SpectrumFamily& fam);
HeatCurve curve_graded(const spectra::GradedSpectrum& gs);
HeatCurve curve_isolated(double lambda);

}  // namespace torsionlab::heat
