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

// Localized, classical and relative torsions assembled from the closed forms
// and the generic zeta engine.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spectra.hpp"
#include "zeta_reg.hpp"

namespace torsionlab::torsion {

struct QuadratureSpec {
  double delta = 1.0;    // spectral split for the Plancherel integral
  double epsilon = 0.1;  // time split for the heat-trace route
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_panels = 4000;
  int alpha_grid = 64;  // Gauss-Legendre nodes on (0, 1)
  spectra::KConvention convention = spectra::KConvention::TwoPi;
  double split = 1.0;  // Mellin split for the engine runs

  void validate() const;  // throws DomainError
};

enum class Route { Closed, Engine, Lott, Decomposition };
const char* to_string(Route r);

enum class Group { R, H };
const char* to_string(Group g);
Group group_from_string(const std::string& s);

enum class LocalRoute { Closed, Engine, Both };
LocalRoute local_route_from_string(const std::string& s);

struct TorsionReport {
  std::string quantity;
  double value = 0.0;
  double error = 0.0;
  Route route = Route::Closed;
  std::vector<std::pair<std::string, double>> components;
  std::vector<std::pair<std::string, std::vector<double>>> samples;  // per-node arrays
  std::vector<std::pair<std::string, double>> discrepancies;

  void add(const std::string& name, double v) { components.emplace_back(name, v); }
  double component(const std::string& name) const;  // throws if absent
  double discrepancy(const std::string& name) const;
};

zeta::EngineOptions engine_options(const QuadratureSpec& spec);

// delta-split relative torsion of (R, Z); analytically zero.
TorsionReport relative_torsion_R(const QuadratureSpec& spec);

// int_0^1 2 log(2 sin pi a) da by adaptive quadrature.
double log_sine_integral();

// Heat-trace (time-split) relative torsion.
TorsionReport lott_relative_torsion(Group g, const QuadratureSpec& spec);

// Circle torsion 2 log(2 sin pi a) with optional engine route.
TorsionReport torsion_circle(double alpha, LocalRoute route, const QuadratureSpec& spec);

// Heat curves of the lattice quotients (sum over the Fourier index).
heat::HeatCurve n_quotient_curve(double alpha, spectra::KConvention conv);
heat::HeatCurve asymmetry_curve(double alpha, spectra::KConvention conv);
// 2 int_{h_lo}^inf Theta_H(t; h) h dh.
heat::HeatCurve gamma_trace_curve(double h_lo);

TorsionReport torsion_N(double alpha, const QuadratureSpec& spec);
TorsionReport asymmetry_E(double alpha, const QuadratureSpec& spec);

// Direct sums sum_n w(n) t(s; H, n + alpha) for s > 1 with a truncation bound.
enum class LatticeSumWeight { Abs, Sign };
struct DirectSum {
  double value;
  double tail_bound;
};
DirectSum lattice_direct_sum(double s, double alpha, LatticeSumWeight w, spectra::KConvention conv);

struct Consistency {
  double engine;
  double engine_error;
  double direct;
  double difference;
};
// Engine zeta_at(s) versus the direct lattice sum (s > 3/2).
Consistency n_quotient_consistency(double s, double alpha, const QuadratureSpec& spec);
Consistency asymmetry_consistency(double s, double alpha, const QuadratureSpec& spec);

struct IdentityCheck {
  double lhs;
  double rhs;
  double difference;
};
// 2 int_1^inf t(3; H, h) h dh against the alpha-integral of the lattice
// decomposition. Throws IdentityGateError beyond 1e-6.
IdentityCheck decomposition_identity_s3(const QuadratureSpec& spec);

// 2 int_0^delta T(H, h) h dh.
double local_plancherel_integral(double delta, double* error = nullptr);

TorsionReport relative_torsion_H(const QuadratureSpec& spec);

TorsionReport localized_torsion(Group g, double h, LocalRoute route, const QuadratureSpec& spec);

}  // namespace torsionlab::torsion
