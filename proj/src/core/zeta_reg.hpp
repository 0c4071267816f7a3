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

// Generic zeta regularization of a heat curve theta(t):
//   zeta(s) = 1/Gamma(s) int_0^inf t^{s-1} theta(t) dt,
// with the small-t part replaced by a fitted expansion sum_e c_e t^e.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "heat_trace.hpp"

namespace torsionlab::zeta {

struct SmallTExpansion {
  std::vector<double> ladder;
  std::vector<double> coeffs;
  // max |theta - model| on the fit grid over max |theta| on the grid
  double fit_residual = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  double condition = 0.0;
  double theta_scale = 0.0;  // max |theta| on the fit grid

  double coefficient(double e) const;  // 0 if e is not on the ladder
  double model(double t) const;
};

struct Pole {
  double location;
  double residue;
};

struct ZetaResult {
  double value_at_0 = 0.0;
  double deriv_at_0 = 0.0;
  std::vector<Pole> poles;
  double error_estimate = 0.0;
  std::string method = "mellin_engine";
  // Breakdown of the error estimate.
  double fit_error = 0.0;
  double value_error = 0.0;
  double quad_error = 0.0;
  SmallTExpansion expansion;
  double split = 1.0;
};

struct QuadTolerances {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_panels = 4000;
};

struct EngineOptions {
  std::vector<double> ladder;  // empty: curve hint, then the dimension default
  double t_lo = 0.0;           // 0: derived from the curve's spectral scale
  double t_hi = 0.0;
  int n_points = 48;
  double split = 1.0;
  QuadTolerances quad;
  double max_fit_residual = 1e-6;
  double max_condition = 1e12;
};

std::vector<double> default_ladder(int dimension);

// Weighted least squares of sum c_e t^e on n log-spaced points in [t_lo, t_hi].
// Rows are weighted by t^{-e_min}. Throws FitError when the column-scaled
// design matrix has condition number above max_condition.
SmallTExpansion fit_small_t(const heat::HeatCurve& curve, const std::vector<double>& ladder, double t_lo,
                            double t_hi, int n_points, double max_condition = 1e12);

// zeta(0) and zeta'(0) from a fitted expansion:
//   zeta(0)  = c_0
//   zeta'(0) = c_0 (gamma + log split) + sum_{e != 0} c_e split^e / e
//              + int_{t_lo}^{split} (theta - model) dt/t + int_split^inf theta dt/t
// The model is taken to equal theta below t_lo. Evaluated in the equivalent
// form with the model subtracted only on the fit window.
ZetaResult mellin_zeta_at0(const heat::HeatCurve& curve, const SmallTExpansion& exp, double split = 1.0,
                           const QuadTolerances& tol = {});

struct ValueError {
  double value;
  double error;
};

// zeta(s) = (1/Gamma(s)) [sum c_e split^{s+e}/(s+e) + int_{t_lo}^{split} t^{s-1}(theta - model)
//            + int_split^inf t^{s-1} theta]. Throws PoleError within 1e-6 of s = -e.
ValueError zeta_at(const heat::HeatCurve& curve, const SmallTExpansion& exp, double s, double split = 1.0,
                   const QuadTolerances& tol = {});

// Fit, Mellin-regularize, and estimate the fit error by refitting with the
// top exponent dropped and with the window's upper end halved.
ZetaResult run_engine(const heat::HeatCurve& curve, const EngineOptions& opt = {});

// Resolved fit window and ladder for a curve.
struct FitPlan {
  std::vector<double> ladder;
  double t_lo;
  double t_hi;
};
FitPlan plan_fit(const heat::HeatCurve& curve, const EngineOptions& opt);

struct FdResult {
  double value;
  double d_coarse;
  double d_fine;
  bool unstable;
};

// Central differences with steps 1e-3 and 5e-4, Richardson-extrapolated.
FdResult deriv_at0_fd(const std::function<double(double)>& f);

}  // namespace torsionlab::zeta
