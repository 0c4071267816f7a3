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

// Exact Hurwitz-zeta decompositions of the localized zeta functions.
//
// With k = 2 pi |h|, b = k + 1/(4k), mu_m = k(2m+1) + k^2 and
// a_m = sqrt(mu_m + 1/4):
//   t0(s) = sum_m mu_m^{-s}
//   z(s)  = sum_m a_m^{-2s}
//   t1(s) = sum_m (a_m + 1/2)^{-2s} + (a_m - 1/2)^{-2s}
//   t(s; H, h) = k^{-2s} + (1 + k)^{-2s} - 2 t0(s) + t1(s)

#pragma once

namespace torsionlab::closed {

struct HParams {
  double h;
  double k;
  double b;
};

HParams h_params(double h);

double t0(double s, double k);
double t0_at0(double k);
double t0_ds0(double k);

double z_fn(double s, double k);
double z_at0(double k);
double z_ds0(double k);
double z_residue1(double k);
// Finite part of z at s = 1.
double z_finite1(double k);
// The finite part as printed in the source derivation: (1/k)(psi(b/2)/2 - psi(b)).
double z_finite1_alternative(double k);

struct SeriesValue {
  double value;
  double tail_bound;
  int terms;
};

// t1 via 2 sum_j binom(-2s, 2j) 4^{-j} z(s + j), truncated at j = J.
SeriesValue t1_series(double s, double k, int J);
// Same with J chosen automatically for a 1e-16 relative tail.
SeriesValue t1_auto(double s, double k);
double t1(double s, double k);
double t1_at0(double k);
double t1_ds0(double k);
// t1'(0) by differentiating the binomial series termwise (independent check).
double t1_ds0_series(double k);
double t1_ds0_alternative(double k);

double t_H(double s, double h);
double tH_at0(double h);
double tH_ds0(double h);
// -2 log k - 2 log(1 + k) - 2 t0'(0) + t1'(0).
double tH_ds0_reassembled(double h);
double tH_ds0_alternative(double h);
// Residue of t(s; H, h) at s = 1 assembled from the pieces (it vanishes).
double tH_residue1(double h);

// Localized torsion of H at h.
double torsion_H_local(double h);
// -2 log 2 pi h (1 + 2 pi h) + (1/(8 pi h)) log pi h + 1/(4 pi h) at |h|.
double alternative_expression(double h);

double t_circle(double s, double alpha);
// 2 log(2 sin pi alpha); throws IdentityGateError if the finite-difference
// derivative of t_circle at 0 disagrees beyond 1e-8.
double torsion_circle(double alpha);

double t_R(double s, double h);
double torsion_R_local(double h);

}  // namespace torsionlab::closed
