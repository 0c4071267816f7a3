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

// Special functions with analytic continuation: log-Gamma, digamma, the
// Hurwitz zeta function (Euler-Maclaurin) and generalized binomials.
// All functions are pure and reentrant.

#pragma once

#include <complex>

namespace torsionlab::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kLog2Pi = 1.83787706640934548356065947281123527;

struct HurwitzEval {
  std::complex<double> s;
  double a = 0.0;
  std::complex<double> value;
  // Bound on the Euler-Maclaurin remainder plus accumulated rounding.
  double abs_error = 0.0;
};

struct LaurentAtOne {
  double residue = 1.0;
  double finite_part = 0.0;
};

// log Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

// psi(x) = Gamma'(x)/Gamma(x) for x > 0.
double digamma(double x);

// Sum_{n>=0} (n+a)^{-s}, continued to s != 1. Supported region:
// Re(s) > -12, |Im(s)| <= 50.
HurwitzEval hurwitz_zeta(std::complex<double> s, double a);

// Real-argument convenience wrapper returning only the value.
double hurwitz_zeta(double s, double a);

// zeta_H(s,a) - 1/(s-1): entire in s, equal to -psi(a) at s = 1.
double hurwitz_zeta_regular(double s, double a);

// d/ds zeta_H(s,a) for real s != 1.
double hurwitz_zeta_ds(double s, double a);

// d/ds zeta_H(s,a) at s = 0, i.e. log Gamma(a) - log(2 pi)/2.
double hurwitz_zeta_ds0(double a);

// Laurent data at s = 1: residue 1 and finite part -psi(a).
LaurentAtOne hurwitz_zeta_near1(double a);

// binom(-2s, 2j) = prod_{i=0}^{2j-1} (-2s - i) / (2j)!
std::complex<double> gen_binomial(std::complex<double> s, int j);
double gen_binomial(double s, int j);

// d/ds binom(-2s, 2j) at s = 0; equals 1/j for j >= 1.
double gen_binomial_ds0(int j);

}  // namespace torsionlab::specfun
