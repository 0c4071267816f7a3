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

#include "specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "errors.hpp"

namespace torsionlab::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_{2j} / (2j)! for j = 1..7.
constexpr std::array<double, 7> kBernoulliOverFactorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    7.0 / 523069747200.0,
};
// Correction terms used: j = 1..6 (through B_12). The j = 7 entry bounds the
// remainder.
constexpr int kEulerMaclaurinTerms = 6;

void require_positive(double a, const char* what) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError(std::string(what) + ": argument must be positive and finite, got " +
                      std::to_string(a));
  }
}

// Cutoff N for the direct part of the Euler-Maclaurin sum. The remainder after
// the B_12 term is bounded by |B_14/14! (s)_13| x^{-Re s - 13} (times the
// complex correction |s+13|/(Re s+13)); N is the smallest integer meeting a
// 1e-17 relative target, never larger than the x >= 10(1+|s|) rule.
int em_cutoff(std::complex<double> s, double a) {
  const double abs_s = std::abs(s);
  const double sigma = s.real();
  const double full = std::ceil(std::max(0.0, 10.0 * (1.0 + abs_s) - a));
  // Factors near zero are floored at 1 so the cutoff also serves the
  // s-derivative at nonpositive integers.
  double poch = 1.0;
  for (int i = 0; i < 13; ++i) poch *= std::max(1.0, std::abs(s + static_cast<double>(i)));
  double c = std::abs(kBernoulliOverFactorial[6]) * poch;
  c *= std::abs(s + 13.0) / (sigma + 13.0);
  // For sigma > 1 the sum is at least a^{-sigma}; the target is relative to it.
  const double lead = std::pow(a, -sigma);
  const double scale = sigma > 1.0 ? lead : std::max(1.0, lead);
  const double target = 1e-17 * scale;
  double x_needed = std::pow(c / target, 1.0 / (sigma + 13.0));
  x_needed = std::max(x_needed, 1.5 * (abs_s + 13.0) / (2.0 * kPi));
  const double n = std::ceil(std::max(0.0, x_needed - a));
  return static_cast<int>(std::min(n, full));
}

void check_region(std::complex<double> s) {
  if (!(s.real() > -12.0)) {
    throw DomainError("hurwitz_zeta: Re(s) must exceed -12");
  }
  if (std::abs(s.imag()) > 50.0) {
    throw DomainError("hurwitz_zeta: |Im(s)| > 50 is outside the supported region");
  }
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  // Shift to x >= 10, then Stirling through the x^{-13} term.
  double shift = 0.0;
  double prod = 1.0;
  while (x < 10.0) {
    prod *= x;
    x += 1.0;
    if (prod > 1e280 || prod < 1e-280) {
      shift += std::log(prod);
      prod = 1.0;
    }
  }
  shift += std::log(prod);
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv * (1.0 / 12.0 +
             inv2 * (-1.0 / 360.0 +
                     inv2 * (1.0 / 1260.0 +
                             inv2 * (-1.0 / 1680.0 +
                                     inv2 * (1.0 / 1188.0 +
                                             inv2 * (-691.0 / 360360.0 + inv2 * (1.0 / 156.0)))))));
  return (x - 0.5) * std::log(x) - x + 0.5 * kLog2Pi + series - shift;
}

double digamma(double x) {
  require_positive(x, "digamma");
  double acc = 0.0;
  while (x < 8.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  const double series =
      inv2 * (1.0 / 12.0 -
              inv2 * (1.0 / 120.0 -
                      inv2 * (1.0 / 252.0 -
                              inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0))))));
  return acc + std::log(x) - 0.5 / x - series;
}

HurwitzEval hurwitz_zeta(std::complex<double> s, double a) {
  require_positive(a, "hurwitz_zeta");
  check_region(s);
  if (s == std::complex<double>(1.0, 0.0)) {
    throw PoleError("hurwitz_zeta: pole at s = 1", 1.0, 1.0);
  }
  const int n_cut = em_cutoff(s, a);

  std::complex<double> direct = 0.0;
  double abs_sum = 0.0;
  for (int n = n_cut - 1; n >= 0; --n) {
    const double log_x = std::log(static_cast<double>(n) + a);
    const std::complex<double> term = std::exp(-s * log_x);
    direct += term;
    abs_sum += std::abs(term);
  }

  const double x = static_cast<double>(n_cut) + a;
  const double log_x = std::log(x);
  const std::complex<double> x_pow = std::exp(-s * log_x);  // x^{-s}
  std::complex<double> tail = x * x_pow / (s - 1.0) + 0.5 * x_pow;
  std::complex<double> poch = s;  // (s)_{2j-1}
  double x_power = 1.0 / x;       // x^{1-2j}
  for (int j = 0; j < kEulerMaclaurinTerms; ++j) {
    tail += kBernoulliOverFactorial[j] * poch * x_pow * x_power;
    poch *= (s + static_cast<double>(2 * j + 1)) * (s + static_cast<double>(2 * j + 2));
    x_power /= (x * x);
  }
  // First omitted term bounds the remainder.
  double bound = std::abs(kBernoulliOverFactorial[6] * poch * x_pow * x_power);
  bound *= std::abs(s + 13.0) / (s.real() + 13.0);

  HurwitzEval out;
  out.s = s;
  out.a = a;
  out.value = direct + tail;
  out.abs_error = bound + 8.0 * kEps * (abs_sum + std::abs(tail) + static_cast<double>(n_cut) * std::abs(out.value));
  return out;
}

double hurwitz_zeta(double s, double a) { return hurwitz_zeta(std::complex<double>(s, 0.0), a).value.real(); }

double hurwitz_zeta_regular(double s, double a) {
  require_positive(a, "hurwitz_zeta_regular");
  check_region(s);
  const int n_cut = em_cutoff(s, a);
  double direct = 0.0;
  for (int n = n_cut - 1; n >= 0; --n) direct += std::pow(static_cast<double>(n) + a, -s);

  const double x = static_cast<double>(n_cut) + a;
  const double log_x = std::log(x);
  // (x^{1-s} - 1)/(s-1) written through expm1 so the pole cancels exactly.
  const double y = (1.0 - s) * log_x;
  const double pole_part = (y == 0.0) ? -log_x : -log_x * std::expm1(y) / y;
  const double x_pow = std::exp(-s * log_x);
  double tail = pole_part + 0.5 * x_pow;
  double poch = s;
  double x_power = 1.0 / x;
  for (int j = 0; j < kEulerMaclaurinTerms; ++j) {
    tail += kBernoulliOverFactorial[j] * poch * x_pow * x_power;
    poch *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
    x_power /= (x * x);
  }
  return direct + tail;
}

double hurwitz_zeta_ds(double s, double a) {
  require_positive(a, "hurwitz_zeta_ds");
  check_region(s);
  if (s == 1.0) throw PoleError("hurwitz_zeta_ds: pole at s = 1", 1.0, 1.0);
  const int n_cut = em_cutoff(s, a);
  double direct = 0.0;
  for (int n = n_cut - 1; n >= 0; --n) {
    const double log_n = std::log(static_cast<double>(n) + a);
    direct -= log_n * std::exp(-s * log_n);
  }
  const double x = static_cast<double>(n_cut) + a;
  const double log_x = std::log(x);
  const double x_pow = std::exp(-s * log_x);
  const double sm1 = s - 1.0;
  double tail = -log_x * x * x_pow / sm1 - x * x_pow / (sm1 * sm1) - 0.5 * log_x * x_pow;
  double poch = s;
  double poch_d = 1.0;
  double x_power = 1.0 / x;
  for (int j = 0; j < kEulerMaclaurinTerms; ++j) {
    tail += kBernoulliOverFactorial[j] * x_pow * x_power * (poch_d - log_x * poch);
    const double f1 = s + 2.0 * j + 1.0;
    const double f2 = s + 2.0 * j + 2.0;
    poch_d = poch_d * f1 * f2 + poch * (f1 + f2);
    poch *= f1 * f2;
    x_power /= (x * x);
  }
  return direct + tail;
}

double hurwitz_zeta_ds0(double a) {
  require_positive(a, "hurwitz_zeta_ds0");
  return log_gamma(a) - 0.5 * kLog2Pi;
}

LaurentAtOne hurwitz_zeta_near1(double a) {
  require_positive(a, "hurwitz_zeta_near1");
  return {1.0, -digamma(a)};
}

std::complex<double> gen_binomial(std::complex<double> s, int j) {
  if (j < 0) throw DomainError("gen_binomial: j must be nonnegative");
  std::complex<double> out = 1.0;
  for (int i = 0; i < 2 * j; ++i) out *= (-2.0 * s - static_cast<double>(i)) / static_cast<double>(i + 1);
  return out;
}

double gen_binomial(double s, int j) { return gen_binomial(std::complex<double>(s, 0.0), j).real(); }

double gen_binomial_ds0(int j) {
  if (j < 1) throw DomainError("gen_binomial_ds0: j must be positive");
  return 1.0 / static_cast<double>(j);
}

}  // namespace torsionlab::specfun
