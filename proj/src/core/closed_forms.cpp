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

#include "closed_forms.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"
#include "specfun.hpp"

namespace torsionlab::closed {
namespace {

using specfun::digamma;
using specfun::hurwitz_zeta;
using specfun::hurwitz_zeta_regular;
using specfun::kPi;
using specfun::log_gamma;

constexpr double kLog2 = 0.69314718055994530941723212145817657;

void require_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("k must be positive and finite");
}

void require_not_one(double s, const char* what, double residue) {
  if (s == 1.0) throw PoleError(std::string(what) + ": pole at s = 1", 1.0, residue);
}

// a_m^2 = 2k (m + c) with c = (k + 1/2)^2 / (2k), so z(s) = (2k)^{-s} zeta_H(s, c).
double z_offset(double k) { return (k + 0.5) * (k + 0.5) / (2.0 * k); }

// e z(1 + e), entire in e.
double z_shifted_times(double e, double k) {
  const double s = 1.0 + e;
  return std::pow(2.0 * k, -s) * (1.0 + e * hurwitz_zeta_regular(s, z_offset(k)));
}

// 4^{-j} z(s + j) = 4^{-j} a_0^{-2 sigma} sum_m (c / (m + c))^sigma, sigma = s + j,
// evaluated without forming the overflowing factors separately.
double z_quarter_shift(double s, int j, double k) {
  const double sigma = s + static_cast<double>(j);
  const double c = z_offset(k);
  double scaled = 0.0;
  if (sigma > 30.0) {
    for (int m = 0;; ++m) {
      const double term = std::exp(-sigma * std::log1p(static_cast<double>(m) / c));
      scaled += term;
      if (term < 1e-18 * scaled) break;
    }
  } else {
    scaled = std::exp(sigma * std::log(c)) * hurwitz_zeta(sigma, c);
  }
  const double a0sq = (k + 0.5) * (k + 0.5);
  return std::exp(-sigma * std::log(a0sq) - static_cast<double>(j) * std::log(4.0)) * scaled;
}

}  // namespace

HParams h_params(double h) {
  if (h == 0.0 || !std::isfinite(h)) throw DomainError("h must be nonzero and finite");
  const double k = 2.0 * kPi * std::abs(h);
  return {h, k, k + 0.25 / k};
}

double t0(double s, double k) {
  require_k(k);
  require_not_one(s, "t0", 0.5 / k);
  // mu_m = 2k (m + (1 + k)/2)
  return std::pow(2.0 * k, -s) * hurwitz_zeta(s, 0.5 * (1.0 + k));
}

double t0_at0(double k) {
  require_k(k);
  return -0.5 * k;
}

double t0_ds0(double k) {
  require_k(k);
  return 0.5 * k * std::log(k) + (0.5 - 0.5 * k) * kLog2 + log_gamma(k) - log_gamma(0.5 * k);
}

double z_fn(double s, double k) {
  require_k(k);
  require_not_one(s, "z", 0.5 / k);
  return std::pow(2.0 * k, -s) * hurwitz_zeta(s, z_offset(k));
}

double z_at0(double k) {
  require_k(k);
  return -0.5 * (k + 0.25 / k);
}

double z_ds0(double k) {
  require_k(k);
  const double b = k + 0.25 / k;
  return log_gamma(b) - log_gamma(0.5 * b) + 0.5 * (1.0 - b) * kLog2 + 0.5 * b * std::log(k);
}

double z_residue1(double k) {
  require_k(k);
  return 0.5 / k;
}

double z_finite1(double k) {
  require_k(k);
  const double b = k + 0.25 / k;
  return (0.5 * digamma(0.5 * b) - digamma(b)) / k + (kLog2 - std::log(k)) / (2.0 * k);
}

double z_finite1_alternative(double k) {
  require_k(k);
  const double b = k + 0.25 / k;
  return (0.5 * digamma(0.5 * b) - digamma(b)) / k;
}

SeriesValue t1_series(double s, double k, int J) {
  require_k(k);
  if (J < 1) throw DomainError("t1: J must be positive");
  // Poles of z(s + j) at s + j = 1 for j >= 2.
  for (int j = 2; j <= J; ++j) {
    if (s + j == 1.0) throw PoleError("t1: pole of z(s + j)", s, 0.0);
  }
  if (s == 1.0) throw PoleError("t1: pole at s = 1", 1.0, 2.0 * z_residue1(k));
  double sum = 2.0 * z_fn(s, k);
  // (1/2) s (1 + 2s) z(s + 1), written through s z(s + 1) which is entire.
  sum += 0.5 * (1.0 + 2.0 * s) * z_shifted_times(s, k);
  double last = 0.0;
  for (int j = 2; j <= J; ++j) {
    last = 2.0 * specfun::gen_binomial(s, j) * z_quarter_shift(s, j, k);
    sum += last;
  }
  // Terms decay at least like r^j with r = growth(binomial) / (4 a_0^2), a_0 = k + 1/2.
  const double a0sq = (k + 0.5) * (k + 0.5);
  const double growth = std::pow((2.0 * std::abs(s) + 2.0 * J + 1.0) / (2.0 * J + 1.0), 2.0);
  const double ratio = std::max(1.0, growth) / (4.0 * a0sq);
  double tail = 0.0;
  if (J >= 2) {
    if (ratio >= 1.0) {
      tail = std::numeric_limits<double>::infinity();
    } else {
      tail = std::abs(last) * ratio / (1.0 - ratio);
    }
  }
  return {sum, tail, J};
}

SeriesValue t1_auto(double s, double k) {
  require_k(k);
  int J = 8;
  SeriesValue v = t1_series(s, k, J);
  while (!(v.tail_bound <= 1e-16 * std::max(1.0, std::abs(v.value)))) {
    if (J > 40000) throw ResourceError("t1: series truncation budget exhausted", v.value, v.tail_bound);
    J *= 2;
    v = t1_series(s, k, J);
  }
  return v;
}

double t1(double s, double k) { return t1_auto(s, k).value; }

double t1_at0(double k) {
  require_k(k);
  // 2 z(0) + (1/2) Res_{s=1} z
  return 2.0 * z_at0(k) + 0.5 * z_residue1(k);
}

double t1_ds0(double k) {
  require_k(k);
  return (1.0 - k) * kLog2 + k * std::log(k) + 0.5 / k + 2.0 * log_gamma(k) - 2.0 * log_gamma(0.5 * k);
}

double t1_ds0_alternative(double k) {
  require_k(k);
  const double b = k + 0.25 / k;
  return (1.0 - b) * kLog2 + b * std::log(k) + 0.5 / k + 2.0 * log_gamma(k) - 2.0 * log_gamma(0.5 * k);
}

double t1_ds0_series(double k) {
  require_k(k);
  // d/ds at 0 of: 2 z(s) + (1/2)(1 + 2s) [s z(s+1)] + 2 sum_{j>=2} binom(-2s,2j) 4^{-j} z(s+j).
  // s z(s+1) = R + F s + O(s^2) with R the residue and F the finite part.
  double sum = 2.0 * z_ds0(k) + z_residue1(k) + 0.5 * z_finite1(k);
  const double ratio = 1.0 / (4.0 * (k + 0.5) * (k + 0.5));
  for (int j = 2; j < 200000; ++j) {
    const double term = 2.0 * specfun::gen_binomial_ds0(j) * z_quarter_shift(0.0, j, k);
    sum += term;
    if (std::abs(term) * ratio / (1.0 - ratio) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double t_H(double s, double h) {
  const HParams p = h_params(h);
  const double k = p.k;
  return std::pow(k, -2.0 * s) + std::pow(1.0 + k, -2.0 * s) - 2.0 * t0(s, k) + t1(s, k);
}

double tH_at0(double h) {
  const HParams p = h_params(h);
  return 1.0 + 1.0 - 2.0 * t0_at0(p.k) + t1_at0(p.k);
}

double tH_ds0(double h) {
  const double k = h_params(h).k;
  return -2.0 * std::log(k) - 2.0 * std::log1p(k) + 0.5 / k;
}

double tH_ds0_reassembled(double h) {
  const double k = h_params(h).k;
  return -2.0 * std::log(k) - 2.0 * std::log1p(k) - 2.0 * t0_ds0(k) + t1_ds0(k);
}

double tH_ds0_alternative(double h) {
  const double k = h_params(h).k;
  return -2.0 * std::log(k) - 2.0 * std::log1p(k) + 0.25 / k * std::log(k) - 0.25 / k * kLog2 + 0.5 / k;
}

double tH_residue1(double h) {
  const double k = h_params(h).k;
  // t0 has residue k^{-1} - (2k)^{-1}; t1 inherits 2 Res z.
  const double res_t0 = 1.0 / k - 0.5 / k;
  const double res_t1 = 2.0 * z_residue1(k);
  return -2.0 * res_t0 + res_t1;
}

double torsion_H_local(double h) { return tH_ds0(h); }

double alternative_expression(double h) {
  if (h == 0.0) throw DomainError("h must be nonzero");
  const double a = std::abs(h);
  const double th = 2.0 * kPi * a;
  return -2.0 * std::log(th * (1.0 + th)) + std::log(kPi * a) / (8.0 * kPi * a) + 1.0 / (4.0 * kPi * a);
}

double t_circle(double s, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  if (2.0 * s == 1.0) throw PoleError("t_circle: pole at s = 1/2", 0.5, -1.0 / (2.0 * kPi));
  const double pref = std::pow(2.0 * kPi, -2.0 * s);
  return -pref * hurwitz_zeta(2.0 * s, alpha) - pref * hurwitz_zeta(2.0 * s, 1.0 - alpha);
}

double torsion_circle(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  const double value = 2.0 * std::log(2.0 * std::sin(kPi * alpha));
  const double h1 = 1e-3;
  const double h2 = 5e-4;
  const double d1 = (t_circle(h1, alpha) - t_circle(-h1, alpha)) / (2.0 * h1);
  const double d2 = (t_circle(h2, alpha) - t_circle(-h2, alpha)) / (2.0 * h2);
  const double fd = (4.0 * d2 - d1) / 3.0;
  if (std::abs(fd - value) > 1e-8) {
    throw IdentityGateError("torsion_circle: finite-difference derivative disagrees", fd, value);
  }
  return value;
}

double t_R(double s, double h) {
  if (h == 0.0) throw DomainError("h must be nonzero");
  return -std::pow(2.0 * kPi * std::abs(h), -2.0 * s);
}

double torsion_R_local(double h) {
  if (h == 0.0) throw DomainError("h must be nonzero");
  return 2.0 * std::log(2.0 * kPi * std::abs(h));
}

}  // namespace torsionlab::closed
