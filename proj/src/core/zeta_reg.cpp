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

#include "zeta_reg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace torsionlab::zeta {
namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// 1/Gamma(x) for real x, zero at the poles of Gamma.
double recip_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 0.0) return std::exp(-specfun::log_gamma(x));
  // Reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi.
  return std::exp(specfun::log_gamma(1.0 - x)) * std::sin(specfun::kPi * x) / specfun::kPi;
}

void check_ladder(const std::vector<double>& ladder) {
  if (ladder.empty()) throw DomainError("ladder must not be empty");
  for (std::size_t i = 1; i < ladder.size(); ++i) {
    if (!(ladder[i] > ladder[i - 1])) throw DomainError("ladder must be strictly ascending");
  }
}

// Rejects curves that do not decay (zero modes). Probed deep in the range the
// far integral covers, since small eigenvalues can make theta grow for a while.
void check_decay(const heat::HeatCurve& curve, double split) {
  const double t0 = std::max(split, 1.0);
  const double a = std::abs(curve.sample(t0 * std::exp(20.0)).value);
  const double b = std::abs(curve.sample(t0 * std::exp(30.0)).value);
  if (!(b <= 0.5 * a + 1e-300)) {
    throw DomainError("heat curve does not decay at large t");
  }
}

}  // namespace

double SmallTExpansion::coefficient(double e) const {
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (ladder[i] == e) return coeffs[i];
  }
  return 0.0;
}

double SmallTExpansion::model(double t) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < ladder.size(); ++i) acc += coeffs[i] * std::pow(t, ladder[i]);
  return acc;
}

std::vector<double> default_ladder(int dimension) {
  if (dimension == 1) return {-0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 2.5};
  return {-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0};
}

SmallTExpansion fit_small_t(const heat::HeatCurve& curve, const std::vector<double>& ladder, double t_lo,
                            double t_hi, int n_points, double max_condition) {
  check_ladder(ladder);
  if (!(t_lo > 0.0 && t_hi > t_lo)) throw DomainError("fit window must satisfy 0 < t_lo < t_hi");
  const int p = static_cast<int>(ladder.size());
  if (n_points < 2 * p) throw DomainError("fit needs at least twice as many points as ladder entries");
  std::vector<double> ts(n_points);
  std::vector<double> ys(n_points);
  const double llo = std::log(t_lo);
  const double lhi = std::log(t_hi);
  for (int i = 0; i < n_points; ++i) ts[i] = std::exp(llo + (lhi - llo) * i / (n_points - 1));
  ts.front() = t_lo;
  ts.back() = t_hi;
  parallel_for(static_cast<std::size_t>(n_points), [&](std::size_t i) { ys[i] = curve.sample(ts[i]).value; });

  const double e_min = ladder.front();
  Eigen::MatrixXd A(n_points, p);
  Eigen::VectorXd y(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double w = std::pow(ts[i], -e_min);
    for (int j = 0; j < p; ++j) A(i, j) = w * std::pow(ts[i], ladder[j]);
    y(i) = w * ys[i];
  }
  Eigen::VectorXd col_scale(p);
  for (int j = 0; j < p; ++j) {
    col_scale(j) = A.col(j).norm();
    if (col_scale(j) == 0.0) col_scale(j) = 1.0;
    A.col(j) /= col_scale(j);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cond = sv(p - 1) > 0.0 ? sv(0) / sv(p - 1) : std::numeric_limits<double>::infinity();
  if (!(cond <= max_condition)) {
    throw FitError("small-t fit is ill-conditioned (condition " + std::to_string(cond) +
                   "); use a shorter ladder or a wider window");
  }
  Eigen::VectorXd x = A.colPivHouseholderQr().solve(y);
  // One step of iterative refinement.
  const Eigen::VectorXd r0 = y - A * x;
  x += A.colPivHouseholderQr().solve(r0);

  SmallTExpansion out;
  out.ladder = ladder;
  out.coeffs.resize(p);
  for (int j = 0; j < p; ++j) out.coeffs[j] = x(j) / col_scale(j);
  out.t_lo = t_lo;
  out.t_hi = t_hi;
  out.condition = cond;
  double max_dev = 0.0;
  double max_abs = 0.0;
  for (int i = 0; i < n_points; ++i) {
    max_dev = std::max(max_dev, std::abs(out.model(ts[i]) - ys[i]));
    max_abs = std::max(max_abs, std::abs(ys[i]));
  }
  out.fit_residual = max_abs > 0.0 ? max_dev / max_abs : max_dev;
  out.theta_scale = max_abs;
  return out;
}

namespace {

struct MellinPieces {
  double near;  // int_{t_lo}^{t_hi} t^s (theta - model) dt/t
  double far;   // int_{t_hi}^inf t^s theta dt/t
  double quad_error;
};

quad::AdaptiveOptions to_opts(const QuadTolerances& tol) {
  quad::AdaptiveOptions o;
  o.abs_tol = tol.abs_tol;
  o.rel_tol = tol.rel_tol;
  o.max_panels = tol.max_panels;
  o.initial_panels = 4;
  return o;
}

// Integrals in x = log t. The model is subtracted on [t_lo, t_hi] only,
// where it is accurate; from t_hi on theta is integrated by itself and the
// model's share is added back analytically (see model_part_*). The sum equals
// the split formula exactly; split only places a quadrature breakpoint.
MellinPieces mellin_integrals(const heat::HeatCurve& curve, const SmallTExpansion& exp, double s, double split,
                              const QuadTolerances& tol) {
  MellinPieces p{};
  const quad::AdaptiveOptions o = to_opts(tol);
  double trunc = 0.0;
  auto sample = [&](double t) {
    const heat::HeatValue v = curve.sample(t);
    trunc = std::max(trunc, v.error * std::pow(t, s));
    return v.value;
  };
  const double x_lo = std::log(exp.t_lo);
  const double x_hi = std::log(exp.t_hi);
  const double x_split = std::max(x_hi, std::log(split));
  auto resid = [&](double x) {
    const double t = std::exp(x);
    return std::pow(t, s) * (sample(t) - exp.model(t));
  };
  auto plain = [&](double x) {
    const double t = std::exp(x);
    return std::pow(t, s) * sample(t);
  };
  auto check = [](const quad::QuadResult& r, const char* what) {
    if (!r.converged) throw ResourceError(std::string("Mellin integral did not converge: ") + what, r.value, r.error);
  };
  // The residual sits at the level of the fit misfit and sampling noise, so a
  // fixed rule is used; the coarse/fine difference is the error estimate.
  const double fine = quad::integrate_gl_panels(resid, x_lo, x_hi, 12, 20);
  const double coarse = quad::integrate_gl_panels(resid, x_lo, x_hi, 6, 20);
  const quad::QuadResult near{fine, std::abs(fine - coarse), 360, 12, true};
  const quad::QuadResult mid = quad::integrate(plain, x_hi, x_split, o);
  check(mid, "middle range");
  auto far_f = [&](double u) {
    if (u > 30.0) return 0.0;
    return plain(x_split + u);
  };
  const quad::QuadResult far = quad::integrate_to_infinity(far_f, 0.0, o);
  check(far, "large t");
  p.near = near.value;
  p.far = mid.value + far.value;
  p.quad_error = near.error + mid.error + far.error + trunc * (x_split - x_lo + 50.0);
  return p;
}

// c_0 (gamma + log T) + sum_{e != 0} c_e T^e / e: the part of zeta'(0) carried
// by the model below T.
double model_part_ds0(const SmallTExpansion& exp, double T) {
  double acc = 0.0;
  for (std::size_t i = 0; i < exp.ladder.size(); ++i) {
    const double e = exp.ladder[i];
    if (e == 0.0) {
      acc += exp.coeffs[i] * (specfun::kEulerGamma + std::log(T));
    } else {
      acc += exp.coeffs[i] * std::pow(T, e) / e;
    }
  }
  return acc;
}

std::vector<Pole> ladder_poles(const SmallTExpansion& exp) {
  std::vector<Pole> poles;
  for (std::size_t i = 0; i < exp.ladder.size(); ++i) {
    const double loc = -exp.ladder[i];
    const double rg = recip_gamma(loc);
    if (rg == 0.0) continue;
    poles.push_back({loc, exp.coeffs[i] * rg});
  }
  return poles;
}

}  // namespace

ZetaResult mellin_zeta_at0(const heat::HeatCurve& curve, const SmallTExpansion& exp, double split,
                           const QuadTolerances& tol) {
  if (!(split > 0.0)) throw DomainError("split must be positive");
  check_decay(curve, split);
  const MellinPieces p = mellin_integrals(curve, exp, 0.0, split, tol);
  ZetaResult r;
  r.value_at_0 = exp.coefficient(0.0);
  r.deriv_at_0 = model_part_ds0(exp, exp.t_hi) + p.near + p.far;
  r.quad_error = p.quad_error;
  r.error_estimate = p.quad_error;
  r.poles = ladder_poles(exp);
  r.expansion = exp;
  r.split = split;
  return r;
}

ValueError zeta_at(const heat::HeatCurve& curve, const SmallTExpansion& exp, double s, double split,
                   const QuadTolerances& tol) {
  if (!(split > 0.0)) throw DomainError("split must be positive");
  double analytic = 0.0;
  for (std::size_t i = 0; i < exp.ladder.size(); ++i) {
    const double e = exp.ladder[i];
    const double d = s + e;
    if (std::abs(d) < 1e-6) {
      const double rg = recip_gamma(-e);
      if (rg != 0.0) throw PoleError("zeta_at: s is at a pole of the continuation", -e, exp.coeffs[i] * rg);
      // Removable: (1/Gamma(s)) / (s + e) -> (-1)^n n! at s = -n.
      const int n = static_cast<int>(std::lround(e));
      double fact = 1.0;
      for (int j = 2; j <= n; ++j) fact *= j;
      analytic += exp.coeffs[i] * ((n % 2 == 0) ? fact : -fact);
      continue;
    }
    analytic += exp.coeffs[i] * recip_gamma(s) * std::pow(exp.t_hi, d) / d;
  }
  check_decay(curve, split);
  const MellinPieces p = mellin_integrals(curve, exp, s, split, tol);
  const double rg = recip_gamma(s);
  return {analytic + rg * (p.near + p.far), std::abs(rg) * p.quad_error};
}

FitPlan plan_fit(const heat::HeatCurve& curve, const EngineOptions& opt) {
  FitPlan plan;
  plan.ladder = !opt.ladder.empty() ? opt.ladder : (!curve.ladder.empty() ? curve.ladder : default_ladder(curve.dimension));
  const double scale = std::max(1.0, curve.spectral_scale);
  plan.t_lo = opt.t_lo > 0.0 ? opt.t_lo : 1e-4 / scale;
  plan.t_hi = opt.t_hi > 0.0 ? opt.t_hi : 1e-2 / scale;
  return plan;
}

ZetaResult run_engine(const heat::HeatCurve& curve, const EngineOptions& opt) {
  const FitPlan plan = plan_fit(curve, opt);
  const SmallTExpansion exp = fit_small_t(curve, plan.ladder, plan.t_lo, plan.t_hi, opt.n_points, opt.max_condition);
  if (exp.fit_residual > opt.max_fit_residual) {
    throw FitError("small-t fit residual " + std::to_string(exp.fit_residual) + " exceeds tolerance");
  }
  ZetaResult r = mellin_zeta_at0(curve, exp, opt.split, opt.quad);

  // Alternative fits share t_lo, so their zeta'(0) differ only through the
  // model part below t_lo.
  const double base = model_part_ds0(exp, exp.t_lo);
  double fit_err = 0.0;
  double val_err = 0.0;
  auto compare = [&](const SmallTExpansion& alt) {
    fit_err = std::max(fit_err, std::abs(model_part_ds0(alt, alt.t_lo) - base));
    val_err = std::max(val_err, std::abs(alt.coefficient(0.0) - exp.coefficient(0.0)));
  };
  if (plan.ladder.size() >= 3 && plan.ladder.back() > 0.0) {
    std::vector<double> shorter(plan.ladder.begin(), plan.ladder.end() - 1);
    compare(fit_small_t(curve, shorter, plan.t_lo, plan.t_hi, opt.n_points, opt.max_condition));
  }
  compare(fit_small_t(curve, plan.ladder, plan.t_lo, 0.5 * plan.t_hi, opt.n_points, opt.max_condition));
  r.fit_error = fit_err;
  r.value_error = val_err;
  r.error_estimate = r.quad_error + fit_err + val_err;
  return r;
}

FdResult deriv_at0_fd(const std::function<double(double)>& f) {
  auto central = [&f](double h) { return (f(h) - f(-h)) / (2.0 * h); };
  const double d1 = central(1e-3);
  const double d2 = central(5e-4);
  const double value = (4.0 * d2 - d1) / 3.0;
  // A third level checks that the O(h^2) error model holds.
  const double d3 = central(2.5e-4);
  const double check = (4.0 * d3 - d2) / 3.0;
  const double expected = std::abs(d1 - d2) / 16.0;
  const bool unstable = std::abs(check - value) > 10.0 * expected + 1e-9 * std::max(1.0, std::abs(value));
  return {value, d1, d2, unstable};
}

}  // namespace torsionlab::zeta
