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

#include "heat_trace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "errors.hpp"
#include "jet.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace torsionlab::heat {
namespace {

using spectra::Branch;
using spectra::BranchKind;
using J = Jet<15>;

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = specfun::kPi;
constexpr int kDirectHead = 10;
constexpr long kMaxTerms = 20000000;

// B_{2j} / (2j), j = 1..8.
constexpr double kBernoulliOverIndex[8] = {1.0 / 12.0,   -1.0 / 120.0,          1.0 / 252.0, -1.0 / 240.0,
                                           1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,  -3617.0 / 8160.0};

// A summand f(m) for m = 0, 1, ... with
//   term(m)          f(m)
//   jet(M)           Taylor jet of f(M + e)
//   integral(M)      int_M^inf f(x) dx
//   envelope(m)      decreasing majorant of |f(m)|
//   rate(m)          t * (gap of the envelope's exponent at m); the envelope
//                    decays at least geometrically with this rate beyond m
template <class Term, class JetF, class Integral, class Env, class Rate>
HeatValue smooth_sum(const Term& term, const JetF& jet, const Integral& integral, const Env& envelope,
                     const Rate& rate, double tol) {
  quad::KahanSum acc;
  double abs_acc = 0.0;
  long m = 0;
  auto direct_until_bound = [&]() -> HeatValue {
    for (; m < kMaxTerms; ++m) {
      const double bound = envelope(m) / (-std::expm1(-rate(m)));
      if (m > 0 && (bound <= tol * abs_acc || bound == 0.0)) {
        const double v = acc.value();
        return {v, bound + 4.0 * kEps * abs_acc};
      }
      const double f = term(m);
      acc.add(f);
      abs_acc += std::abs(f);
    }
    throw ResourceError("heat trace: term budget exhausted", acc.value(), envelope(m));
  };

  if (rate(kDirectHead) > 0.5) return direct_until_bound();

  long big_m = kDirectHead;
  for (;;) {
    for (; m < big_m; ++m) {
      const double f = term(m);
      acc.add(f);
      abs_acc += std::abs(f);
    }
    if (rate(big_m) > 0.5) return direct_until_bound();
    const J f = jet(static_cast<double>(big_m));
    const double integ = integral(static_cast<double>(big_m));
    double tail = integ + 0.5 * f.c[0];
    double last = 0.0;
    double tail_abs = std::abs(integ) + 0.5 * std::abs(f.c[0]);
    for (int j = 1; j <= 8; ++j) {
      const double corr = kBernoulliOverIndex[j - 1] * f.c[2 * j - 1];
      tail -= corr;
      tail_abs += std::abs(corr);
      last = std::abs(corr);
    }
    const double est = last;
    const double rounding = 4.0 * kEps * (abs_acc + tail_abs);
    const double target = std::max(tol * (abs_acc + tail_abs), rounding);
    if (est <= target || big_m >= 200000) {
      if (est > target * 1e3) {
        throw ResourceError("heat trace: Euler-Maclaurin tail did not converge", acc.value() + tail, est);
      }
      quad::KahanSum total = acc;
      total.add(tail);
      return {total.value(), est + rounding};
    }
    big_m *= 4;
  }
}

J lambda_jet(const Branch& b, double x0) {
  J x = J::variable(x0);
  switch (b.kind) {
    case BranchKind::Arithmetic: return (x * 2.0 + 1.0) * b.a + b.c;
    case BranchKind::Quadratic: {
      const J y = x + b.c;
      return (y * y) * b.a;
    }
    case BranchKind::SqrtPlus:
    case BranchKind::SqrtMinus: {
      const J u = jet_sqrt((x * 2.0 + 1.0) * b.a + (b.c + 0.25));
      const double sgn = b.kind == BranchKind::SqrtPlus ? 0.5 : -0.5;
      const J v = u + sgn;
      J out = v * v;
      out.c[0] = b.eigenvalue(static_cast<long>(x0));
      return out;
    }
    case BranchKind::Isolated: break;
  }
  return J::constant(b.lambda);
}

double erfc_integral_sqrt(double a, double v, double t, bool plus) {
  // (1/a) [exp(-t v^2)/(2t) -+ (1/4) sqrt(pi/t) erfc(sqrt(t) v)]
  const double g = std::exp(-t * v * v) / (2.0 * t);
  const double e = 0.25 * std::sqrt(kPi / t) * std::erfc(std::sqrt(t) * v);
  return (plus ? g - e : g + e) / a;
}

double branch_integral(const Branch& b, double t, double big_m) {
  switch (b.kind) {
    case BranchKind::Arithmetic: return std::exp(-t * (b.a * (2.0 * big_m + 1.0) + b.c)) / (2.0 * b.a * t);
    case BranchKind::Quadratic:
      return 0.5 * std::sqrt(kPi / (t * b.a)) * std::erfc(std::sqrt(t * b.a) * (big_m + b.c));
    case BranchKind::SqrtPlus:
    case BranchKind::SqrtMinus: {
      const double u = std::sqrt(b.a * (2.0 * big_m + 1.0) + b.c + 0.25);
      const bool plus = b.kind == BranchKind::SqrtPlus;
      return erfc_integral_sqrt(b.a, plus ? u + 0.5 : u - 0.5, t, plus);
    }
    case BranchKind::Isolated: break;
  }
  return 0.0;
}

void require_t(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("heat trace: t must be positive and finite");
}

}  // namespace

HeatValue branch_trace(const Branch& b, double t, double tol) {
  require_t(t);
  const double mult = b.multiplicity;
  if (mult == 0.0) return {};
  if (b.kind == BranchKind::Isolated) return {mult * std::exp(-t * b.lambda), 0.0};
  auto term = [&](long m) { return std::exp(-t * b.eigenvalue(m)); };
  auto jet = [&](double big_m) { return jet_exp(lambda_jet(b, big_m) * (-t)); };
  auto integral = [&](double big_m) { return branch_integral(b, t, big_m); };
  auto rate = [&](long m) { return t * (b.eigenvalue(m + 1) - b.eigenvalue(m)); };
  HeatValue v = smooth_sum(term, jet, integral, term, rate, tol);
  return {mult * v.value, mult * v.error};
}

HeatValue h_graded_trace_k(double k, double t, double tol) {
  require_t(t);
  if (!(k > 0.0)) throw DomainError("h_graded_trace_k: k must be positive");
  const double a = k;
  const double c = k * k;
  Branch minus;
  minus.kind = BranchKind::SqrtMinus;
  minus.a = a;
  minus.c = c;
  auto mu = [&](double m) { return a * (2.0 * m + 1.0) + c; };
  // Sqrt(+) + Sqrt(-) - 2 Arithmetic, combined per index.
  auto term = [&](long m) {
    const double mm = mu(static_cast<double>(m));
    const double u = std::sqrt(mm + 0.25);
    if (t * (u - 0.5) > 1.0) {
      // No cancellation to protect against; avoids overflow of expm1.
      return std::exp(-t * minus.eigenvalue(m)) + std::exp(-t * (u + 0.5) * (u + 0.5)) - 2.0 * std::exp(-t * mm);
    }
    return std::exp(-t * mm) * (std::expm1(t * (u - 0.5)) + std::expm1(-t * (u + 0.5)));
  };
  auto jet = [&](double big_m) {
    const J x = J::variable(big_m);
    const J muj = (x * 2.0 + 1.0) * a + c;
    const J u = jet_sqrt(muj + 0.25);
    if (t * (u.c[0] - 0.5) > 1.0) {
      const J lm = (u + (-0.5)) * (u + (-0.5));
      const J lp = (u + 0.5) * (u + 0.5);
      return jet_exp(lm * (-t)) + jet_exp(lp * (-t)) - jet_exp(muj * (-t)) * 2.0;
    }
    const J p = jet_exp((u + (-0.5)) * t, true);
    const J q = jet_exp((u + 0.5) * (-t), true);
    return jet_exp(muj * (-t)) * (p + q);
  };
  auto integral = [&](double big_m) {
    const double u = std::sqrt(mu(big_m) + 0.25);
    const double ip = erfc_integral_sqrt(a, u + 0.5, t, true);
    const double im = erfc_integral_sqrt(a, u - 0.5, t, false);
    const double ia = std::exp(-t * mu(big_m)) / (2.0 * a * t);
    return ip + im - 2.0 * ia;
  };
  auto envelope = [&](long m) { return 4.0 * std::exp(-t * minus.eigenvalue(m)); };
  auto rate = [&](long m) { return t * (minus.eigenvalue(m + 1) - minus.eigenvalue(m)); };
  HeatValue fam = smooth_sum(term, jet, integral, envelope, rate, tol);
  const double iso = std::exp(-t * k * k) + std::exp(-t * (k + 1.0) * (k + 1.0));
  quad::KahanSum sum;
  sum.add(std::exp(-t * k * k));
  sum.add(std::exp(-t * (k + 1.0) * (k + 1.0)));
  sum.add(fam.value);
  return {sum.value(), fam.error + 2.0 * kEps * iso};
}

double h_graded_bound_k(double k, double t) {
  Branch minus;
  minus.kind = BranchKind::SqrtMinus;
  minus.a = k;
  minus.c = k * k;
  const double gap = minus.eigenvalue(1) - minus.eigenvalue(0);
  return std::exp(-t * k * k) * (2.0 + 4.0 / (-std::expm1(-t * gap)));
}

namespace {

// sum over n in Z ordered by |n + alpha|; fn(n, k) evaluates one index and
// bound(n, k) majorizes it; the loop stops once the majorant is below tol
// past the peak of the weight times Gaussian.
template <class Fn, class Bound>
HeatValue lattice_loop(double alpha, spectra::KConvention conv, double t, double tol, const Fn& fn,
                       const Bound& bound) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  quad::KahanSum acc;
  double err = 0.0;
  double abs_acc = 0.0;
  long pos = 0;
  long neg = -1;
  auto next = [&]() {
    const double hp = static_cast<double>(pos) + alpha;
    const double hn = -(static_cast<double>(neg) + alpha);
    if (hp <= hn) return pos++;
    return neg--;
  };
  for (long iter = 0;; ++iter) {
    if (iter > 10000000) throw ResourceError("lattice sum: budget exhausted", acc.value(), err);
    const long n = next();
    const double k = spectra::k_of(static_cast<double>(n) + alpha, conv);
    const double b = bound(n, k);
    if ((b <= tol * abs_acc || b == 0.0) && t * k * k > 1.0) {
      // Majorant of the remaining tail on both sides.
      double tail = b;
      for (long extra = 0; extra < 100000; ++extra) {
        const long n2 = next();
        const double k2 = spectra::k_of(static_cast<double>(n2) + alpha, conv);
        const double b2 = bound(n2, k2);
        tail += b2;
        if (b2 < 1e-3 * tail * kEps || b2 == 0.0) break;
      }
      return {acc.value(), err + tail};
    }
    const HeatValue v = fn(n, k);
    acc.add(v.value);
    abs_acc += std::abs(v.value);
    err += v.error;
  }
}

double lattice_weight(LatticeWeight w, long n) {
  switch (w) {
    case LatticeWeight::One: return 1.0;
    case LatticeWeight::Abs: return static_cast<double>(std::labs(n));
    case LatticeWeight::Sign: return n >= 0 ? 1.0 : -1.0;
  }
  return 1.0;
}

}  // namespace

HeatValue lattice_graded_trace(double alpha, LatticeWeight w, double t, spectra::KConvention conv, double tol) {
  require_t(t);
  auto fn = [&](long n, double k) -> HeatValue {
    const double wt = lattice_weight(w, n);
    if (wt == 0.0) return {};
    const HeatValue v = h_graded_trace_k(k, t, tol);
    return {wt * v.value, std::abs(wt) * v.error};
  };
  // Zero weights still report a positive majorant so the n = 0 term cannot end the loop.
  auto bound = [&](long n, double k) { return std::max(1.0, std::abs(lattice_weight(w, n))) * h_graded_bound_k(k, t); };
  return lattice_loop(alpha, conv, t, tol, fn, bound);
}

HeatValue local_heat_trace(const spectra::SpectrumFamily& fam, double t, double tol) {
  require_t(t);
  if (!fam.is_lattice()) {
    quad::KahanSum acc;
    double err = 0.0;
    for (const auto& b : fam.branches) {
      const HeatValue v = branch_trace(b, t, tol);
      acc.add(v.value);
      err += v.error;
    }
    return {acc.value(), err};
  }
  auto fn = [&](long n, double) -> HeatValue {
    quad::KahanSum acc;
    double err = 0.0;
    for (const auto& b : fam.lattice_branches(n)) {
      const HeatValue v = branch_trace(b, t, tol);
      acc.add(v.value);
      err += v.error;
    }
    return {acc.value(), err};
  };
  auto bound = [&](long n, double k) {
    const double mult = std::max(1.0, static_cast<double>(std::labs(n)));
    // Every eigenvalue is >= k^2 with gaps >= min(k, 2k - ...) >= the first Sqrt(-) gap.
    return mult * h_graded_bound_k(k, t) * 1.5;
  };
  return lattice_loop(fam.parameter, fam.convention, t, tol, fn, bound);
}

HeatValue graded_heat_trace(const spectra::GradedSpectrum& gs, double t, double tol) {
  quad::KahanSum acc;
  double err = 0.0;
  for (std::size_t q = 0; q < gs.degrees.size(); ++q) {
    if (gs.weights[q] == 0.0) continue;
    const HeatValue v = local_heat_trace(gs.degrees[q], t, tol);
    acc.add(gs.weights[q] * v.value);
    err += std::abs(gs.weights[q]) * v.error;
  }
  return {acc.value(), err};
}

double gamma_heat_trace_R(double t) {
  require_t(t);
  const double sigma = 1.0 / (2.0 * kPi * std::sqrt(t));
  quad::AdaptiveOptions opt;
  opt.abs_tol = 0.0;
  opt.rel_tol = 1e-13;
  opt.initial_panels = 4;
  auto f = [&](double x) {
    const double h = sigma * x;
    return 2.0 * std::exp(-4.0 * kPi * kPi * h * h * t) * sigma;
  };
  const quad::QuadResult r = quad::integrate_to_infinity(f, 0.0, opt);
  if (!r.converged) throw ResourceError("gamma_heat_trace_R: quadrature did not converge", r.value, r.error);
  const double closed = 1.0 / (2.0 * std::sqrt(kPi * t));
  if (std::abs(r.value - closed) > 1e-10 * closed) {
    throw IdentityGateError("gamma_heat_trace_R: quadrature disagrees with 1/(2 sqrt(pi t))", r.value, closed);
  }
  return r.value;
}

namespace {

// Integration limit in k beyond which the Gaussian bound is negligible.
double k_cutoff(double t) { return std::sqrt(60.0 / t); }

double gamma_tail_bound(double t, double kmax) {
  Branch minus;
  minus.kind = BranchKind::SqrtMinus;
  minus.a = kmax;
  minus.c = kmax * kmax;
  const double gap = minus.eigenvalue(1) - minus.eigenvalue(0);
  const double scale = 2.0 / (4.0 * kPi * kPi);
  return scale * (2.0 + 4.0 / (-std::expm1(-t * gap))) * std::exp(-t * kmax * kmax) / (2.0 * t);
}

}  // namespace

HeatValue gamma_heat_trace_H(double t, double h_lo, double rel_tol, int max_panels) {
  require_t(t);
  const double scale = 2.0 / (4.0 * kPi * kPi);
  const double k_lo = 2.0 * kPi * h_lo;
  const double kmax = k_cutoff(t);
  if (k_lo >= kmax) return {0.0, gamma_tail_bound(t, k_lo)};
  double trunc = 0.0;
  auto f = [&](double k) {
    const HeatValue v = h_graded_trace_k(k, t, 1e-16);
    trunc = std::max(trunc, std::abs(v.error));
    return scale * v.value * k;
  };
  quad::AdaptiveOptions opt;
  opt.abs_tol = 0.0;
  opt.rel_tol = rel_tol;
  opt.max_panels = max_panels;
  opt.initial_panels = 16;
  const quad::QuadResult r = quad::integrate(f, k_lo, kmax, opt);
  if (!r.converged) throw ResourceError("gamma_heat_trace_H: quadrature did not converge", r.value, r.error);
  const double tail = gamma_tail_bound(t, kmax);
  return {r.value, r.error + tail + scale * trunc * kmax * kmax};
}

double gamma_heat_trace_H_fixed(double t, int panels, int order, double h_lo) {
  require_t(t);
  const double scale = 2.0 / (4.0 * kPi * kPi);
  const double k_lo = 2.0 * kPi * h_lo;
  const double kmax = std::max(k_lo, k_cutoff(t));
  auto f = [&](double k) { return scale * h_graded_trace_k(k, t, 1e-16).value * k; };
  return quad::integrate_gl_panels(f, k_lo, kmax, panels, order);
}

HeatCurve curve_isolated(double lambda) {
  HeatCurve c;
  c.sample = [lambda](double t) { return HeatValue{std::exp(-t * lambda), 0.0}; };
  std::ostringstream os;
  os.precision(17);
  os << "isolated(" << lambda << ")";
  c.descriptor = os.str();
  c.spectral_scale = lambda;
  c.ladder = {0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
  return c;
}

HeatCurve curve_local(const spectra::SpectrumFamily& fam) {
  HeatCurve c;
  c.sample = [fam](double t) { return local_heat_trace(fam, t); };
  c.descriptor = std::string("local:") + spectra::to_string(fam.tag);
  double scale = 1.0;
  bool half = false;
  bool arith = false;
  for (const auto& b : fam.branches) {
    scale = std::max(scale, b.eigenvalue(0));
    if (b.kind == BranchKind::Quadratic || b.kind == BranchKind::SqrtPlus || b.kind == BranchKind::SqrtMinus)
      half = true;
    if (b.kind == BranchKind::Arithmetic || b.kind == BranchKind::SqrtPlus || b.kind == BranchKind::SqrtMinus)
      arith = true;
  }
  c.dimension = fam.dimension();
  if (fam.is_lattice()) {
    scale = 4.0 * kPi * kPi;
    c.ladder = {-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0};
  } else if (fam.tag == spectra::GroupTag::Circle) {
    scale = 4.0 * kPi * kPi;
    c.ladder = {-0.5, 0.0, 0.5, 1.0};
  } else if (half) {
    c.ladder = {-1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
  } else if (arith) {
    c.ladder = {-1.0, 0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
  } else {
    c.ladder = {0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
  }
  c.spectral_scale = scale;
  return c;
}

HeatCurve curve_graded(const spectra::GradedSpectrum& gs) {
  HeatCurve c;
  c.descriptor = std::string("graded:") + spectra::to_string(gs.tag);
  switch (gs.tag) {
    case spectra::GroupTag::HLocal: {
      const double k = spectra::k_of(gs.parameter);
      c.sample = [k](double t) { return h_graded_trace_k(k, t); };
      c.spectral_scale = std::max(1.0, (k + 1.0) * (k + 1.0));
      c.dimension = 3;
      c.ladder = {-1.0, 0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
      break;
    }
    case spectra::GroupTag::Hred:
    case spectra::GroupTag::NQuotient: {
      const double alpha = gs.parameter;
      const auto conv = gs.convention;
      const auto w = gs.tag == spectra::GroupTag::Hred ? LatticeWeight::One : LatticeWeight::Abs;
      c.sample = [alpha, conv, w](double t) { return lattice_graded_trace(alpha, w, t, conv); };
      // Window (1e-5, 1e-3); the t^3 rung keeps the fit misfit near 1e-7.
      c.spectral_scale = 10.0;
      c.dimension = 3;
      c.ladder = {-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
      break;
    }
    default: {
      const auto red = gs.reduced();
      c.sample = [red](double t) {
        quad::KahanSum acc;
        double err = 0.0;
        for (const auto& wb : red) {
          const HeatValue v = branch_trace(wb.branch, t);
          acc.add(wb.weight * v.value);
          err += std::abs(wb.weight) * v.error;
        }
        return HeatValue{acc.value(), err};
      };
      double scale = 1.0;
      for (const auto& wb : red) scale = std::max(scale, wb.branch.eigenvalue(0));
      c.dimension = 1;
      if (gs.tag == spectra::GroupTag::Circle) {
        scale = 4.0 * kPi * kPi;
        c.ladder = {-0.5, 0.0, 0.5, 1.0};
      } else {
        c.ladder = {0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
      }
      c.spectral_scale = scale;
    }
  }
  return c;
}

}  // namespace torsionlab::heat
