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

#include "quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <tuple>

#include "errors.hpp"

namespace torsionlab::quad {
namespace {

// Kronrod 15-point abscissae (nonnegative half) and weights; Gauss 7-point
// weights sit on the odd Kronrod nodes.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

Panel gk15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kron = fc * kWk[7];
  double gauss = fc * kWg[3];
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    kron += kWk[j] * (f1[j] + f2[j]);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1[j] + f2[j]);
  }
  const double value = kron * half;
  double err = std::abs((kron - gauss) * half);
  // QUADPACK-style error scaling.
  const double mean = 0.5 * kron;
  double asc = kWk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) asc += kWk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  asc *= std::abs(half);
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  const double round = 50.0 * std::numeric_limits<double>::epsilon() * std::abs(value);
  err = std::max(err, round);
  if (!std::isfinite(value)) throw DomainError("quadrature: integrand is not finite on the panel");
  return {a, b, value, err};
}

struct PanelOrder {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  }
};

}  // namespace

void KahanSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    comp_ += (sum_ - t) + x;
  } else {
    comp_ += (x - t) + sum_;
  }
  sum_ = t;
}

QuadResult integrate(const Integrand& f, double a, double b, const AdaptiveOptions& opt) {
  QuadResult out;
  if (a == b) return out;
  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
  const int init = std::max(1, opt.initial_panels);
  double total_err = 0.0;
  for (int i = 0; i < init; ++i) {
    const double lo = a + (b - a) * i / init;
    const double hi = (i + 1 == init) ? b : a + (b - a) * (i + 1) / init;
    Panel p = gk15(f, lo, hi);
    total_err += p.error;
    heap.push(p);
  }
  out.evaluations = 15 * init;
  auto current_value = [&heap]() {
    // Sum in position order for a reproducible reduction.
    std::vector<Panel> panels;
    auto copy = heap;
    while (!copy.empty()) {
      panels.push_back(copy.top());
      copy.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    KahanSum v;
    KahanSum e;
    for (const auto& p : panels) {
      v.add(p.value);
      e.add(p.error);
    }
    return std::pair<double, double>(v.value(), e.value());
  };
  double value = 0.0;
  for (;;) {
    auto [v, e] = current_value();
    value = v;
    total_err = e;
    if (total_err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(value))) break;
    if (static_cast<int>(heap.size()) >= opt.max_panels) {
      out.converged = false;
      break;
    }
    // Refine the worst panels in a batch to keep the bookkeeping cheap.
    const int batch = std::max<int>(1, static_cast<int>(heap.size()) / 4);
    for (int i = 0; i < batch && !heap.empty(); ++i) {
      Panel worst = heap.top();
      heap.pop();
      const double mid = 0.5 * (worst.a + worst.b);
      if (mid <= worst.a || mid >= worst.b) {
        // Panel cannot be split further in double precision.
        heap.push(worst);
        out.converged = false;
        break;
      }
      heap.push(gk15(f, worst.a, mid));
      heap.push(gk15(f, mid, worst.b));
      out.evaluations += 30;
    }
    if (!out.converged) {
      auto [v2, e2] = current_value();
      value = v2;
      total_err = e2;
      break;
    }
  }
  out.value = value;
  out.error = total_err;
  out.panels = static_cast<int>(heap.size());
  return out;
}

QuadResult integrate_to_infinity(const Integrand& f, double a, const AdaptiveOptions& opt) {
  auto mapped = [&f, a](double u) {
    if (u >= 1.0) return 0.0;
    const double one_minus = 1.0 - u;
    const double x = a + u / one_minus;
    const double fx = f(x);
    if (fx == 0.0) return 0.0;
    return fx / (one_minus * one_minus);
  };
  return integrate(mapped, 0.0, 1.0, opt);
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: order must be positive");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = (n == 1) ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

GaussLegendreRule gauss_legendre(int n, double a, double b) {
  GaussLegendreRule rule = gauss_legendre(n);
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = c + h * rule.nodes[i];
    rule.weights[i] *= h;
  }
  return rule;
}

double integrate_gl_panels(const Integrand& f, double a, double b, int panels, int order) {
  const GaussLegendreRule ref = gauss_legendre(order);
  KahanSum sum;
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + width * p;
    const double c = lo + 0.5 * width;
    for (int i = 0; i < order; ++i) sum.add(0.5 * width * ref.weights[i] * f(c + 0.5 * width * ref.nodes[i]));
  }
  return sum.value();
}

}  // namespace torsionlab::quad
