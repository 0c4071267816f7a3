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

// Truncated Taylor series arithmetic: a Jet holds f(x0 + e) = sum_n c[n] e^n.

#pragma once

#include <array>
#include <cmath>

namespace torsionlab {

template <int N>
struct Jet {
  std::array<double, N + 1> c{};

  static Jet constant(double v) {
    Jet j;
    j.c[0] = v;
    return j;
  }
  static Jet variable(double x0) {
    Jet j;
    j.c[0] = x0;
    if (N >= 1) j.c[1] = 1.0;
    return j;
  }

  Jet operator+(const Jet& o) const {
    Jet r;
    for (int i = 0; i <= N; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }
  Jet operator-(const Jet& o) const {
    Jet r;
    for (int i = 0; i <= N; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }
  Jet operator*(double s) const {
    Jet r;
    for (int i = 0; i <= N; ++i) r.c[i] = c[i] * s;
    return r;
  }
  Jet operator+(double s) const {
    Jet r = *this;
    r.c[0] += s;
    return r;
  }
  Jet operator*(const Jet& o) const {
    Jet r;
    for (int n = 0; n <= N; ++n) {
      double acc = 0.0;
      for (int k = 0; k <= n; ++k) acc += c[k] * o.c[n - k];
      r.c[n] = acc;
    }
    return r;
  }
};

// exp of a jet; if minus_one, the constant term is expm1(c0).
template <int N>
Jet<N> jet_exp(const Jet<N>& h, bool minus_one = false) {
  Jet<N> g;
  g.c[0] = std::exp(h.c[0]);
  for (int n = 1; n <= N; ++n) {
    double acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += k * h.c[k] * g.c[n - k];
    g.c[n] = acc / n;
  }
  if (minus_one) g.c[0] = std::expm1(h.c[0]);
  return g;
}

template <int N>
Jet<N> jet_sqrt(const Jet<N>& h) {
  Jet<N> g;
  g.c[0] = std::sqrt(h.c[0]);
  for (int n = 1; n <= N; ++n) {
    double acc = h.c[n];
    for (int k = 1; k < n; ++k) acc -= g.c[k] * g.c[n - k];
    g.c[n] = acc / (2.0 * g.c[0]);
  }
  return g;
}

}  // namespace torsionlab
