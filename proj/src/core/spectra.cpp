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

#include "spectra.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "errors.hpp"
#include "specfun.hpp"

namespace torsionlab::spectra {
namespace {

constexpr double kFourPiSq = 4.0 * specfun::kPi * specfun::kPi;

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
}

void require_h(double h) {
  if (h == 0.0 || !std::isfinite(h)) throw DomainError("h must be a nonzero finite real");
}

void require_degree(int q, int dim) {
  if (q < 0 || q > dim) throw DomainError("degree out of range");
}

Branch isolated(double lambda) {
  Branch b;
  b.kind = BranchKind::Isolated;
  b.lambda = lambda;
  return b;
}

Branch fam(BranchKind kind, double a, double c) {
  Branch b;
  b.kind = kind;
  b.a = a;
  b.c = c;
  return b;
}

}  // namespace

const char* to_string(BranchKind kind) {
  switch (kind) {
    case BranchKind::Isolated: return "Isolated";
    case BranchKind::Arithmetic: return "ArithmeticFamily";
    case BranchKind::SqrtPlus: return "SqrtPlusFamily";
    case BranchKind::SqrtMinus: return "SqrtMinusFamily";
    case BranchKind::Quadratic: return "QuadraticFamily";
  }
  return "?";
}

const char* to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::RLocal: return "r_local";
    case GroupTag::Circle: return "circle";
    case GroupTag::HLocal: return "h_local";
    case GroupTag::Hred: return "hred";
    case GroupTag::NQuotient: return "n_quotient";
  }
  return "?";
}

GroupTag group_tag_from_string(const std::string& s) {
  if (s == "r_local" || s == "r") return GroupTag::RLocal;
  if (s == "circle") return GroupTag::Circle;
  if (s == "h_local" || s == "h") return GroupTag::HLocal;
  if (s == "hred") return GroupTag::Hred;
  if (s == "n_quotient" || s == "n") return GroupTag::NQuotient;
  throw DomainError("unknown spectrum family: " + s);
}

KConvention k_convention_from_string(const std::string& s) {
  if (s == "2pi") return KConvention::TwoPi;
  if (s == "bare") return KConvention::Bare;
  throw DomainError("unknown k convention: " + s);
}

const char* to_string(KConvention c) { return c == KConvention::TwoPi ? "2pi" : "bare"; }

double k_of(double h, KConvention conv) {
  return conv == KConvention::TwoPi ? 2.0 * specfun::kPi * std::abs(h) : std::abs(h);
}

double Branch::eigenvalue(long m) const {
  const double mm = static_cast<double>(m);
  switch (kind) {
    case BranchKind::Isolated: return lambda;
    case BranchKind::Arithmetic: return a * (2.0 * mm + 1.0) + c;
    case BranchKind::SqrtPlus: {
      const double u = std::sqrt(a * (2.0 * mm + 1.0) + c + 0.25);
      return (u + 0.5) * (u + 0.5);
    }
    case BranchKind::SqrtMinus: {
      // (u - 1/2)^2 = (u^2 - 1/4)^2 / (u + 1/2)^2 avoids cancellation.
      const double w = a * (2.0 * mm + 1.0) + c;
      const double u = std::sqrt(w + 0.25);
      const double r = w / (u + 0.5);
      return r * r;
    }
    case BranchKind::Quadratic: return a * (mm + c) * (mm + c);
  }
  return 0.0;
}

std::vector<Branch> h_branches_k(double k, int q) {
  require_degree(q, 3);
  if (!(k > 0.0)) throw DomainError("k must be positive");
  if (q == 0 || q == 3) return {fam(BranchKind::Arithmetic, k, k * k)};
  return {isolated(k * k), isolated((k + 1.0) * (k + 1.0)), fam(BranchKind::Arithmetic, k, k * k),
          fam(BranchKind::SqrtPlus, k, k * k), fam(BranchKind::SqrtMinus, k, k * k)};
}

SpectrumFamily circle_spectrum(double alpha, int q) {
  require_alpha(alpha);
  require_degree(q, 1);
  SpectrumFamily f;
  f.tag = GroupTag::Circle;
  f.degree = q;
  f.parameter = alpha;
  // n >= 0 gives (m + alpha)^2, n = -1 - m gives (m + 1 - alpha)^2.
  Branch pos = fam(BranchKind::Quadratic, kFourPiSq, alpha);
  Branch neg = fam(BranchKind::Quadratic, kFourPiSq, 1.0 - alpha);
  neg.outer_n = -1;
  f.branches = {pos, neg};
  return f;
}

SpectrumFamily r_local_spectrum(double h, int q) {
  require_h(h);
  require_degree(q, 1);
  SpectrumFamily f;
  f.tag = GroupTag::RLocal;
  f.degree = q;
  f.parameter = h;
  f.branches = {isolated(kFourPiSq * h * h)};
  return f;
}

SpectrumFamily h_local_spectrum(double h, int q) {
  require_h(h);
  require_degree(q, 3);
  SpectrumFamily f;
  f.tag = GroupTag::HLocal;
  f.degree = q;
  f.parameter = h;
  f.branches = h_branches_k(k_of(h), q);
  return f;
}

SpectrumFamily hred_spectrum(double alpha, int q, KConvention conv) {
  require_alpha(alpha);
  require_degree(q, 3);
  SpectrumFamily f;
  f.tag = GroupTag::Hred;
  f.degree = q;
  f.parameter = alpha;
  f.convention = conv;
  return f;
}

SpectrumFamily n_quotient_spectrum(double alpha, int q, KConvention conv) {
  SpectrumFamily f = hred_spectrum(alpha, q, conv);
  f.tag = GroupTag::NQuotient;
  return f;
}

std::vector<Branch> SpectrumFamily::lattice_branches(long n) const {
  if (!is_lattice()) throw DomainError("lattice_branches: not a lattice family");
  double mult = 1.0;
  if (tag == GroupTag::NQuotient) {
    mult = static_cast<double>(std::labs(n));
    if (n == 0) return {};
  }
  std::vector<Branch> out = h_branches_k(k_of(static_cast<double>(n) + parameter, convention), degree);
  for (auto& b : out) {
    b.multiplicity = mult;
    b.outer_n = n;
  }
  return out;
}

SpectrumFamily family(GroupTag tag, double parameter, int q, KConvention conv) {
  switch (tag) {
    case GroupTag::RLocal: return r_local_spectrum(parameter, q);
    case GroupTag::Circle: return circle_spectrum(parameter, q);
    case GroupTag::HLocal: return h_local_spectrum(parameter, q);
    case GroupTag::Hred: return hred_spectrum(parameter, q, conv);
    case GroupTag::NQuotient: return n_quotient_spectrum(parameter, q, conv);
  }
  throw DomainError("unknown group tag");
}

GradedSpectrum graded(GroupTag tag, double parameter, KConvention conv) {
  GradedSpectrum g;
  g.tag = tag;
  g.parameter = parameter;
  g.convention = conv;
  const int dim = (tag == GroupTag::RLocal || tag == GroupTag::Circle) ? 1 : 3;
  for (int q = 0; q <= dim; ++q) {
    g.degrees.push_back(family(tag, parameter, q, conv));
    g.weights.push_back((q % 2 == 0 ? 1.0 : -1.0) * q);
  }
  return g;
}

namespace {

std::vector<WeightedBranch> reduce(const std::vector<double>& weights, const std::vector<Branch>& b0,
                                   const std::vector<Branch>& b1) {
  std::vector<WeightedBranch> out;
  if (weights.size() == 2) {
    for (const auto& b : b1) out.push_back({weights[1], b});
    return out;
  }
  // Sp^2 = Sp^1 and Sp^3 = Sp^0.
  const double w1 = weights[1] + weights[2];
  const double w0 = weights[0] + weights[3];
  for (const auto& b : b1) out.push_back({w1, b});
  for (const auto& b : b0) out.push_back({w0, b});
  return out;
}

}  // namespace

std::vector<WeightedBranch> GradedSpectrum::reduced() const {
  return reduce(weights, degrees.at(0).branches, degrees.at(1).branches);
}

std::vector<WeightedBranch> GradedSpectrum::reduced_lattice(long n) const {
  return reduce(weights, degrees.at(0).lattice_branches(n), degrees.at(1).lattice_branches(n));
}

bool same_multiset(const std::vector<Branch>& x, const std::vector<Branch>& y) {
  if (x.size() != y.size()) return false;
  auto key = [](const Branch& b) {
    return std::make_tuple(static_cast<int>(b.kind), b.a, b.c, b.lambda, b.multiplicity, b.outer_n);
  };
  std::vector<decltype(key(x[0]))> kx;
  std::vector<decltype(key(x[0]))> ky;
  for (const auto& b : x) kx.push_back(key(b));
  for (const auto& b : y) ky.push_back(key(b));
  std::sort(kx.begin(), kx.end());
  std::sort(ky.begin(), ky.end());
  return kx == ky;
}

}  // namespace torsionlab::spectra
