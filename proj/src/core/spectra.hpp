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

// Closed-form spectra of the localized and twisted Laplacians.

#pragma once

#include <array>
#include <string>
#include <vector>

namespace torsionlab::spectra {

enum class BranchKind { Isolated, Arithmetic, SqrtPlus, SqrtMinus, Quadratic };

const char* to_string(BranchKind kind);

// One eigenvalue branch. Families are indexed by m = 0, 1, 2, ...
//   Arithmetic: a(2m+1) + c
//   SqrtPlus/SqrtMinus: (sqrt(a(2m+1) + c + 1/4) +- 1/2)^2
//   Quadratic: a (m + c)^2   (half of a Z-indexed lattice)
//   Isolated: the single value `lambda`
struct Branch {
  BranchKind kind = BranchKind::Isolated;
  double a = 0.0;
  double c = 0.0;
  double lambda = 0.0;
  double multiplicity = 1.0;
  long outer_n = 0;  // Fourier index for lattice families, 0 otherwise

  bool is_family() const { return kind != BranchKind::Isolated; }
  double eigenvalue(long m) const;
  // Number of indices (1 for Isolated, -1 meaning infinite).
  long size() const { return is_family() ? -1 : 1; }
};

enum class GroupTag { RLocal, Circle, HLocal, Hred, NQuotient };

const char* to_string(GroupTag tag);
GroupTag group_tag_from_string(const std::string& s);

// Relation between the Fourier index and the representation parameter.
enum class KConvention { TwoPi, Bare };

KConvention k_convention_from_string(const std::string& s);
const char* to_string(KConvention c);

// k = 2 pi |h| or |h|.
double k_of(double h, KConvention conv = KConvention::TwoPi);

struct SpectrumFamily {
  GroupTag tag = GroupTag::RLocal;
  int degree = 0;
  double parameter = 0.0;
  KConvention convention = KConvention::TwoPi;
  // For RLocal, Circle and HLocal this is the whole spectrum. For Hred and
  // NQuotient it is empty; use lattice_branches().
  std::vector<Branch> branches;

  bool is_lattice() const { return tag == GroupTag::Hred || tag == GroupTag::NQuotient; }
  int dimension() const { return (tag == GroupTag::RLocal || tag == GroupTag::Circle) ? 1 : 3; }
  // Branches belonging to Fourier index n (lattice tags only).
  std::vector<Branch> lattice_branches(long n) const;
};

SpectrumFamily circle_spectrum(double alpha, int q);
SpectrumFamily r_local_spectrum(double h, int q);
SpectrumFamily h_local_spectrum(double h, int q);
SpectrumFamily hred_spectrum(double alpha, int q, KConvention conv = KConvention::TwoPi);
SpectrumFamily n_quotient_spectrum(double alpha, int q, KConvention conv = KConvention::TwoPi);

// H-local branches at a given k > 0 (degree q in 0..3).
std::vector<Branch> h_branches_k(double k, int q);

// Dispatch on tag.
SpectrumFamily family(GroupTag tag, double parameter, int q, KConvention conv = KConvention::TwoPi);

struct WeightedBranch {
  double weight;
  Branch branch;
};

struct GradedSpectrum {
  GroupTag tag = GroupTag::RLocal;
  double parameter = 0.0;
  KConvention convention = KConvention::TwoPi;
  std::vector<SpectrumFamily> degrees;  // index q
  std::vector<double> weights;          // (-1)^q q

  // Weighted multiset after the duality cancellation: dimension 3 gives
  // (+1) x degree 1 and (-3) x degree 0; dimension 1 gives (-1) x degree 1.
  std::vector<WeightedBranch> reduced() const;
  // Same reduction for a lattice family at Fourier index n.
  std::vector<WeightedBranch> reduced_lattice(long n) const;
};

GradedSpectrum graded(GroupTag tag, double parameter, KConvention conv = KConvention::TwoPi);

// Structural equality of two branch lists (same kinds and parameters, any order).
bool same_multiset(const std::vector<Branch>& x, const std::vector<Branch>& y);

}  // namespace torsionlab::spectra
