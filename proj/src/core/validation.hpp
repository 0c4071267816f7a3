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

// Closed-form versus generic-engine validation grid.

#pragma once

#include <string>
#include <vector>

#include "torsion.hpp"

namespace torsionlab::validation {

struct CheckRow {
  std::string family;
  double parameter;
  double closed_zeta0;
  double engine_zeta0;
  double closed_deriv;
  double engine_deriv;
  double engine_error;
  double split_spread;  // max |zeta'(0)| change over splits {0.5, 2} x spec.split
  double tolerance;
  bool passed;
};

struct CheckResult {
  std::vector<CheckRow> rows;
  int failures = 0;
};

// Isolated eigenvalues, circle, t0 and z families, R- and H-local graded
// spectra. A row passes when zeta(0) and zeta'(0) agree within `tolerance`
// and the split spread stays within the reported error.
CheckResult zeta_check(const torsion::QuadratureSpec& spec, double tolerance = 1e-3);

// Fixed-width text table.
std::string format_table(const CheckResult& r);

}  // namespace torsionlab::validation
