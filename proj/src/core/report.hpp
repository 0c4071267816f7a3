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

// JSON reports, run configuration, and CSV dumps of spectra and heat traces.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spectra.hpp"
#include "torsion.hpp"
#include "validation.hpp"

namespace torsionlab::report {

struct RunConfig {
  std::string command;
  std::vector<std::pair<std::string, double>> numbers;
  std::vector<std::pair<std::string, std::string>> strings;
  std::string output = "json";
  std::string output_path;
  bool deterministic = true;  // always on; kept in the serialized form

  std::string to_json() const;
  static RunConfig from_json(const std::string& text);  // throws DomainError
  bool operator==(const RunConfig&) const = default;
};

// {quantity, value, error, route, components, discrepancies, config}.
// Numbers use 17 significant digits; non-finite values become null.
std::string to_json(const torsion::TorsionReport& rep, const RunConfig& cfg);
std::string to_json(const validation::CheckResult& res, const RunConfig& cfg);

// Header row, LF line endings. Non-lattice families list indices m < count per
// branch; lattice families also run over |n| <= count (n = 0 included when
// present).
std::string spectrum_csv(spectra::GroupTag tag, double parameter, int degree, int count,
                         spectra::KConvention conv = spectra::KConvention::TwoPi);

// Graded trace and the per-degree traces on n log-spaced times in [lo, hi].
std::string heat_csv(spectra::GroupTag tag, double parameter, double lo, double hi, int n,
                     spectra::KConvention conv = spectra::KConvention::TwoPi);

// "%.17g"
std::string format_number(double v);

}  // namespace torsionlab::report
