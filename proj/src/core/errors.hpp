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

#pragma once

#include <stdexcept>
#include <string>

namespace torsionlab {

// Base of all library errors. The C API maps each subclass onto a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation requested at (or within tolerance of) a pole.
class PoleError : public DomainError {
 public:
  PoleError(const std::string& what, double location, double residue)
      : DomainError(what), location_(location), residue_(residue) {}
  double location() const { return location_; }
  double residue() const { return residue_; }

 private:
  double location_;
  double residue_;
};

// A tolerance could not be reached inside the configured work budget.
// Carries the best value found and its error bound.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, double best_value, double best_error)
      : Error(what), best_value_(best_value), best_error_(best_error) {}
  double best_value() const { return best_value_; }
  double best_error() const { return best_error_; }

 private:
  double best_value_;
  double best_error_;
};

// Small-time fit failed (ill-conditioned design or residual above tolerance).
class FitError : public Error {
 public:
  using Error::Error;
};

// A pre-continuation identity that must hold exactly failed numerically.
class IdentityGateError : public Error {
 public:
  IdentityGateError(const std::string& what, double lhs, double rhs)
      : Error(what), lhs_(lhs), rhs_(rhs) {}
  double lhs() const { return lhs_; }
  double rhs() const { return rhs_; }

 private:
  double lhs_;
  double rhs_;
};

}  // namespace torsionlab
