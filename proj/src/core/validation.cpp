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

#include "validation.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "closed_forms.hpp"
#include "heat_trace.hpp"
#include "parallel.hpp"
#include "specfun.hpp"
#include "spectra.hpp"
#include "zeta_reg.hpp"

namespace torsionlab::validation {
namespace {

struct Case {
  std::string family;
  double parameter;
  std::function<heat::HeatCurve()> curve;
  double zeta0;
  double deriv;
};

heat::HeatCurve arithmetic_curve(double a, double c) {
  spectra::SpectrumFamily fam;
  fam.tag = spectra::GroupTag::HLocal;
  spectra::Branch b;
  b.kind = spectra::BranchKind::Arithmetic;
  b.a = a;
  b.c = c;
  fam.branches.push_back(b);
  return heat::curve_local(fam);
}

std::vector<Case> cases() {
  std::vector<Case> out;
  for (double lam : {0.5, 2.0, 10.0}) {
    out.push_back({"isolated", lam, [lam] { return heat::curve_isolated(lam); }, 1.0, -std::log(lam)});
  }
  for (double a : {0.1, 0.25, 0.5}) {
    out.push_back({"circle", a,
                   [a] { return heat::curve_graded(spectra::graded(spectra::GroupTag::Circle, a)); },
                   closed::t_circle(0.0, a), closed::torsion_circle(a)});
  }
  for (double k : {0.5, 1.0, 2.0, 7.0}) {
    out.push_back({"t0", k, [k] { return arithmetic_curve(k, k * k); }, closed::t0_at0(k), closed::t0_ds0(k)});
  }
  for (double k : {0.5, 1.0, 2.0, 7.0}) {
    out.push_back({"z", k, [k] { return arithmetic_curve(k, k * k + 0.25); }, closed::z_at0(k), closed::z_ds0(k)});
  }
  for (double h : {0.5, 1.0}) {
    out.push_back({"r_local", h,
                   [h] { return heat::curve_graded(spectra::graded(spectra::GroupTag::RLocal, h)); }, -1.0,
                   closed::torsion_R_local(h)});
  }
  for (double h : {0.1, 1.0 / (2.0 * specfun::kPi), 0.5, 2.0}) {
    out.push_back({"h_local", h,
                   [h] { return heat::curve_graded(spectra::graded(spectra::GroupTag::HLocal, h)); },
                   closed::tH_at0(h), closed::tH_ds0(h)});
  }
  return out;
}

}  // namespace

CheckResult zeta_check(const torsion::QuadratureSpec& spec, double tolerance) {
  spec.validate();
  const std::vector<Case> cs = cases();
  CheckResult res;
  res.rows.resize(cs.size());
  const zeta::EngineOptions opt = torsion::engine_options(spec);
  parallel_for(cs.size(), [&](std::size_t i) {
    const Case& c = cs[i];
    const heat::HeatCurve curve = c.curve();
    const zeta::ZetaResult r = zeta::run_engine(curve, opt);
    double spread = 0.0;
    for (double f : {0.5, 2.0}) {
      const double v = zeta::mellin_zeta_at0(curve, r.expansion, f * spec.split, opt.quad).deriv_at_0;
      spread = std::max(spread, std::abs(v - r.deriv_at_0));
    }
    CheckRow row{c.family, c.parameter, c.zeta0, r.value_at_0, c.deriv, r.deriv_at_0, r.error_estimate,
                 spread, tolerance, false};
    // Split changes only move the quadrature breakpoints; allow rounding on top.
    const double split_budget = r.error_estimate + 1e-12 * std::max(1.0, std::abs(r.deriv_at_0));
    row.passed = std::abs(row.engine_zeta0 - row.closed_zeta0) <= tolerance &&
                 std::abs(row.engine_deriv - row.closed_deriv) <= tolerance && spread <= split_budget;
    res.rows[i] = row;
  });
  for (const auto& row : res.rows) res.failures += row.passed ? 0 : 1;
  return res;
}

std::string format_table(const CheckResult& r) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-9s %10s %12s %12s %10s %10s %4s\n", "family", "param", "closed", "engine",
                "diff", "error", "ok");
  out += buf;
  for (const auto& row : r.rows) {
    std::snprintf(buf, sizeof buf, "%-9s %10.6f %12.8f %12.8f %10.2e %10.2e %4s\n", row.family.c_str(),
                  row.parameter, row.closed_deriv, row.engine_deriv, row.engine_deriv - row.closed_deriv,
                  row.engine_error, row.passed ? "yes" : "NO");
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "%zu rows, %d failed\n", r.rows.size(), r.failures);
  out += buf;
  return out;
}

}  // namespace torsionlab::validation
