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

// Command-line front end. Links only the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "torsionlab/torsionlab.h"

namespace {

// Exit codes: 0 ok, 1 usage, 2 domain, 3 resource or convergence, 4 identity gate.
int exit_code(tl_status s) {
  switch (s) {
    case TL_OK: return 0;
    case TL_ERR_USAGE: return 1;
    case TL_ERR_DOMAIN:
    case TL_ERR_POLE: return 2;
    case TL_ERR_IDENTITY: return 4;
    case TL_ERR_RESOURCE:
    case TL_ERR_FIT:
    case TL_ERR_INTERNAL: return 3;
  }
  return 3;
}

struct Options {
  double delta = 1.0;
  double epsilon = 0.1;
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double split = 1.0;
  int max_panels = 4000;
  int alpha_grid = 64;
  int threads = 0;
  std::string k_convention = "2pi";
  std::string output_path;
};

int fail(tl_context* ctx, tl_status st) {
  std::cerr << "torsionlab: " << tl_status_name(st) << " error: " << tl_last_error(ctx) << "\n";
  return exit_code(st);
}

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "torsionlab: cannot write " << path << "\n";
    return 3;
  }
  f << text;
  return f ? 0 : 3;
}

// Takes the slot, not the pointer: the slot is filled by the call that
// produces `st`.
int emit_report(tl_context* ctx, tl_status st, tl_report** slot, const std::string& path) {
  if (st != TL_OK) return fail(ctx, st);
  const int rc = emit(tl_report_json(*slot), path);
  tl_report_destroy(*slot);
  return rc;
}

int emit_string(tl_context* ctx, tl_status st, char** slot, const std::string& path) {
  if (st != TL_OK) return fail(ctx, st);
  const int rc = emit(*slot, path);
  tl_string_free(*slot);
  return rc;
}

tl_status configure(tl_context* ctx, const Options& o) {
  tl_status st = TL_OK;
  auto chain = [&](tl_status s) {
    if (st == TL_OK) st = s;
  };
  chain(tl_set_double(ctx, "delta", o.delta));
  chain(tl_set_double(ctx, "epsilon", o.epsilon));
  chain(tl_set_double(ctx, "abs_tol", o.abs_tol));
  chain(tl_set_double(ctx, "rel_tol", o.rel_tol));
  chain(tl_set_double(ctx, "split", o.split));
  chain(tl_set_int(ctx, "max_panels", o.max_panels));
  chain(tl_set_int(ctx, "alpha_grid", o.alpha_grid));
  if (o.threads > 0) chain(tl_set_int(ctx, "threads", o.threads));
  chain(tl_set_string(ctx, "k_convention", o.k_convention.c_str()));
  chain(tl_set_string(ctx, "output_path", o.output_path.c_str()));
  // Range problems in the numeric settings are domain errors, not usage.
  return st == TL_ERR_USAGE ? TL_ERR_DOMAIN : st;
}

// "LO:HI:N"
bool parse_grid(const std::string& s, double& lo, double& hi, int& n) {
  const auto a = s.find(':');
  const auto b = s.find(':', a == std::string::npos ? a : a + 1);
  if (a == std::string::npos || b == std::string::npos) return false;
  try {
    std::size_t used = 0;
    lo = std::stod(s.substr(0, a), &used);
    if (used != a) return false;
    hi = std::stod(s.substr(a + 1, b - a - 1), &used);
    if (used != b - a - 1) return false;
    n = std::stoi(s.substr(b + 1), &used);
    if (used != s.size() - b - 1) return false;
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"torsionlab: analytic torsion of Heisenberg and abelian model spaces"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--delta", o.delta, "spectral split for the Plancherel integral");
    sub->add_option("--epsilon", o.epsilon, "time split for the heat-trace route");
    sub->add_option("--abs-tol", o.abs_tol, "absolute quadrature tolerance");
    sub->add_option("--rel-tol", o.rel_tol, "relative quadrature tolerance");
    sub->add_option("--split", o.split, "Mellin split for engine runs");
    sub->add_option("--max-panels", o.max_panels, "quadrature panel budget");
    sub->add_option("--alpha-grid", o.alpha_grid, "Gauss-Legendre nodes on (0, 1)");
    sub->add_option("--threads", o.threads, "worker threads (default: TORSIONLAB_THREADS or all cores)");
    sub->add_option("--k-convention", o.k_convention, "lattice parameter convention")
        ->check(CLI::IsMember({"2pi", "bare"}));
    sub->add_option("-o,--output", o.output_path, "write to file instead of stdout");
  };

  auto* torsion = app.add_subcommand("torsion", "torsion reports (JSON)");
  torsion->require_subcommand(1);

  double alpha = 0.0;
  double h = 0.0;
  std::string group;
  std::string route = "closed";

  auto* circle = torsion->add_subcommand("circle", "classical torsion of the circle");
  circle->add_option("--alpha", alpha, "twist in (0, 1)")->required();
  circle->add_option("--route", route)->check(CLI::IsMember({"closed", "engine", "both"}));
  add_common(circle);

  auto* local = torsion->add_subcommand("local", "localized torsion at h");
  local->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
  local->add_option("--group", group)->required()->check(CLI::IsMember({"r", "h"}));
  local->add_option("--h", h)->required();
  local->add_option("--route", route)->check(CLI::IsMember({"closed", "engine", "both"}));
  add_common(local);

  auto* relative = torsion->add_subcommand("relative", "relative torsion of (G, Gamma)");
  relative->add_option("--group", group)->required()->check(CLI::IsMember({"r", "h"}));
  add_common(relative);

  auto* nq = torsion->add_subcommand("n-quotient", "T(N, alpha) by the generic engine");
  nq->add_option("--alpha", alpha)->required();
  add_common(nq);

  auto* asym = torsion->add_subcommand("asymmetry", "E(H_red, alpha) by the generic engine");
  asym->add_option("--alpha", alpha)->required();
  add_common(asym);

  std::string family;
  double param = 0.0;
  int degree = 0;
  int count = 10;
  auto* spectrum = app.add_subcommand("spectrum", "spectrum dumps (CSV)");
  spectrum->require_subcommand(1);
  auto* sdump = spectrum->add_subcommand("dump", "eigenvalues of one degree");
  sdump->add_option("--family", family)->required()->check(
      CLI::IsMember({"r_local", "circle", "h_local", "hred", "n_quotient"}));
  sdump->add_option("--param", param)->required();
  sdump->add_option("--degree", degree)->required();
  sdump->add_option("--count", count, "indices per branch (and |n| range for lattices)");
  add_common(sdump);

  std::string grid;
  auto* heat = app.add_subcommand("heat", "heat trace dumps (CSV)");
  heat->require_subcommand(1);
  auto* hdump = heat->add_subcommand("dump", "graded and per-degree traces on a log grid");
  hdump->add_option("--family", family)->required()->check(
      CLI::IsMember({"r_local", "circle", "h_local", "hred", "n_quotient"}));
  hdump->add_option("--param", param)->required();
  hdump->add_option("--t-grid", grid, "LO:HI:N")->required();
  add_common(hdump);

  auto* zeta = app.add_subcommand("zeta", "zeta regularization checks");
  zeta->require_subcommand(1);
  auto* check = zeta->add_subcommand("check", "closed forms versus the generic engine");
  add_common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  tl_context* ctx = nullptr;
  if (tl_context_create(&ctx) != TL_OK) return 3;
  struct Guard {
    tl_context* c;
    ~Guard() { tl_context_destroy(c); }
  } guard{ctx};

  const tl_status cs = configure(ctx, o);
  if (cs != TL_OK) return fail(ctx, cs);

  tl_report* rep = nullptr;
  if (circle->parsed()) return emit_report(ctx, tl_torsion_circle(ctx, alpha, route.c_str(), &rep), &rep, o.output_path);
  if (local->parsed()) {
    return emit_report(ctx, tl_torsion_local(ctx, group.c_str(), h, route.c_str(), &rep), &rep, o.output_path);
  }
  if (relative->parsed()) return emit_report(ctx, tl_torsion_relative(ctx, group.c_str(), &rep), &rep, o.output_path);
  if (nq->parsed()) return emit_report(ctx, tl_torsion_n_quotient(ctx, alpha, &rep), &rep, o.output_path);
  if (asym->parsed()) return emit_report(ctx, tl_torsion_asymmetry(ctx, alpha, &rep), &rep, o.output_path);
  if (sdump->parsed()) {
    char* text = nullptr;
    return emit_string(ctx, tl_spectrum_csv(ctx, family.c_str(), param, degree, count, &text), &text, o.output_path);
  }
  if (hdump->parsed()) {
    double lo = 0.0;
    double hi = 0.0;
    int n = 0;
    if (!parse_grid(grid, lo, hi, n)) {
      std::cerr << "torsionlab: --t-grid expects LO:HI:N\n";
      return 1;
    }
    char* text = nullptr;
    return emit_string(ctx, tl_heat_csv(ctx, family.c_str(), param, lo, hi, n, &text), &text, o.output_path);
  }
  if (check->parsed()) {
    int failures = 0;
    const tl_status st = tl_zeta_check(ctx, &rep, &failures);
    if (st != TL_OK) return fail(ctx, st);
    std::cerr << tl_report_table(rep);
    const int rc = emit(tl_report_json(rep), o.output_path);
    tl_report_destroy(rep);
    if (rc != 0) return rc;
    return failures == 0 ? 0 : 3;
  }
  return 1;
}
