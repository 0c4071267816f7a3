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

#include "torsionlab/torsionlab.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "errors.hpp"
#include "parallel.hpp"
#include "report.hpp"
#include "specfun.hpp"
#include "torsion.hpp"
#include "validation.hpp"

using namespace torsionlab;

struct tl_context {
  torsion::QuadratureSpec spec;
  std::string output = "json";
  std::string output_path;
  std::string last_error;
};

struct tl_report {
  torsion::TorsionReport rep;
  std::string json;
  std::string table;
};

namespace {

tl_status map_exception(std::string& msg) {
  try {
    throw;
  } catch (const PoleError& e) {
    msg = e.what();
    return TL_ERR_POLE;
  } catch (const DomainError& e) {
    msg = e.what();
    return TL_ERR_DOMAIN;
  } catch (const ResourceError& e) {
    msg = e.what();
    return TL_ERR_RESOURCE;
  } catch (const IdentityGateError& e) {
    msg = e.what();
    return TL_ERR_IDENTITY;
  } catch (const FitError& e) {
    msg = e.what();
    return TL_ERR_FIT;
  } catch (const std::bad_alloc&) {
    msg = "out of memory";
    return TL_ERR_RESOURCE;
  } catch (const std::exception& e) {
    msg = e.what();
    return TL_ERR_INTERNAL;
  } catch (...) {
    msg = "unknown error";
    return TL_ERR_INTERNAL;
  }
}

// Runs f, translating exceptions; records the message on the context.
template <class F>
tl_status guarded(tl_context* ctx, F&& f) {
  if (ctx == nullptr) return TL_ERR_USAGE;
  ctx->last_error.clear();
  try {
    f();
    return TL_OK;
  } catch (...) {
    return map_exception(ctx->last_error);
  }
}

template <class F>
tl_status guarded_free(F&& f) {
  std::string ignored;
  try {
    f();
    return TL_OK;
  } catch (...) {
    return map_exception(ignored);
  }
}

report::RunConfig base_config(const tl_context* ctx, const char* command) {
  report::RunConfig cfg;
  cfg.command = command;
  const auto& s = ctx->spec;
  cfg.numbers = {{"delta", s.delta},     {"epsilon", s.epsilon},       {"abs_tol", s.abs_tol},
                 {"rel_tol", s.rel_tol}, {"max_panels", s.max_panels}, {"alpha_grid", s.alpha_grid},
                 {"split", s.split}};
  cfg.strings = {{"k_convention", s.convention == spectra::KConvention::TwoPi ? "2pi" : "bare"}};
  cfg.output = ctx->output;
  cfg.output_path = ctx->output_path;
  return cfg;
}

tl_status finish(tl_context* ctx, torsion::TorsionReport rep, const report::RunConfig& cfg, tl_report** out) {
  return guarded(ctx, [&] {
    auto* r = new tl_report;
    r->json = report::to_json(rep, cfg);
    r->rep = std::move(rep);
    *out = r;
  });
}

bool bad_out(tl_context* ctx, const void* out) {
  if (out != nullptr) return false;
  if (ctx != nullptr) ctx->last_error = "output pointer is null";
  return true;
}

char* copy_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}  // namespace

extern "C" {

const char* tl_version(void) { return "0.1.0"; }

const char* tl_status_name(tl_status s) {
  switch (s) {
    case TL_OK: return "ok";
    case TL_ERR_USAGE: return "usage";
    case TL_ERR_DOMAIN: return "domain";
    case TL_ERR_RESOURCE: return "resource";
    case TL_ERR_IDENTITY: return "identity";
    case TL_ERR_POLE: return "pole";
    case TL_ERR_FIT: return "fit";
    case TL_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

tl_status tl_context_create(tl_context** out) {
  if (out == nullptr) return TL_ERR_USAGE;
  *out = new (std::nothrow) tl_context;
  return *out != nullptr ? TL_OK : TL_ERR_RESOURCE;
}

void tl_context_destroy(tl_context* ctx) { delete ctx; }

tl_status tl_set_double(tl_context* ctx, const char* key, double value) {
  if (ctx == nullptr || key == nullptr) return TL_ERR_USAGE;
  const std::string k = key;
  torsion::QuadratureSpec s = ctx->spec;
  if (k == "delta") {
    s.delta = value;
  } else if (k == "epsilon") {
    s.epsilon = value;
  } else if (k == "abs_tol") {
    s.abs_tol = value;
  } else if (k == "rel_tol") {
    s.rel_tol = value;
  } else if (k == "split") {
    s.split = value;
  } else {
    ctx->last_error = "unknown double key: " + k;
    return TL_ERR_USAGE;
  }
  return guarded(ctx, [&] {
    s.validate();
    ctx->spec = s;
  });
}

tl_status tl_set_int(tl_context* ctx, const char* key, int value) {
  if (ctx == nullptr || key == nullptr) return TL_ERR_USAGE;
  const std::string k = key;
  torsion::QuadratureSpec s = ctx->spec;
  if (k == "max_panels") {
    s.max_panels = value;
  } else if (k == "alpha_grid") {
    s.alpha_grid = value;
  } else if (k == "threads") {
    if (value < 1) {
      ctx->last_error = "threads must be positive";
      return TL_ERR_DOMAIN;
    }
    set_thread_count(value);
    return TL_OK;
  } else {
    ctx->last_error = "unknown int key: " + k;
    return TL_ERR_USAGE;
  }
  return guarded(ctx, [&] {
    s.validate();
    ctx->spec = s;
  });
}

tl_status tl_set_string(tl_context* ctx, const char* key, const char* value) {
  if (ctx == nullptr || key == nullptr || value == nullptr) return TL_ERR_USAGE;
  const std::string k = key;
  if (k == "k_convention") {
    return guarded(ctx, [&] { ctx->spec.convention = spectra::k_convention_from_string(value); });
  }
  if (k == "output") {
    const std::string v = value;
    if (v != "json" && v != "csv") {
      ctx->last_error = "output must be json or csv";
      return TL_ERR_DOMAIN;
    }
    ctx->output = v;
    return TL_OK;
  }
  if (k == "output_path") {
    ctx->output_path = value;
    return TL_OK;
  }
  ctx->last_error = "unknown string key: " + k;
  return TL_ERR_USAGE;
}

const char* tl_last_error(const tl_context* ctx) { return ctx != nullptr ? ctx->last_error.c_str() : ""; }

tl_status tl_torsion_circle(tl_context* ctx, double alpha, const char* route, tl_report** out) {
  if (ctx == nullptr || route == nullptr || bad_out(ctx, out)) return TL_ERR_USAGE;
  torsion::TorsionReport rep;
  const tl_status st = guarded(ctx, [&] {
    rep = torsion::torsion_circle(alpha, torsion::local_route_from_string(route), ctx->spec);
  });
  if (st != TL_OK) return st;
  auto cfg = base_config(ctx, "torsion circle");
  cfg.numbers.emplace_back("alpha", alpha);
  cfg.strings.emplace_back("route", route);
  return finish(ctx, std::move(rep), cfg, out);
}

tl_status tl_torsion_local(tl_context* ctx, const char* group, double h, const char* route, tl_report** out) {
  if (ctx == nullptr || group == nullptr || route == nullptr || bad_out(ctx, out)) return TL_ERR_USAGE;
  torsion::TorsionReport rep;
  const tl_status st = guarded(ctx, [&] {
    rep = torsion::localized_torsion(torsion::group_from_string(group), h, torsion::local_route_from_string(route),
                                     ctx->spec);
  });
  if (st != TL_OK) return st;
  auto cfg = base_config(ctx, "torsion local");
  cfg.numbers.emplace_back("h", h);
  cfg.strings.emplace_back("group", group);
  cfg.strings.emplace_back("route", route);
  return finish(ctx, std::move(rep), cfg, out);
}

tl_status tl_torsion_relative(tl_context* ctx, const char* group, tl_report** out) {
  if (ctx == nullptr || group == nullptr || bad_out(ctx, out)) return TL_ERR_USAGE;
  torsion::TorsionReport rep;
  const tl_status st = guarded(ctx, [&] {
    const auto g = torsion::group_from_string(group);
    if (g == torsion::Group::R) {
      rep = torsion::relative_torsion_R(ctx->spec);
      const auto lott = torsion::lott_relative_torsion(g, ctx->spec);
      rep.add("lott", lott.value);
      rep.add("lott_error", lott.error);
      rep.add("log_sine_integral", torsion::log_sine_integral());
      rep.discrepancies.emplace_back("decomposition_minus_lott", rep.value - lott.value);
    } else {
      rep = torsion::relative_torsion_H(ctx->spec);
    }
  });
  if (st != TL_OK) return st;
  auto cfg = base_config(ctx, "torsion relative");
  cfg.strings.emplace_back("group", group);
  return finish(ctx, std::move(rep), cfg, out);
}

tl_status tl_torsion_lott(tl_context* ctx, const char* group, tl_report** out) {
  if (ctx == nullptr || group == nullptr || bad_out(ctx, out)) return TL_ERR_USAGE;
  torsion::TorsionReport rep;
  const tl_status st = guarded(
      ctx, [&] { rep = torsion::lott_relative_torsion(torsion::group_from_string(group), ctx->spec); });
  if (st != TL_OK) return st;
  auto cfg = base_config(ctx, "torsion lott");
  cfg.strings.emplace_back("group", group);
  return finish(ctx, std::move(rep), cfg, out);
}

tl_status tl_torsion_n_quotient(tl_context* ctx, double alpha, tl_report** out) {
  if (ctx == nullptr || bad_out(ctx, out)) return TL_ERR_USAGE;
  torsion::TorsionReport rep;
  const tl_status st = guarded(ctx, [&] { rep = torsion::torsion_N(alpha, ctx->spec); });
  if (st != TL_OK) return st;
  auto cfg = base_config(ctx, "torsion n-quotient");
  cfg.numbers.emplace_back("alpha", alpha);
  return finish(ctx, std::move(rep), cfg, out);
}

tl_status tl_torsion_asymmetry(tl_context* ctx, double alpha, tl_report** out) {
  if (ctx == nullptr || bad_out(ctx, out)) return TL_ERR_USAGE;
  torsion::TorsionReport rep;
  const tl_status st = guarded(ctx, [&] { rep = torsion::asymmetry_E(alpha, ctx->spec); });
  if (st != TL_OK) return st;
  auto cfg = base_config(ctx, "torsion asymmetry");
  cfg.numbers.emplace_back("alpha", alpha);
  return finish(ctx, std::move(rep), cfg, out);
}

tl_status tl_zeta_check(tl_context* ctx, tl_report** out, int* failures) {
  if (ctx == nullptr || bad_out(ctx, out)) return TL_ERR_USAGE;
  return guarded(ctx, [&] {
    const validation::CheckResult res = validation::zeta_check(ctx->spec);
    auto* r = new tl_report;
    r->json = report::to_json(res, base_config(ctx, "zeta check"));
    r->table = validation::format_table(res);
    r->rep.quantity = "zeta_check";
    r->rep.route = torsion::Route::Engine;
    r->rep.value = res.failures;
    r->rep.add("rows", static_cast<double>(res.rows.size()));
    r->rep.add("failures", res.failures);
    if (failures != nullptr) *failures = res.failures;
    *out = r;
  });
}

void tl_report_destroy(tl_report* r) { delete r; }

double tl_report_value(const tl_report* r) { return r != nullptr ? r->rep.value : 0.0; }

double tl_report_error(const tl_report* r) { return r != nullptr ? r->rep.error : 0.0; }

tl_status tl_report_component(const tl_report* r, const char* name, double* out) {
  if (r == nullptr || name == nullptr || out == nullptr) return TL_ERR_USAGE;
  for (const auto& [k, v] : r->rep.components) {
    if (k == name) {
      *out = v;
      return TL_OK;
    }
  }
  return TL_ERR_USAGE;
}

tl_status tl_report_discrepancy(const tl_report* r, const char* name, double* out) {
  if (r == nullptr || name == nullptr || out == nullptr) return TL_ERR_USAGE;
  for (const auto& [k, v] : r->rep.discrepancies) {
    if (k == name) {
      *out = v;
      return TL_OK;
    }
  }
  return TL_ERR_USAGE;
}

const char* tl_report_json(const tl_report* r) { return r != nullptr ? r->json.c_str() : ""; }

const char* tl_report_table(const tl_report* r) { return r != nullptr ? r->table.c_str() : ""; }

tl_status tl_spectrum_csv(tl_context* ctx, const char* family, double param, int degree, int count, char** out) {
  if (ctx == nullptr || family == nullptr || bad_out(ctx, out)) return TL_ERR_USAGE;
  return guarded(ctx, [&] {
    *out = copy_string(
        report::spectrum_csv(spectra::group_tag_from_string(family), param, degree, count, ctx->spec.convention));
  });
}

tl_status tl_heat_csv(tl_context* ctx, const char* family, double param, double t_lo, double t_hi, int n,
                      char** out) {
  if (ctx == nullptr || family == nullptr || bad_out(ctx, out)) return TL_ERR_USAGE;
  return guarded(ctx, [&] {
    *out = copy_string(
        report::heat_csv(spectra::group_tag_from_string(family), param, t_lo, t_hi, n, ctx->spec.convention));
  });
}

void tl_string_free(char* s) { std::free(s); }

tl_status tl_hurwitz_zeta(double s, double a, double* out) {
  if (out == nullptr) return TL_ERR_USAGE;
  return guarded_free([&] { *out = specfun::hurwitz_zeta(s, a); });
}

tl_status tl_hurwitz_zeta_ds(double s, double a, double* out) {
  if (out == nullptr) return TL_ERR_USAGE;
  return guarded_free([&] { *out = specfun::hurwitz_zeta_ds(s, a); });
}

tl_status tl_log_gamma(double x, double* out) {
  if (out == nullptr) return TL_ERR_USAGE;
  return guarded_free([&] { *out = specfun::log_gamma(x); });
}

tl_status tl_digamma(double x, double* out) {
  if (out == nullptr) return TL_ERR_USAGE;
  return guarded_free([&] { *out = specfun::digamma(x); });
}

}  // extern "C"
