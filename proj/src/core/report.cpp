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

#include "report.hpp"

#include <cmath>
#include <cstdio>

#include "errors.hpp"
#include "heat_trace.hpp"
#include "json.hpp"

namespace torsionlab::report {
namespace {

using Json = nlohmann::ordered_json;

// nlohmann prints the shortest round-trip form; the reports want a fixed
// 17-digit form, so the tree is written here.
void write(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string pad_close(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(it.key()).dump() + ": ";
        write(it.value(), out, indent, depth + 1);
      }
      out += "\n" + pad_close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ", ";
        first = false;
        write(v, out, indent, depth + 1);
      }
      out += "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

std::string dump(const Json& j) {
  std::string out;
  write(j, out, 2, 0);
  out += "\n";
  return out;
}

Json config_json(const RunConfig& cfg) {
  Json c = Json::object();
  c["command"] = cfg.command;
  Json params = Json::object();
  for (const auto& [k, v] : cfg.numbers) params[k] = v;
  for (const auto& [k, v] : cfg.strings) params[k] = v;
  c["parameters"] = params;
  c["output"] = cfg.output;
  c["output_path"] = cfg.output_path;
  c["deterministic"] = cfg.deterministic;
  return c;
}

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string RunConfig::to_json() const { return dump(config_json(*this)); }

RunConfig RunConfig::from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig cfg;
  try {
    cfg.command = j.at("command").get<std::string>();
    for (auto it = j.at("parameters").begin(); it != j.at("parameters").end(); ++it) {
      if (it.value().is_string()) {
        cfg.strings.emplace_back(it.key(), it.value().get<std::string>());
      } else if (it.value().is_number()) {
        cfg.numbers.emplace_back(it.key(), it.value().get<double>());
      } else {
        throw DomainError("config parameter '" + it.key() + "' must be a number or a string");
      }
    }
    cfg.output = j.at("output").get<std::string>();
    cfg.output_path = j.at("output_path").get<std::string>();
    cfg.deterministic = j.at("deterministic").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("config is missing fields: ") + e.what());
  }
  return cfg;
}

std::string to_json(const torsion::TorsionReport& rep, const RunConfig& cfg) {
  Json j = Json::object();
  j["quantity"] = rep.quantity;
  j["value"] = number_or_null(rep.value);
  j["error"] = number_or_null(rep.error);
  j["route"] = torsion::to_string(rep.route);
  Json comp = Json::object();
  for (const auto& [k, v] : rep.components) comp[k] = number_or_null(v);
  for (const auto& [k, vs] : rep.samples) {
    Json arr = Json::array();
    for (double v : vs) arr.push_back(number_or_null(v));
    comp[k] = arr;
  }
  j["components"] = comp;
  Json disc = Json::object();
  for (const auto& [k, v] : rep.discrepancies) disc[k] = number_or_null(v);
  j["discrepancies"] = disc;
  j["config"] = config_json(cfg);
  return dump(j);
}

std::string to_json(const validation::CheckResult& res, const RunConfig& cfg) {
  Json j = Json::object();
  double worst = 0.0;
  double worst_err = 0.0;
  Json comp = Json::object();
  Json disc = Json::object();
  for (const auto& row : res.rows) {
    const std::string key = row.family + "(" + format_number(row.parameter) + ")";
    Json r = Json::object();
    r["family"] = row.family;
    r["parameter"] = row.parameter;
    r["closed_zeta_at_0"] = number_or_null(row.closed_zeta0);
    r["engine_zeta_at_0"] = number_or_null(row.engine_zeta0);
    r["closed_deriv_at_0"] = number_or_null(row.closed_deriv);
    r["engine_deriv_at_0"] = number_or_null(row.engine_deriv);
    r["engine_error"] = number_or_null(row.engine_error);
    r["split_spread"] = number_or_null(row.split_spread);
    r["tolerance"] = row.tolerance;
    r["passed"] = row.passed;
    comp[key] = r;
    const double d = row.engine_deriv - row.closed_deriv;
    disc[key] = number_or_null(d);
    worst = std::max(worst, std::abs(d));
    worst_err = std::max(worst_err, row.engine_error);
  }
  comp["rows"] = static_cast<int>(res.rows.size());
  comp["failures"] = res.failures;
  j["quantity"] = "zeta_check";
  j["value"] = number_or_null(worst);
  j["error"] = number_or_null(worst_err);
  j["route"] = "engine";
  j["components"] = comp;
  j["discrepancies"] = disc;
  j["config"] = config_json(cfg);
  return dump(j);
}

std::string spectrum_csv(spectra::GroupTag tag, double parameter, int degree, int count, spectra::KConvention conv) {
  if (count < 1) throw DomainError("count must be positive");
  const spectra::SpectrumFamily fam = spectra::family(tag, parameter, degree, conv);
  std::string out = "branch_id,kind,a,c,multiplicity,first8_eigenvalues\n";
  int rows = 0;
  auto emit = [&](const std::string& id, const spectra::Branch& b) {
    if (rows >= count) return;
    ++rows;
    // Isolated branches carry their eigenvalue in a.
    const double a = b.is_family() ? b.a : b.lambda;
    std::string eig;
    const long last = b.is_family() ? 8 : 1;
    for (long m = 0; m < last; ++m) eig += (m ? ";" : "") + format_number(b.eigenvalue(m));
    out += id + "," + spectra::to_string(b.kind) + "," + format_number(a) + "," + format_number(b.c) + "," +
           format_number(b.multiplicity) + "," + eig + "\n";
  };
  if (fam.is_lattice()) {
    // Fourier indices in the order 0, -1, 1, -2, 2, ...
    for (long j = 0; rows < count && j < 2L * count + 2; ++j) {
      const long n = (j % 2 == 0) ? j / 2 : -(j + 1) / 2;
      const auto branches = fam.lattice_branches(n);
      for (std::size_t i = 0; i < branches.size(); ++i) emit("n" + std::to_string(n) + "." + std::to_string(i), branches[i]);
    }
  } else {
    for (std::size_t i = 0; i < fam.branches.size(); ++i) emit(std::to_string(i), fam.branches[i]);
  }
  return out;
}

std::string heat_csv(spectra::GroupTag tag, double parameter, double lo, double hi, int n, spectra::KConvention conv) {
  if (!(lo > 0.0) || !(hi >= lo) || n < 1) throw DomainError("t-grid must satisfy 0 < lo <= hi and n >= 1");
  const heat::HeatCurve curve = heat::curve_graded(spectra::graded(tag, parameter, conv));
  std::string out = "t,value,error\n";
  for (int i = 0; i < n; ++i) {
    const double t = n == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    const heat::HeatValue g = curve.sample(t);
    out += format_number(t) + "," + format_number(g.value) + "," + format_number(g.error) + "\n";
  }
  return out;
}

}  // namespace torsionlab::report
