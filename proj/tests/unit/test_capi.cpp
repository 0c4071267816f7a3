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

#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "torsionlab/torsionlab.h"

namespace {

struct Ctx {
  tl_context* p = nullptr;
  Ctx() { REQUIRE(tl_context_create(&p) == TL_OK); }
  ~Ctx() { tl_context_destroy(p); }
};

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(tl_status_name(TL_OK)) == "ok");
  CHECK(std::strlen(tl_version()) > 0);
  CHECK(tl_context_create(nullptr) == TL_ERR_USAGE);
  tl_context_destroy(nullptr);
  tl_report_destroy(nullptr);
  tl_string_free(nullptr);
}

TEST_CASE("configuration setters") {
  Ctx c;
  CHECK(tl_set_double(c.p, "delta", 0.5) == TL_OK);
  CHECK(tl_set_double(c.p, "delta", -1.0) == TL_ERR_DOMAIN);
  CHECK(std::strlen(tl_last_error(c.p)) > 0);
  CHECK(tl_set_double(c.p, "nonsense", 1.0) == TL_ERR_USAGE);
  CHECK(tl_set_int(c.p, "alpha_grid", 16) == TL_OK);
  CHECK(tl_set_int(c.p, "alpha_grid", 0) == TL_ERR_DOMAIN);
  CHECK(tl_set_string(c.p, "k_convention", "bare") == TL_OK);
  CHECK(tl_set_string(c.p, "k_convention", "4pi") == TL_ERR_DOMAIN);
  CHECK(tl_set_string(c.p, "output", "xml") == TL_ERR_DOMAIN);
  CHECK(tl_set_string(c.p, "output", nullptr) == TL_ERR_USAGE);
}

TEST_CASE("circle torsion through the C API") {
  Ctx c;
  tl_report* r = nullptr;
  REQUIRE(tl_torsion_circle(c.p, 0.5, "closed", &r) == TL_OK);
  CHECK(std::abs(tl_report_value(r) - 2.0 * std::log(2.0)) < 1e-12);
  CHECK(tl_report_error(r) >= 0.0);
  double alpha = 0.0;
  CHECK(tl_report_component(r, "alpha", &alpha) == TL_OK);
  CHECK(alpha == 0.5);
  CHECK(tl_report_component(r, "missing", &alpha) == TL_ERR_USAGE);
  const auto j = nlohmann::json::parse(tl_report_json(r));
  CHECK(j["quantity"] == "torsion_circle");
  CHECK(j["config"]["command"] == "torsion circle");
  CHECK(std::string(tl_report_table(r)).empty());
  tl_report_destroy(r);

  r = nullptr;
  CHECK(tl_torsion_circle(c.p, 1.5, "closed", &r) == TL_ERR_DOMAIN);
  CHECK(r == nullptr);
  CHECK(tl_torsion_circle(c.p, 0.5, "sideways", &r) == TL_ERR_DOMAIN);
  CHECK(tl_torsion_circle(c.p, 0.5, "closed", nullptr) == TL_ERR_USAGE);
}

TEST_CASE("local and relative torsion through the C API") {
  Ctx c;
  tl_report* r = nullptr;
  REQUIRE(tl_torsion_local(c.p, "h", 0.1591549431, "both", &r) == TL_OK);
  double d = 0.0;
  CHECK(tl_report_discrepancy(r, "engine_minus_closed", &d) == TL_OK);
  CHECK(std::abs(d) < 1e-3);
  CHECK(tl_report_discrepancy(r, "closed_minus_alternative", &d) == TL_OK);
  tl_report_destroy(r);
  REQUIRE(tl_torsion_relative(c.p, "r", &r) == TL_OK);
  CHECK(std::abs(tl_report_value(r)) < 1e-10);
  double lott = 1.0;
  CHECK(tl_report_component(r, "lott", &lott) == TL_OK);
  CHECK(std::abs(lott) < 1e-6);
  tl_report_destroy(r);
  CHECK(tl_torsion_local(c.p, "q", 0.3, "closed", &r) == TL_ERR_DOMAIN);
  CHECK(tl_torsion_local(c.p, "h", 0.0, "closed", &r) == TL_ERR_DOMAIN);
}

TEST_CASE("CSV through the C API") {
  Ctx c;
  char* text = nullptr;
  REQUIRE(tl_spectrum_csv(c.p, "circle", 0.5, 0, 2, &text) == TL_OK);
  CHECK(std::string(text).rfind("branch_id,kind,a,c,multiplicity,first8_eigenvalues\n", 0) == 0);
  tl_string_free(text);
  REQUIRE(tl_heat_csv(c.p, "h_local", 0.3, 0.1, 1.0, 4, &text) == TL_OK);
  CHECK(std::string(text).rfind("t,value,error\n", 0) == 0);
  tl_string_free(text);
  CHECK(tl_spectrum_csv(c.p, "torus", 0.5, 0, 2, &text) == TL_ERR_DOMAIN);
  CHECK(tl_heat_csv(c.p, "circle", 0.5, 1.0, 0.1, 4, &text) == TL_ERR_DOMAIN);
}

TEST_CASE("special functions through the C API") {
  double v = 0.0;
  CHECK(tl_hurwitz_zeta(0.0, 0.3, &v) == TL_OK);
  CHECK(std::abs(v - 0.2) < 1e-12);
  CHECK(tl_hurwitz_zeta(1.0, 0.3, &v) == TL_ERR_POLE);
  CHECK(tl_hurwitz_zeta(2.0, -1.0, &v) == TL_ERR_DOMAIN);
  CHECK(tl_hurwitz_zeta_ds(0.0, 1.0, &v) == TL_OK);
  CHECK(std::abs(v + 0.5 * std::log(2.0 * 3.14159265358979323846)) < 1e-12);
  CHECK(tl_log_gamma(4.0, &v) == TL_OK);
  CHECK(std::abs(v - std::log(6.0)) < 1e-13);
  CHECK(tl_digamma(0.0, &v) == TL_ERR_DOMAIN);
  CHECK(tl_log_gamma(1.0, nullptr) == TL_ERR_USAGE);
}
