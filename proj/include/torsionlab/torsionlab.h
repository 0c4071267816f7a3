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

/* C interface to torsionlab: localized, classical and relative analytic
 * torsions, heat traces and spectral zeta regularization.
 *
 * All functions return a tl_status. Objects are opaque; strings returned
 * through `char**` are owned by the caller and released with tl_string_free.
 * Strings returned as `const char*` belong to the object they came from. */

#ifndef TORSIONLAB_TORSIONLAB_H
#define TORSIONLAB_TORSIONLAB_H

#include <stddef.h>

#if defined(TORSIONLAB_BUILDING)
#define TL_API __attribute__((visibility("default")))
#else
#define TL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tl_status {
  TL_OK = 0,
  TL_ERR_USAGE = 1,    /* bad argument to the API itself (null pointer, unknown key) */
  TL_ERR_DOMAIN = 2,   /* argument outside the mathematical domain */
  TL_ERR_RESOURCE = 3, /* tolerance not reached within the work budget */
  TL_ERR_IDENTITY = 4, /* a hard identity gate failed */
  TL_ERR_POLE = 5,     /* evaluation at a pole */
  TL_ERR_FIT = 6,      /* small-time fit rejected */
  TL_ERR_INTERNAL = 7
} tl_status;

typedef struct tl_context tl_context;
typedef struct tl_report tl_report;

TL_API const char* tl_version(void);
TL_API const char* tl_status_name(tl_status s);

TL_API tl_status tl_context_create(tl_context** out);
TL_API void tl_context_destroy(tl_context* ctx);

/* Configuration keys.
 *   double: delta, epsilon, abs_tol, rel_tol, split
 *   int:    max_panels, alpha_grid, threads
 *   string: k_convention ("2pi" | "bare"), output ("json" | "csv"), output_path */
TL_API tl_status tl_set_double(tl_context* ctx, const char* key, double value);
TL_API tl_status tl_set_int(tl_context* ctx, const char* key, int value);
TL_API tl_status tl_set_string(tl_context* ctx, const char* key, const char* value);

/* Message of the last failed call on this context ("" if none). */
TL_API const char* tl_last_error(const tl_context* ctx);

/* Torsions. `route` is "closed", "engine" or "both"; `group` is "r" or "h". */
TL_API tl_status tl_torsion_circle(tl_context* ctx, double alpha, const char* route, tl_report** out);
TL_API tl_status tl_torsion_local(tl_context* ctx, const char* group, double h, const char* route, tl_report** out);
TL_API tl_status tl_torsion_relative(tl_context* ctx, const char* group, tl_report** out);
TL_API tl_status tl_torsion_lott(tl_context* ctx, const char* group, tl_report** out);
TL_API tl_status tl_torsion_n_quotient(tl_context* ctx, double alpha, tl_report** out);
TL_API tl_status tl_torsion_asymmetry(tl_context* ctx, double alpha, tl_report** out);

/* Closed-form versus engine grid. `failures` may be null. */
TL_API tl_status tl_zeta_check(tl_context* ctx, tl_report** out, int* failures);

TL_API void tl_report_destroy(tl_report* r);
TL_API double tl_report_value(const tl_report* r);
TL_API double tl_report_error(const tl_report* r);
/* Scalar component or discrepancy by name; TL_ERR_USAGE if absent. */
TL_API tl_status tl_report_component(const tl_report* r, const char* name, double* out);
TL_API tl_status tl_report_discrepancy(const tl_report* r, const char* name, double* out);
/* JSON document (schema: quantity, value, error, route, components,
 * discrepancies, config). */
TL_API const char* tl_report_json(const tl_report* r);
/* Human-readable table (zeta check only; "" otherwise). */
TL_API const char* tl_report_table(const tl_report* r);

/* CSV dumps. `family` is one of r_local, circle, h_local, hred, n_quotient. */
TL_API tl_status tl_spectrum_csv(tl_context* ctx, const char* family, double param, int degree, int count,
                                 char** out);
TL_API tl_status tl_heat_csv(tl_context* ctx, const char* family, double param, double t_lo, double t_hi,
                             int n, char** out);
TL_API void tl_string_free(char* s);

/* Special functions. */
TL_API tl_status tl_hurwitz_zeta(double s, double a, double* out);
TL_API tl_status tl_hurwitz_zeta_ds(double s, double a, double* out);
TL_API tl_status tl_log_gamma(double x, double* out);
TL_API tl_status tl_digamma(double x, double* out);

#ifdef __cplusplus
}
#endif

#endif /* TORSIONLAB_TORSIONLAB_H */
