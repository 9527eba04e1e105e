/* Copyright 2026 The sepbasis Authors
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

/* C interface to the sepbasis engine. All functions returning int yield a
 * status code; on failure, sepbasis_last_error() describes what went wrong.
 * Out-parameters are written only on SEPBASIS_OK. Strings returned through
 * char** out-parameters are heap-allocated; release them with
 * sepbasis_string_free. Objects are released with their _free function.
 */

#ifndef SEPBASIS_H
#define SEPBASIS_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. The values double as process exit codes: invalid input is
 * 2, an exact-arithmetic failure is 1. */
#define SEPBASIS_OK 0
#define SEPBASIS_EMATH 1
#define SEPBASIS_EINVAL 2
#define SEPBASIS_EINTERNAL 3

typedef struct sepbasis_poly sepbasis_poly;
typedef struct sepbasis_report sepbasis_report;

/* Library version, static storage. */
const char* sepbasis_version(void);

/* Message of the calling thread's most recent failure; valid until the
 * next failing call on the same thread. Never NULL. */
const char* sepbasis_last_error(void);

/* --- polynomials over exact rationals --------------------------------- */

int sepbasis_poly_parse(const char* text, sepbasis_poly** out);
int sepbasis_poly_str(const sepbasis_poly* p, char** out);
/* Degree; -1 for the zero polynomial, -2 for NULL. */
int sepbasis_poly_degree(const sepbasis_poly* p);
/* Coefficient of x^k as canonical rational text. */
int sepbasis_poly_coeff(const sepbasis_poly* p, int k, char** out);
int sepbasis_poly_add(const sepbasis_poly* a, const sepbasis_poly* b, sepbasis_poly** out);
int sepbasis_poly_sub(const sepbasis_poly* a, const sepbasis_poly* b, sepbasis_poly** out);
int sepbasis_poly_mul(const sepbasis_poly* a, const sepbasis_poly* b, sepbasis_poly** out);
int sepbasis_poly_derivative(const sepbasis_poly* p, sepbasis_poly** out);
/* Value at a rational point ("3", "-1/2", ...), as canonical rational text. */
int sepbasis_poly_eval(const sepbasis_poly* p, const char* point, char** out);
void sepbasis_poly_free(sepbasis_poly* p);

/* --- commands ----------------------------------------------------------
 * Each command builds a report of echoed inputs, results, and named
 * checks. A report is produced only when the computation itself succeeds;
 * individual check failures live inside the report (exit code 1).
 */

int sepbasis_cmd_derive(const char* family, int dim, sepbasis_report** out);
int sepbasis_cmd_derive_custom(const char* a_text, const char* b_text, int dim,
                               sepbasis_report** out);
int sepbasis_cmd_gen(const char* family, int n, const char* method, sepbasis_report** out);
/* family_or_all: a family name, "all", or NULL for all. */
int sepbasis_cmd_verify(const char* family_or_all, int dim, sepbasis_report** out);
int sepbasis_cmd_umbral(const char* family, const char* poly_text, int dim,
                        sepbasis_report** out);

/* --- reports ----------------------------------------------------------- */

int sepbasis_report_text(const sepbasis_report* r, char** out);
int sepbasis_report_json(const sepbasis_report* r, char** out);
/* 0 when every check passed, 1 otherwise; -1 for NULL. */
int sepbasis_report_exit_code(const sepbasis_report* r);
int sepbasis_report_check_count(const sepbasis_report* r);
/* 1 if check i passed, 0 if it failed, -1 out of range or NULL. */
int sepbasis_report_check_passed(const sepbasis_report* r, int i);
void sepbasis_report_free(sepbasis_report* r);

void sepbasis_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SEPBASIS_H */
