// Copyright 2026 The sepbasis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sepbasis.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "sepbasis/error.hpp"
#include "sepbasis/parse.hpp"
#include "sepbasis/polynomial.hpp"
#include "sepbasis/rational.hpp"
#include "sepbasis/report.hpp"

struct sepbasis_poly {
  sepbasis::Polynomial v;
};

struct sepbasis_report {
  sepbasis::RunReport v;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

int status_of(const sepbasis::Error& e) {
  switch (e.kind()) {
    case sepbasis::ErrorKind::Parse:
    case sepbasis::ErrorKind::Domain:
      return SEPBASIS_EINVAL;
    default:
      return SEPBASIS_EMATH;
  }
}

template <typename Body>
int guard(Body&& body) noexcept {
  try {
    return body();
  } catch (const sepbasis::Error& e) {
    set_error(e.what());
    return status_of(e);
  } catch (const std::exception& e) {
    set_error(e.what());
    return SEPBASIS_EINTERNAL;
  } catch (...) {
    set_error("unknown failure");
    return SEPBASIS_EINTERNAL;
  }
}

int require(bool cond, const char* msg) {
  if (cond) return SEPBASIS_OK;
  set_error(msg);
  return SEPBASIS_EINVAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int emit_string(const std::string& s, char** out) {
  char* d = dup_string(s);
  if (!d) {
    set_error("out of memory");
    return SEPBASIS_EINTERNAL;
  }
  *out = d;
  return SEPBASIS_OK;
}

template <typename Runner>
int run_command(sepbasis_report** out, Runner&& runner) {
  if (int s = require(out != nullptr, "sepbasis command: NULL report out-parameter")) return s;
  return guard([&] {
    *out = new sepbasis_report{runner()};
    return SEPBASIS_OK;
  });
}

}  // namespace

extern "C" {

const char* sepbasis_version(void) { return "0.1.0"; }

const char* sepbasis_last_error(void) { return g_last_error.c_str(); }

/* --- polynomials -------------------------------------------------------- */

int sepbasis_poly_parse(const char* text, sepbasis_poly** out) {
  if (int s = require(text && out, "sepbasis_poly_parse: NULL argument")) return s;
  return guard([&] {
    *out = new sepbasis_poly{sepbasis::parse_poly(text)};
    return SEPBASIS_OK;
  });
}

int sepbasis_poly_str(const sepbasis_poly* p, char** out) {
  if (int s = require(p && out, "sepbasis_poly_str: NULL argument")) return s;
  return guard([&] { return emit_string(p->v.str(), out); });
}

int sepbasis_poly_degree(const sepbasis_poly* p) { return p ? p->v.degree() : -2; }

int sepbasis_poly_coeff(const sepbasis_poly* p, int k, char** out) {
  if (int s = require(p && out, "sepbasis_poly_coeff: NULL argument")) return s;
  if (int s = require(k >= 0, "sepbasis_poly_coeff: negative power")) return s;
  return guard([&] { return emit_string(p->v.coeff(k).str(), out); });
}

int sepbasis_poly_add(const sepbasis_poly* a, const sepbasis_poly* b, sepbasis_poly** out) {
  if (int s = require(a && b && out, "sepbasis_poly_add: NULL argument")) return s;
  return guard([&] {
    *out = new sepbasis_poly{a->v + b->v};
    return SEPBASIS_OK;
  });
}

int sepbasis_poly_sub(const sepbasis_poly* a, const sepbasis_poly* b, sepbasis_poly** out) {
  if (int s = require(a && b && out, "sepbasis_poly_sub: NULL argument")) return s;
  return guard([&] {
    *out = new sepbasis_poly{a->v - b->v};
    return SEPBASIS_OK;
  });
}

int sepbasis_poly_mul(const sepbasis_poly* a, const sepbasis_poly* b, sepbasis_poly** out) {
  if (int s = require(a && b && out, "sepbasis_poly_mul: NULL argument")) return s;
  return guard([&] {
    *out = new sepbasis_poly{a->v * b->v};
    return SEPBASIS_OK;
  });
}

int sepbasis_poly_derivative(const sepbasis_poly* p, sepbasis_poly** out) {
  if (int s = require(p && out, "sepbasis_poly_derivative: NULL argument")) return s;
  return guard([&] {
    *out = new sepbasis_poly{p->v.derivative()};
    return SEPBASIS_OK;
  });
}

int sepbasis_poly_eval(const sepbasis_poly* p, const char* point, char** out) {
  if (int s = require(p && point && out, "sepbasis_poly_eval: NULL argument")) return s;
  return guard([&] {
    sepbasis::Rational x = sepbasis::Rational::parse(point);
    return emit_string(p->v.eval(x).str(), out);
  });
}

void sepbasis_poly_free(sepbasis_poly* p) { delete p; }

/* --- commands ------------------------------------------------------------ */

int sepbasis_cmd_derive(const char* family, int dim, sepbasis_report** out) {
  if (int s = require(family != nullptr, "sepbasis_cmd_derive: NULL family")) return s;
  return run_command(out, [&] { return sepbasis::run_derive(family, dim); });
}

int sepbasis_cmd_derive_custom(const char* a_text, const char* b_text, int dim,
                               sepbasis_report** out) {
  if (int s = require(a_text && b_text, "sepbasis_cmd_derive_custom: NULL polynomial text"))
    return s;
  return run_command(out, [&] { return sepbasis::run_derive_custom(a_text, b_text, dim); });
}

int sepbasis_cmd_gen(const char* family, int n, const char* method, sepbasis_report** out) {
  if (int s = require(family && method, "sepbasis_cmd_gen: NULL argument")) return s;
  return run_command(out, [&] { return sepbasis::run_gen(family, n, method); });
}

int sepbasis_cmd_verify(const char* family_or_all, int dim, sepbasis_report** out) {
  std::string fam = family_or_all ? family_or_all : "all";
  return run_command(out, [&] { return sepbasis::run_verify(fam, dim); });
}

int sepbasis_cmd_umbral(const char* family, const char* poly_text, int dim,
                        sepbasis_report** out) {
  if (int s = require(family && poly_text, "sepbasis_cmd_umbral: NULL argument")) return s;
  return run_command(out, [&] { return sepbasis::run_umbral(family, poly_text, dim); });
}

/* --- reports -------------------------------------------------------------- */

int sepbasis_report_text(const sepbasis_report* r, char** out) {
  if (int s = require(r && out, "sepbasis_report_text: NULL argument")) return s;
  return guard([&] { return emit_string(r->v.text(), out); });
}

int sepbasis_report_json(const sepbasis_report* r, char** out) {
  if (int s = require(r && out, "sepbasis_report_json: NULL argument")) return s;
  return guard([&] { return emit_string(r->v.json_str(), out); });
}

int sepbasis_report_exit_code(const sepbasis_report* r) { return r ? r->v.exit_code() : -1; }

int sepbasis_report_check_count(const sepbasis_report* r) {
  return r ? static_cast<int>(r->v.checks().size()) : -1;
}

int sepbasis_report_check_passed(const sepbasis_report* r, int i) {
  if (!r || i < 0 || i >= static_cast<int>(r->v.checks().size())) return -1;
  return r->v.checks()[static_cast<size_t>(i)].pass ? 1 : 0;
}

void sepbasis_report_free(sepbasis_report* r) { delete r; }

void sepbasis_string_free(char* s) { std::free(s); }

}  // extern "C"
