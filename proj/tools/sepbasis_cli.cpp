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

// Command-line front end. Talks to the engine exclusively through the C
// API in sepbasis.h; exit codes are 0 (all checks pass), 1 (a check or
// exact computation failed), 2 (usage, parse, or domain error).

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "sepbasis.h"

namespace {

int report_failure(int status) {
  std::fprintf(stderr, "error: %s\n", sepbasis_last_error());
  return status;
}

// Prints the report and returns the process exit code.
int finish(sepbasis_report* rep, bool json) {
  char* text = nullptr;
  int status = json ? sepbasis_report_json(rep, &text) : sepbasis_report_text(rep, &text);
  if (status != SEPBASIS_OK) {
    sepbasis_report_free(rep);
    return report_failure(status);
  }
  std::fputs(text, stdout);
  if (json) std::fputc('\n', stdout);
  sepbasis_string_free(text);
  int code = sepbasis_report_exit_code(rep);
  sepbasis_report_free(rep);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sepbasis: exact operator calculus for separated basis transformations"};
  app.set_version_flag("--version", std::string(sepbasis_version()));
  app.require_subcommand(1);

  std::string family, a_text, b_text, poly_text;
  std::string method = "rodrigues";
  int dim = 8;
  int index = 0;
  bool json = false;
  bool all_families = false;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "emit the report as JSON"); };
  auto add_dim = [&](CLI::App* sub) {
    sub->add_option("--dim", dim, "working dimension (truncation order)")
        ->capture_default_str();
  };

  CLI::App* derive = app.add_subcommand(
      "derive", "derive the family's differential operator from its transform");
  derive->add_option("--family", family, "laguerre, hermite, or legendre")->required();
  add_dim(derive);
  add_json(derive);

  CLI::App* custom = app.add_subcommand(
      "derive-custom", "derive the operator of the pair (A, B) from two polynomials");
  custom->add_option("--A", a_text, "polynomial A, degree <= 1")->required();
  custom->add_option("--B", b_text, "polynomial B, nonzero, degree <= 2")->required();
  add_dim(custom);
  add_json(custom);

  CLI::App* gen = app.add_subcommand("gen", "generate P_0..P_n by one of three methods");
  gen->add_option("--family", family, "laguerre, hermite, or legendre")->required();
  gen->add_option("--n", index, "highest index to generate")->required();
  gen->add_option("--method", method, "operator, rodrigues, or raising")
      ->capture_default_str();
  add_json(gen);

  CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite");
  CLI::Option* fam_opt =
      verify->add_option("--family", family, "restrict to one family");
  verify->add_flag("--all", all_families, "verify every shipped family (default)")
      ->excludes(fam_opt);
  add_dim(verify);
  add_json(verify);

  CLI::App* umbral = app.add_subcommand(
      "umbral", "apply the family's coefficient-preserving substitution to a polynomial");
  umbral->add_option("--family", family, "laguerre, hermite, or legendre")->required();
  umbral->add_option("--poly", poly_text, "polynomial in x")->required();
  add_dim(umbral);
  add_json(umbral);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; any usage problem exits 2
  }

  sepbasis_report* rep = nullptr;
  int status = SEPBASIS_EINTERNAL;
  if (derive->parsed()) {
    status = sepbasis_cmd_derive(family.c_str(), dim, &rep);
  } else if (custom->parsed()) {
    status = sepbasis_cmd_derive_custom(a_text.c_str(), b_text.c_str(), dim, &rep);
  } else if (gen->parsed()) {
    status = sepbasis_cmd_gen(family.c_str(), index, method.c_str(), &rep);
  } else if (verify->parsed()) {
    const char* fam = family.empty() ? nullptr : family.c_str();
    status = sepbasis_cmd_verify(fam, dim, &rep);
  } else if (umbral->parsed()) {
    status = sepbasis_cmd_umbral(family.c_str(), poly_text.c_str(), dim, &rep);
  }
  if (status != SEPBASIS_OK) return report_failure(status);
  return finish(rep, json);
}
