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

#ifndef SEPBASIS_REPORT_HPP
#define SEPBASIS_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace sepbasis {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Outcome of one command invocation: echoed inputs, a command-specific
// results payload, and a list of named checks. Rendering is deterministic;
// two identical invocations produce byte-identical text and JSON.
class RunReport {
 public:
  explicit RunReport(std::string command);

  void set_input(const std::string& key, const nlohmann::ordered_json& value);
  void set_result(const std::string& key, const nlohmann::ordered_json& value);
  void add_check(const std::string& name, bool pass, const std::string& detail);

  const std::string& command() const { return command_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  bool all_passed() const;
  // 0 when every check passed, 1 otherwise.
  int exit_code() const { return all_passed() ? 0 : 1; }

  std::string text() const;
  std::string json_str() const;

 private:
  std::string command_;
  nlohmann::ordered_json inputs_;
  nlohmann::ordered_json results_;
  std::vector<CheckResult> checks_;
};

// The five commands. Input validation problems (unknown family, bad
// dimension, parse failures) throw Parse/Domain errors; runtime math
// failures throw the other kinds. Verification failures inside run_verify
// are reported as failed checks instead of thrown.
RunReport run_derive(const std::string& family, int dim);
RunReport run_derive_custom(const std::string& a_text, const std::string& b_text, int dim);
RunReport run_gen(const std::string& family, int n, const std::string& method);
RunReport run_verify(const std::string& family_or_all, int dim);
RunReport run_umbral(const std::string& family, const std::string& poly_text, int dim);

}  // namespace sepbasis

#endif
