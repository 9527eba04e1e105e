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

#include "sepbasis/rational.hpp"

#include <cctype>

namespace sepbasis {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) fail(ErrorKind::Domain, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::Domain, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  const auto bad = [&]() {
    fail(ErrorKind::Parse, "malformed rational literal '" + text + "'");
  };
  if (text.empty()) bad();
  std::size_t i = 0;
  if (text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) bad();
  mpz_class num(text.substr(0, i));
  if (i == text.size()) return Rational(num);
  if (text[i] != '/') bad();
  ++i;
  std::size_t den_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == den_begin || i != text.size()) bad();
  mpz_class den(text.substr(den_begin));
  return Rational(num, den);
}

std::string Rational::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    s += "/";
    s += v_.get_den().get_str();
  }
  return s;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational double_factorial(int k) {
  mpz_class f = 1;
  for (int i = k; i > 1; i -= 2) f *= i;
  return Rational(f);
}

}  // namespace sepbasis
