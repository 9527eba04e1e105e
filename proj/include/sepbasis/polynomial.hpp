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

#ifndef SEPBASIS_POLYNOMIAL_HPP
#define SEPBASIS_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "sepbasis/rational.hpp"

namespace sepbasis {

// Dense univariate polynomial over Rational; coeffs()[k] is the x^k term.
// Normal form: no trailing zero coefficients, so degree() is always the
// index of the last stored coefficient (-1 for the zero polynomial).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Polynomial constant(const Rational& c);
  static Polynomial x() { return monomial(1); }
  static Polynomial monomial(int power, const Rational& coeff = Rational(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  // Coefficient of x^k; zero beyond the degree.
  Rational coeff(int k) const;
  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& s) const;
  Polynomial pow(int k) const;

  Polynomial derivative() const;
  // Antiderivative with the integration constant fixed at zero.
  Polynomial antiderivative() const;
  // k-th derivative (k >= 0).
  Polynomial derivative(int k) const;

  Rational eval(const Rational& at) const;  // Horner

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Canonical text, terms in decreasing powers: "x^2 - 4*x + 2",
  // "1/2*x^2 - 2*x + 1", "-x + 1", "0".
  std::string str() const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

}  // namespace sepbasis

#endif
