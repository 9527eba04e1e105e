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

#ifndef SEPBASIS_DIFF_FORM_HPP
#define SEPBASIS_DIFF_FORM_HPP

#include <string>
#include <vector>

#include "sepbasis/linear_map.hpp"
#include "sepbasis/polynomial.hpp"

namespace sepbasis {

// A differential form sum_k c_k(x) * D^k with polynomial coefficients.
// On a monomial frame of dimension d, every linear map has exactly one
// representation with order < d, so extraction from a matrix is unique.
class DiffForm {
 public:
  // coeffs[k] multiplies D^k. Trailing zero polynomials are stripped.
  explicit DiffForm(std::vector<Polynomial> coeffs);

  // Unique representation of a square map on a monomial frame. If
  // max_order >= 0 and the extracted form's order exceeds it, throws a
  // Consistency error.
  static DiffForm from_map(const LinearMap& f, int max_order = -1);

  // Highest k with a nonzero coefficient; -1 for the zero form.
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }
  Polynomial coeff(int k) const;

  // sum_k c_k * p^(k); plain polynomial arithmetic, no frame involved.
  Polynomial apply(const Polynomial& p) const;

  // Square matrix of the form on a monomial frame. Throws Overflow if any
  // image leaves the frame.
  LinearMap compile(const FamilyRef& frame) const;

  DiffForm negated() const;

  // Fully expanded monomial terms c*x^a*D^b, highest x-power first, then
  // highest D-order; a leading negative term factors the sign out front.
  std::string str_expanded() const;

  // One term per D-order, highest first, with the coefficient polynomial
  // grouped (parenthesized when it has several terms).
  std::string str_grouped() const;

  bool operator==(const DiffForm& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const DiffForm& o) const { return !(*this == o); }

 private:
  std::vector<Polynomial> coeffs_;
};

}  // namespace sepbasis

#endif
