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

#ifndef SEPBASIS_BASIS_HPP
#define SEPBASIS_BASIS_HPP

#include <memory>
#include <string>
#include <vector>

#include "sepbasis/matrix.hpp"
#include "sepbasis/polynomial.hpp"

namespace sepbasis {

// An ordered, linearly independent family of polynomials acting as a frame.
// Coordinates of a polynomial are always relative to such a family.
class BasisFamily {
 public:
  // 1, x, x^2, ..., x^(dim-1)
  static BasisFamily monomial(int dim);
  // 1, B, B^2, ..., B^(dim-1) for non-constant B
  static BasisFamily bpower(const Polynomial& B, int dim);
  static BasisFamily custom(std::string label, std::vector<Polynomial> members);

  const std::string& label() const { return label_; }
  int dim() const { return static_cast<int>(members_.size()); }
  const Polynomial& member(int i) const;
  const std::vector<Polynomial>& members() const { return members_; }
  int ambient_degree() const { return ambient_degree_; }
  bool is_monomial() const;

  // Unique coordinates of p in this family; throws NotInSpan otherwise.
  std::vector<Rational> coordinates(const Polynomial& p) const;
  bool in_span(const Polynomial& p) const;
  Polynomial combine(const std::vector<Rational>& coords) const;

  friend bool operator==(const BasisFamily& a, const BasisFamily& b) {
    return a.label_ == b.label_ && a.members_ == b.members_;
  }
  friend bool operator!=(const BasisFamily& a, const BasisFamily& b) { return !(a == b); }

 private:
  BasisFamily(std::string label, std::vector<Polynomial> members);
  RatMatrix coefficient_matrix() const;

  std::string label_;
  std::vector<Polynomial> members_;
  int ambient_degree_ = 0;
};

using FamilyRef = std::shared_ptr<const BasisFamily>;

inline FamilyRef make_family(BasisFamily f) {
  return std::make_shared<const BasisFamily>(std::move(f));
}
FamilyRef monomial_frame(int dim);

}  // namespace sepbasis

#endif
