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

#include "sepbasis/basis.hpp"

namespace sepbasis {

BasisFamily::BasisFamily(std::string label, std::vector<Polynomial> members)
    : label_(std::move(label)), members_(std::move(members)) {
  if (members_.empty()) fail(ErrorKind::Domain, "basis family '" + label_ + "' is empty");
  if (members_.front().is_zero())
    fail(ErrorKind::Domain, "basis family '" + label_ + "' has a zero leading member");
  for (const auto& m : members_)
    if (m.degree() > ambient_degree_) ambient_degree_ = m.degree();
  if (coefficient_matrix().rank() != dim())
    fail(ErrorKind::Domain, "basis family '" + label_ + "' has dependent members");
}

BasisFamily BasisFamily::monomial(int dim) {
  if (dim < 1) fail(ErrorKind::Domain, "monomial family needs dimension >= 1");
  std::vector<Polynomial> m;
  m.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) m.push_back(Polynomial::monomial(i));
  return BasisFamily("monomial", std::move(m));
}

BasisFamily BasisFamily::bpower(const Polynomial& B, int dim) {
  if (dim < 1) fail(ErrorKind::Domain, "power family needs dimension >= 1");
  if (B.degree() < 1)
    fail(ErrorKind::Domain, "power family base must be non-constant, got '" + B.str() + "'");
  std::vector<Polynomial> m;
  m.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) m.push_back(B.pow(i));
  return BasisFamily("bpower(" + B.str() + ")", std::move(m));
}

BasisFamily BasisFamily::custom(std::string label, std::vector<Polynomial> members) {
  return BasisFamily(std::move(label), std::move(members));
}

const Polynomial& BasisFamily::member(int i) const {
  if (i < 0 || i >= dim())
    fail(ErrorKind::Domain, "member index " + std::to_string(i) + " out of range for family '" +
                                label_ + "' of dimension " + std::to_string(dim()));
  return members_[static_cast<std::size_t>(i)];
}

bool BasisFamily::is_monomial() const {
  for (int i = 0; i < dim(); ++i)
    if (members_[static_cast<std::size_t>(i)] != Polynomial::monomial(i)) return false;
  return true;
}

RatMatrix BasisFamily::coefficient_matrix() const {
  RatMatrix a(ambient_degree_ + 1, dim());
  for (int j = 0; j < dim(); ++j)
    for (int i = 0; i <= members_[static_cast<std::size_t>(j)].degree(); ++i)
      a.at(i, j) = members_[static_cast<std::size_t>(j)].coeff(i);
  return a;
}

std::vector<Rational> BasisFamily::coordinates(const Polynomial& p) const {
  if (is_monomial()) {
    if (p.degree() >= dim())
      fail(ErrorKind::NotInSpan, "polynomial '" + p.str() + "' is not in the span of family '" +
                                     label_ + "' (degree " + std::to_string(p.degree()) +
                                     " exceeds " + std::to_string(dim() - 1) + ")");
    std::vector<Rational> c(static_cast<std::size_t>(dim()));
    for (int k = 0; k <= p.degree(); ++k) c[static_cast<std::size_t>(k)] = p.coeff(k);
    return c;
  }
  if (p.degree() > ambient_degree_)
    fail(ErrorKind::NotInSpan,
         "polynomial '" + p.str() + "' is not in the span of family '" + label_ + "'");
  std::vector<Rational> rhs(static_cast<std::size_t>(ambient_degree_ + 1));
  for (int k = 0; k <= p.degree(); ++k) rhs[static_cast<std::size_t>(k)] = p.coeff(k);
  auto sol = solve_exact(coefficient_matrix(), rhs);
  if (!sol)
    fail(ErrorKind::NotInSpan,
         "polynomial '" + p.str() + "' is not in the span of family '" + label_ + "'");
  return *sol;
}

bool BasisFamily::in_span(const Polynomial& p) const {
  if (is_monomial()) return p.degree() < dim();
  if (p.degree() > ambient_degree_) return false;
  std::vector<Rational> rhs(static_cast<std::size_t>(ambient_degree_ + 1));
  for (int k = 0; k <= p.degree(); ++k) rhs[static_cast<std::size_t>(k)] = p.coeff(k);
  return solve_exact(coefficient_matrix(), rhs).has_value();
}

Polynomial BasisFamily::combine(const std::vector<Rational>& coords) const {
  if (static_cast<int>(coords.size()) != dim())
    fail(ErrorKind::Domain, "coordinate count does not match family dimension");
  Polynomial p;
  for (int i = 0; i < dim(); ++i)
    p += members_[static_cast<std::size_t>(i)].scaled(coords[static_cast<std::size_t>(i)]);
  return p;
}

FamilyRef monomial_frame(int dim) { return make_family(BasisFamily::monomial(dim)); }

}  // namespace sepbasis
