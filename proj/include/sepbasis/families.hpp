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

#ifndef SEPBASIS_FAMILIES_HPP
#define SEPBASIS_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "sepbasis/covariant.hpp"
#include "sepbasis/diff_form.hpp"
#include "sepbasis/operator_expr.hpp"
#include "sepbasis/polynomial.hpp"

namespace sepbasis {

// A Pearson pair: A of degree <= 1 and nonzero B of degree <= 2. Together
// they fix the weight through omega'/omega = (A - B')/B, which is all the
// Rodrigues machinery ever needs; omega itself is never materialized.
struct PearsonPair {
  Polynomial A;
  Polynomial B;
};

// Validates the degree constraints and returns the pair.
PearsonPair make_pearson(Polynomial A, Polynomial B);

// h_n with h_0 = 1 and h_{j+1} = B h_j' + ((n-j) B' + A - B') h_j; equals
// (1/omega) D^n [omega B^n] entirely in polynomial arithmetic.
Polynomial rodrigues_general(const PearsonPair& pair, int n);

// B D^2 + A D.
DiffForm pearson_operator(const PearsonPair& pair);

// Eigenvalue of B D^2 + A D on a degree-n polynomial:
// n*a1 + n(n-1)*b2 from the leading coefficients of A and B.
Rational pearson_eigenvalue(const PearsonPair& pair, int n);

enum class GenMethod { Operator, Rodrigues, Raising };

GenMethod parse_method(const std::string& token);
std::string method_name(GenMethod m);

// One of the shipped classical families: laguerre, hermite (probabilist),
// legendre. Bundles the Pearson pair, the per-index transform operators,
// the eigenvalue convention, the moment sequence, and normalization data.
class FamilySpec {
 public:
  static const FamilySpec& get(const std::string& name);
  static const std::vector<std::string>& names();

  const std::string& name() const { return name_; }
  const PearsonPair& pearson() const { return pearson_; }

  // The family's eigenvalue convention lambda'_n; relates to the Pearson
  // eigenvalue by lambda'_n = pearson_sign() * pearson_eigenvalue(n).
  Rational eigenvalue(int n) const;
  int pearson_sign() const { return sign_; }

  // rodrigues_general output relates to the normalized family by
  // h_n = rodrigues_scale(n) * P_n.
  Rational rodrigues_scale(int n) const;

  // First `count` normalized moments of the weight.
  std::vector<Rational> moments(int count) const;
  // <P_n, P_n> under the moment functional.
  Rational norm(int n) const;

  // Source frame of the transform: monomials, or powers of B for legendre.
  FamilyRef source_frame(int dim) const;
  // The polynomial stepping the source family one index up.
  Polynomial source_step() const;

  // Per-index transform operator T_n with T_n(source member n) = P_n.
  // max_degree bounds the finite expansion of the hermite exponential.
  OperatorExpr op(int n, int max_degree) const;

  // 1 - Dinv for laguerre, x - D for hermite; legendre has none and raises
  // through the conjugated step instead.
  std::optional<OperatorExpr> raising_closed_form() const;

  // The family's separated transform at the given dimension.
  SeparatedTransform transform(int dim) const;

 private:
  enum class Kind { Laguerre, Hermite, Legendre };
  FamilySpec(Kind kind, std::string name, PearsonPair pearson, int sign);
  static const std::vector<FamilySpec>& registry();

  Kind kind_;
  std::string name_;
  PearsonPair pearson_;
  int sign_;
};

// P_n by one method, with all three methods cross-checked on every call;
// disagreement is an internal-consistency error.
Polynomial gen_classical(const FamilySpec& f, int n, GenMethod method);

// P_0 .. P_{count-1} by the given method (no cross-check).
std::vector<Polynomial> gen_family(const FamilySpec& f, int count, GenMethod method);

}  // namespace sepbasis

#endif
