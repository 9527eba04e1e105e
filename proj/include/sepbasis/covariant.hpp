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

#ifndef SEPBASIS_COVARIANT_HPP
#define SEPBASIS_COVARIANT_HPP

#include <optional>
#include <vector>

#include "sepbasis/basis.hpp"
#include "sepbasis/linear_map.hpp"
#include "sepbasis/operator_expr.hpp"
#include "sepbasis/polynomial.hpp"

namespace sepbasis {

// Eigenvalues attached to basis members by index.
struct EigenSpec {
  std::vector<Rational> values;

  bool pairwise_distinct() const;
};

// A basis change that acts member by member: operator O_i sends source
// member i to its realized image, and the combined map O-hat = sum_j O_j P_j
// collects those images column by column. Images are realized eagerly at
// construction and checked for linear independence.
class SeparatedTransform {
 public:
  // Realize images by applying ops[i] to source member i inside the target
  // frame's degree budget.
  static SeparatedTransform from_ops(FamilyRef source, FamilyRef target_frame,
                                     std::vector<OperatorExpr> ops);

  // Images supplied directly; the per-member operators stay implicit as
  // rank-one "member i to image i" data.
  static SeparatedTransform from_images(FamilyRef source, FamilyRef target_frame,
                                        std::vector<Polynomial> images);

  const FamilyRef& source() const { return source_; }
  const FamilyRef& target_frame() const { return target_; }
  int dim() const { return source_->dim(); }
  const std::vector<Polynomial>& images() const { return images_; }
  bool has_ops() const { return !ops_.empty(); }
  const std::vector<OperatorExpr>& ops() const { return ops_; }

  // O-hat as a map from source coordinates to the target frame.
  const LinearMap& combined() const { return *combined_; }
  // Cached exact inverse; error if the combined map is not square.
  const LinearMap& combined_inverse() const;

  // The transform as an operator on the target frame itself: requires the
  // source members to lie in (and span) the target frame.
  LinearMap ambient_map() const;

  // P'_i = O_i P_i (sum_j O_j P_j)^{-1}, computed in the rank-one form and
  // asserted equal to the similarity form O-hat P_i O-hat^{-1}.
  LinearMap transform_projector(int i) const;

  // The wrong-order composition (sum_j P_j O_j)^{-1} P_i O_i. It is not a
  // transformed projector; it is kept solely as a negative control and
  // needs explicit ops on a shared square frame.
  LinearMap rejected_projector_form(int i) const;

  // Coefficient-preserving substitution: expand p over the source members
  // and replace each member by its realized image.
  Polynomial umbral_apply(const Polynomial& p) const;

 private:
  SeparatedTransform(FamilyRef source, FamilyRef target, std::vector<OperatorExpr> ops,
                     std::vector<Polynomial> images);

  FamilyRef source_;
  FamilyRef target_;
  std::vector<OperatorExpr> ops_;  // empty when built from images
  std::vector<Polynomial> images_;
  std::optional<LinearMap> combined_;
  std::optional<LinearMap> inverse_;  // present iff square
};

// O-hat = sum_j O_j P_j.
LinearMap separated_compose(const SeparatedTransform& t);

// Product form of the spectral projector attached to eigs.values[l]:
// prod_{k != l} (op - lambda_k I) / (lambda_l - lambda_k).
LinearMap frobenius_covariant(const LinearMap& op, const EigenSpec& eigs, int l);

// sum_j eigs.values[j] * projectors[j].
LinearMap spectral_expand(const EigenSpec& eigs, const std::vector<LinearMap>& projectors);

// D' = (sum_i lambda'_i O_i P_i)(sum_j O_j P_j)^{-1} on the target frame.
// Self-checks D' image_n = lambda'_n image_n for every n before returning.
LinearMap derive_operator(const SeparatedTransform& t, const EigenSpec& target_eigs);

// O * D * O^{-1}.
LinearMap similarity_conjugate(const LinearMap& O, const LinearMap& D);

Polynomial umbral_apply(const SeparatedTransform& t, const Polynomial& p);

// A linear functional on polynomials given by its moment sequence:
// moments[n] is the value on x^n.
class MomentFunctional {
 public:
  explicit MomentFunctional(std::vector<Rational> moments);

  int count() const { return static_cast<int>(moments_.size()); }
  // Value on p; needs degree(p) < count().
  Rational evaluate(const Polynomial& p) const;
  // <f, g> = value on f*g.
  Rational pairing(const Polynomial& f, const Polynomial& g) const;

 private:
  std::vector<Rational> moments_;
};

// (<member_i, F> / <member_i, member_i>) * member_i. The family must be
// orthogonal under mf, with nonzero self-pairings.
Polynomial moment_projector(const MomentFunctional& mf, const FamilyRef& family, int i,
                            const Polynomial& F);

// A+ = O-hat (multiply-by-B) O-hat^{-1}, where B steps the source family
// (B * member_j = member_{j+1}). Valid on source degrees <= dim-1-degree(B);
// the returned map sends monomial(dim - degree(B)) to one dimension up.
LinearMap derive_raising(const SeparatedTransform& t, const Polynomial& B);

}  // namespace sepbasis

#endif
