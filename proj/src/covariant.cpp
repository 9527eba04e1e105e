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

#include "sepbasis/covariant.hpp"

#include <algorithm>
#include <utility>

#include "sepbasis/error.hpp"

namespace sepbasis {

bool EigenSpec::pairwise_distinct() const {
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j]) return false;
  return true;
}

SeparatedTransform::SeparatedTransform(FamilyRef source, FamilyRef target,
                                       std::vector<OperatorExpr> ops,
                                       std::vector<Polynomial> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      ops_(std::move(ops)),
      images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_->dim())
    fail(ErrorKind::Domain, "need one realized image per source member: got " +
                                std::to_string(images_.size()) + " for dimension " +
                                std::to_string(source_->dim()));
  combined_.emplace(LinearMap::from_action(source_, target_, images_));
  if (combined_->matrix().rank() < source_->dim())
    fail(ErrorKind::Singular, "sum O_j P_j is singular: the realized images are linearly dependent");
  if (combined_->is_square()) inverse_.emplace(combined_->inverse());
}

SeparatedTransform SeparatedTransform::from_ops(FamilyRef source, FamilyRef target_frame,
                                                std::vector<OperatorExpr> ops) {
  if (static_cast<int>(ops.size()) != source->dim())
    fail(ErrorKind::Domain, "need one operator per source member: got " +
                                std::to_string(ops.size()) + " for dimension " +
                                std::to_string(source->dim()));
  const int cap = std::max(source->ambient_degree(), target_frame->ambient_degree());
  std::vector<Polynomial> images;
  images.reserve(ops.size());
  for (int i = 0; i < source->dim(); ++i) images.push_back(ops[i].apply(source->member(i), cap));
  return SeparatedTransform(std::move(source), std::move(target_frame), std::move(ops),
                            std::move(images));
}

SeparatedTransform SeparatedTransform::from_images(FamilyRef source, FamilyRef target_frame,
                                                   std::vector<Polynomial> images) {
  return SeparatedTransform(std::move(source), std::move(target_frame), {}, std::move(images));
}

const LinearMap& SeparatedTransform::combined_inverse() const {
  if (!inverse_)
    fail(ErrorKind::Domain, "the combined map is " + std::to_string(target_->dim()) + "x" +
                                std::to_string(source_->dim()) + ", not square; no inverse");
  return *inverse_;
}

LinearMap SeparatedTransform::ambient_map() const {
  if (source_->dim() != target_->dim())
    fail(ErrorKind::Domain, "the source members do not form a square frame inside the target");
  RatMatrix C(target_->dim(), source_->dim());
  for (int j = 0; j < source_->dim(); ++j) {
    const auto coords = target_->coordinates(source_->member(j));
    for (int r = 0; r < target_->dim(); ++r) C.at(r, j) = coords[r];
  }
  return LinearMap(target_, target_, combined_->matrix() * C.inverse());
}

LinearMap SeparatedTransform::transform_projector(int i) const {
  if (i < 0 || i >= dim())
    fail(ErrorKind::Domain, "projector index " + std::to_string(i) + " out of range [0, " +
                                std::to_string(dim()) + ")");
  const LinearMap& inv = combined_inverse();
  // Rank-one form O_i P_i (sum O_j P_j)^{-1}: only column i of O-hat survives.
  RatMatrix picked(target_->dim(), source_->dim());
  for (int r = 0; r < target_->dim(); ++r) picked.at(r, i) = combined_->matrix().at(r, i);
  const RatMatrix rank_one = picked * inv.matrix();
  const LinearMap similarity =
      compose(*combined_, compose(LinearMap::coordinate_projector(source_, i), inv));
  if (rank_one != similarity.matrix())
    fail(ErrorKind::Consistency,
         "internal-consistency error: rank-one and similarity projector forms disagree at index " +
             std::to_string(i));
  return LinearMap(target_, target_, rank_one);
}

LinearMap SeparatedTransform::rejected_projector_form(int i) const {
  if (i < 0 || i >= dim())
    fail(ErrorKind::Domain, "projector index " + std::to_string(i) + " out of range [0, " +
                                std::to_string(dim()) + ")");
  if (!has_ops())
    fail(ErrorKind::Domain, "the rejected composition needs explicit per-member operators");
  if (!(*source_ == *target_))
    fail(ErrorKind::FrameMismatch, "the rejected composition lives on a single shared frame");
  const int d = dim();
  std::vector<RatMatrix> compiled;
  compiled.reserve(d);
  for (int j = 0; j < d; ++j) compiled.push_back(ops_[j].compile(source_, 0).matrix());
  // P_j O_j keeps only row j of O_j's matrix.
  RatMatrix sum(d, d), picked(d, d);
  for (int j = 0; j < d; ++j)
    for (int c = 0; c < d; ++c) sum.at(j, c) = compiled[j].at(j, c);
  for (int c = 0; c < d; ++c) picked.at(i, c) = compiled[i].at(i, c);
  return LinearMap(source_, source_, sum.inverse() * picked);
}

Polynomial SeparatedTransform::umbral_apply(const Polynomial& p) const {
  return combined_->apply(p);
}

LinearMap separated_compose(const SeparatedTransform& t) { return t.combined(); }

LinearMap frobenius_covariant(const LinearMap& op, const EigenSpec& eigs, int l) {
  if (!op.is_square() || !(*op.source() == *op.target()))
    fail(ErrorKind::FrameMismatch, "covariants need an endomorphism of a single frame");
  const int d = op.matrix().rows();
  if (static_cast<int>(eigs.values.size()) != d)
    fail(ErrorKind::Domain, "need one eigenvalue per dimension: got " +
                                std::to_string(eigs.values.size()) + " for dimension " +
                                std::to_string(d));
  if (l < 0 || l >= d)
    fail(ErrorKind::Domain, "covariant index " + std::to_string(l) + " out of range [0, " +
                                std::to_string(d) + ")");
  if (!eigs.pairwise_distinct())
    fail(ErrorKind::Domain, "covariant undefined: eigenvalues are not pairwise distinct");
  RatMatrix P = RatMatrix::identity(d);
  for (int k = 0; k < d; ++k) {
    if (k == l) continue;
    const RatMatrix shifted = op.matrix() - RatMatrix::identity(d).scaled(eigs.values[k]);
    P = (P * shifted).scaled(Rational(1) / (eigs.values[l] - eigs.values[k]));
  }
  return LinearMap(op.source(), op.target(), P);
}

LinearMap spectral_expand(const EigenSpec& eigs, const std::vector<LinearMap>& projectors) {
  if (projectors.empty()) fail(ErrorKind::Domain, "spectral expansion needs at least one projector");
  if (eigs.values.size() != projectors.size())
    fail(ErrorKind::Domain, "eigenvalue and projector counts differ: " +
                                std::to_string(eigs.values.size()) + " vs " +
                                std::to_string(projectors.size()));
  const auto& src = projectors.front().source();
  const auto& tgt = projectors.front().target();
  for (const auto& p : projectors)
    if (!(*p.source() == *src) || !(*p.target() == *tgt))
      fail(ErrorKind::FrameMismatch, "projectors do not share one frame");
  RatMatrix sum(projectors.front().matrix().rows(), projectors.front().matrix().cols());
  for (std::size_t j = 0; j < projectors.size(); ++j)
    sum = sum + projectors[j].matrix().scaled(eigs.values[j]);
  return LinearMap(src, tgt, sum);
}

LinearMap derive_operator(const SeparatedTransform& t, const EigenSpec& target_eigs) {
  if (static_cast<int>(target_eigs.values.size()) != t.dim())
    fail(ErrorKind::Domain, "need one target eigenvalue per source member: got " +
                                std::to_string(target_eigs.values.size()) + " for dimension " +
                                std::to_string(t.dim()));
  const LinearMap& inv = t.combined_inverse();
  const RatMatrix& C = t.combined().matrix();
  RatMatrix weighted(C.rows(), C.cols());
  for (int j = 0; j < C.cols(); ++j)
    for (int r = 0; r < C.rows(); ++r) weighted.at(r, j) = C.at(r, j) * target_eigs.values[j];
  LinearMap derived(t.target_frame(), t.target_frame(), weighted * inv.matrix());
  for (int n = 0; n < t.dim(); ++n)
    if (!(derived.apply(t.images()[n]) == t.images()[n].scaled(target_eigs.values[n])))
      fail(ErrorKind::Consistency,
           "internal-consistency error: the derived operator fails its eigen-relation on image " +
               std::to_string(n));
  return derived;
}

LinearMap similarity_conjugate(const LinearMap& O, const LinearMap& D) {
  return compose(O, compose(D, O.inverse()));
}

Polynomial umbral_apply(const SeparatedTransform& t, const Polynomial& p) {
  return t.umbral_apply(p);
}

MomentFunctional::MomentFunctional(std::vector<Rational> moments) : moments_(std::move(moments)) {
  if (moments_.empty()) fail(ErrorKind::Moments, "a moment functional needs at least one moment");
  if (moments_[0].sign() <= 0)
    fail(ErrorKind::Moments, "moment 0 must be positive, got " + moments_[0].str());
}

Rational MomentFunctional::evaluate(const Polynomial& p) const {
  if (p.degree() >= count())
    fail(ErrorKind::Moments, "moment functional has " + std::to_string(count()) +
                                 " moments but the argument has degree " +
                                 std::to_string(p.degree()) + "; need " +
                                 std::to_string(p.degree() + 1));
  Rational s;
  for (int k = 0; k <= p.degree(); ++k) s = s + moments_[static_cast<std::size_t>(k)] * p.coeff(k);
  return s;
}

Rational MomentFunctional::pairing(const Polynomial& f, const Polynomial& g) const {
  return evaluate(f * g);
}

Polynomial moment_projector(const MomentFunctional& mf, const FamilyRef& family, int i,
                            const Polynomial& F) {
  if (i < 0 || i >= family->dim())
    fail(ErrorKind::Domain, "projector index " + std::to_string(i) + " out of range [0, " +
                                std::to_string(family->dim()) + ")");
  const auto& mem = family->members();
  for (std::size_t a = 0; a < mem.size(); ++a)
    for (std::size_t b = a + 1; b < mem.size(); ++b) {
      const Rational r = mf.pairing(mem[a], mem[b]);
      if (!r.is_zero())
        fail(ErrorKind::Moments, "family members " + std::to_string(a) + " and " +
                                     std::to_string(b) +
                                     " are not orthogonal under the moment functional (pairing " +
                                     r.str() + ")");
    }
  const Rational self = mf.pairing(mem[i], mem[i]);
  if (self.is_zero())
    fail(ErrorKind::Moments,
         "member " + std::to_string(i) + " has zero self-pairing under the moment functional");
  return mem[i].scaled(mf.pairing(mem[i], F) / self);
}

LinearMap derive_raising(const SeparatedTransform& t, const Polynomial& B) {
  const int d = t.dim();
  const int s = B.degree();
  if (s < 1) fail(ErrorKind::Domain, "the step polynomial must be non-constant");
  const int m = d - s;
  if (m < 1)
    fail(ErrorKind::Domain, "headroom exhausted: dimension " + std::to_string(d) +
                                " minus step degree " + std::to_string(s) +
                                " leaves no validity range");
  for (int j = 0; j < m; ++j)
    if (!(B * t.source()->member(j) == t.source()->member(j + 1)))
      fail(ErrorKind::Domain, "B does not step the source family: B*member " + std::to_string(j) +
                                  " differs from member " + std::to_string(j + 1));
  auto sub = [&t](int k) {
    std::vector<Polynomial> mem(t.source()->members().begin(), t.source()->members().begin() + k);
    return make_family(
        BasisFamily::custom(t.source()->label() + "[0.." + std::to_string(k) + ")", std::move(mem)));
  };
  const FamilyRef src_m = sub(m), src_m1 = sub(m + 1);
  const FamilyRef mono_m = monomial_frame(m), mono_m1 = monomial_frame(m + 1);
  const std::vector<Polynomial> im_m(t.images().begin(), t.images().begin() + m);
  const std::vector<Polynomial> im_m1(t.images().begin(), t.images().begin() + m + 1);
  LinearMap window_m = [&] {
    try {
      return LinearMap::from_action(src_m, mono_m, im_m);
    } catch (const Error& e) {
      fail(ErrorKind::Overflow, std::string("raising window of dimension ") + std::to_string(m) +
                                    ": " + e.what());
    }
  }();
  LinearMap window_m1 = [&] {
    try {
      return LinearMap::from_action(src_m1, mono_m1, im_m1);
    } catch (const Error& e) {
      fail(ErrorKind::Overflow, std::string("raising window of dimension ") +
                                    std::to_string(m + 1) + ": " + e.what());
    }
  }();
  RatMatrix shift(m + 1, m);
  for (int j = 0; j < m; ++j) shift.at(j + 1, j) = Rational(1);
  return compose(window_m1, compose(LinearMap(src_m, src_m1, shift), window_m.inverse()));
}

}  // namespace sepbasis
