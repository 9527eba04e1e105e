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

#include <doctest.h>

#include <string>
#include <vector>

#include "sepbasis/covariant.hpp"
#include "sepbasis/error.hpp"
#include "sepbasis/operator_expr.hpp"
#include "sepbasis/parse.hpp"

using sepbasis::BasisFamily;
using sepbasis::compose;
using sepbasis::derive_operator;
using sepbasis::derive_raising;
using sepbasis::EigenSpec;
using sepbasis::Error;
using sepbasis::ErrorKind;
using sepbasis::frobenius_covariant;
using sepbasis::LinearMap;
using sepbasis::make_family;
using sepbasis::MomentFunctional;
using sepbasis::monomial_frame;
using sepbasis::OperatorExpr;
using sepbasis::parse_poly;
using sepbasis::Polynomial;
using sepbasis::RatMatrix;
using sepbasis::Rational;
using sepbasis::SeparatedTransform;
using sepbasis::spectral_expand;

namespace {

RatMatrix from_longs(const std::vector<std::vector<long>>& rows) {
  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = Rational(rows[i][j]);
  return m;
}

// dim-2 transform with ops {1, D - 1} whose images are {1, 1 - x}.
SeparatedTransform dim2_transform() {
  auto mono = monomial_frame(2);
  std::vector<OperatorExpr> ops = {
      OperatorExpr::constant(Rational(1)),
      OperatorExpr::D() - OperatorExpr::constant(Rational(1)),
  };
  return SeparatedTransform::from_ops(mono, mono, ops);
}

}  // namespace

TEST_CASE("from_ops realizes images and the combined map") {
  SeparatedTransform t = dim2_transform();
  CHECK(t.dim() == 2);
  CHECK(t.has_ops());
  REQUIRE(t.images().size() == 2);
  CHECK(t.images()[0] == parse_poly("1"));
  CHECK(t.images()[1] == parse_poly("1 - x"));
  CHECK(t.combined().matrix() == from_longs({{1, 1}, {0, -1}}));
  CHECK(t.combined_inverse().matrix() == from_longs({{1, 1}, {0, -1}}));  // involutory
  CHECK(t.combined_inverse().apply(parse_poly("1 - x")) == parse_poly("x"));
}

TEST_CASE("dependent images are rejected as singular") {
  auto mono = monomial_frame(2);
  try {
    SeparatedTransform::from_images(mono, mono, {parse_poly("x"), parse_poly("2*x")});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singular);
    CHECK(std::string(e.what()).find("linearly dependent") != std::string::npos);
  }
}

TEST_CASE("transformed projector at dim 2 matches the frozen matrix") {
  SeparatedTransform t = dim2_transform();
  LinearMap p1 = t.transform_projector(1);
  CHECK(p1.matrix() == from_longs({{0, -1}, {0, 1}}));
  CHECK(p1.apply(parse_poly("1 - x")) == parse_poly("1 - x"));  // fixes its image
  CHECK(p1.apply(parse_poly("1")).is_zero());                   // kills the other
  LinearMap p0 = t.transform_projector(0);
  CHECK(p0.matrix() + p1.matrix() == RatMatrix::identity(2));
  // Rank-one and similarity forms are asserted equal internally; recheck.
  LinearMap sim = compose(t.combined(), compose(LinearMap::coordinate_projector(t.source(), 1),
                                                t.combined_inverse()));
  CHECK(sim == p1);
}

TEST_CASE("the swapped composition is not a projector family") {
  SeparatedTransform t = dim2_transform();
  LinearMap wrong = t.rejected_projector_form(1);
  CHECK(wrong.matrix() == from_longs({{0, 0}, {0, 1}}));
  // It fails the defining law: it does not fix the realized image.
  CHECK(wrong.apply(parse_poly("1 - x")) == parse_poly("-x"));
  CHECK(wrong.apply(parse_poly("1 - x")) != parse_poly("1 - x"));
}

TEST_CASE("rejected form needs explicit ops") {
  auto mono = monomial_frame(2);
  SeparatedTransform t =
      SeparatedTransform::from_images(mono, mono, {parse_poly("1"), parse_poly("1 - x")});
  CHECK_THROWS_AS(t.rejected_projector_form(1), Error);
}

TEST_CASE("frobenius covariants of a diagonal operator") {
  auto mono = monomial_frame(2);
  LinearMap xd = LinearMap::from_action(mono, mono, {parse_poly("0"), parse_poly("x")});
  EigenSpec eigs{{Rational(0), Rational(1)}};
  CHECK(frobenius_covariant(xd, eigs, 1) == xd);  // (M - 0)/(1 - 0) = M
  LinearMap p0 = frobenius_covariant(xd, eigs, 0);
  CHECK(p0.matrix() == RatMatrix::identity(2) - xd.matrix());

  auto mono3 = monomial_frame(3);
  LinearMap xd3 = LinearMap::from_action(
      mono3, mono3, {parse_poly("0"), parse_poly("x"), parse_poly("2*x^2")});
  EigenSpec eigs3{{Rational(0), Rational(1), Rational(2)}};
  LinearMap p1 = frobenius_covariant(xd3, eigs3, 1);
  // P_1 = M(M - 2)/(1*(1-2)) = 2M - M^2 on diag(0,1,2) = diag(0,1,0).
  RatMatrix expect(3, 3);
  expect.at(1, 1) = Rational(1);
  CHECK(p1.matrix() == expect);
  // Completeness and reconstruction.
  RatMatrix sum(3, 3);
  std::vector<LinearMap> ps;
  for (int l = 0; l < 3; ++l) {
    ps.push_back(frobenius_covariant(xd3, eigs3, l));
    sum = sum + ps.back().matrix();
  }
  CHECK(sum == RatMatrix::identity(3));
  CHECK(spectral_expand(eigs3, ps) == xd3);
}

TEST_CASE("covariants need pairwise distinct eigenvalues") {
  auto mono = monomial_frame(2);
  LinearMap id = LinearMap::identity(mono);
  EigenSpec eigs{{Rational(1), Rational(1)}};
  CHECK_FALSE(eigs.pairwise_distinct());
  try {
    frobenius_covariant(id, eigs, 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("pairwise distinct") != std::string::npos);
  }
}

TEST_CASE("derive_operator weights images by target eigenvalues") {
  auto mono = monomial_frame(2);
  SeparatedTransform t =
      SeparatedTransform::from_images(mono, mono, {parse_poly("1"), parse_poly("1 + x")});
  EigenSpec eigs{{Rational(0), Rational(5)}};
  LinearMap d = derive_operator(t, eigs);
  CHECK(d.matrix() == from_longs({{0, 5}, {0, 5}}));
  CHECK(d.apply(parse_poly("1 + x")) == parse_poly("5 + 5*x"));
  CHECK(d.apply(parse_poly("1")).is_zero());
}

TEST_CASE("similarity conjugation") {
  auto mono = monomial_frame(3);
  LinearMap d = LinearMap::from_action(
      mono, mono, {parse_poly("0"), parse_poly("1"), parse_poly("2*x")});
  LinearMap id = LinearMap::identity(mono);
  CHECK(sepbasis::similarity_conjugate(id, d) == d);
}

TEST_CASE("umbral application transplants coordinates") {
  SeparatedTransform t = dim2_transform();
  // 3 + 2x = 3*1 + 2*x in the source; image is 3*1 + 2*(1 - x) = 5 - 2x.
  CHECK(t.umbral_apply(parse_poly("3 + 2*x")) == parse_poly("5 - 2*x"));
}

TEST_CASE("moment functionals evaluate and pair") {
  // Factorial moments: the value of x^k is k!.
  std::vector<Rational> moments;
  Rational f(1);
  for (int k = 0; k < 8; ++k) {
    if (k > 0) f = f * Rational(k);
    moments.push_back(f);
  }
  MomentFunctional mf(moments);
  CHECK(mf.evaluate(parse_poly("x^2 + 1")) == Rational(3));
  CHECK(mf.pairing(parse_poly("1 - x"), parse_poly("x")) == Rational(-1));
  CHECK(mf.pairing(parse_poly("1 - x"), parse_poly("1 - x")) == Rational(1));
  try {
    mf.evaluate(parse_poly("x^8"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Moments);
  }
  CHECK_THROWS_AS(MomentFunctional({}), Error);
  CHECK_THROWS_AS(MomentFunctional({Rational(0)}), Error);
}

TEST_CASE("moment projector against a frozen value") {
  std::vector<Rational> moments;
  Rational f(1);
  for (int k = 0; k < 8; ++k) {
    if (k > 0) f = f * Rational(k);
    moments.push_back(f);
  }
  MomentFunctional mf(moments);
  auto fam = make_family(BasisFamily::custom(
      "laguerre head", {parse_poly("1"), parse_poly("1 - x"), parse_poly("1/2*x^2 - 2*x + 1")}));
  // <1 - x, x> = -1 and <1 - x, 1 - x> = 1, so the projection of x is x - 1.
  CHECK(sepbasis::moment_projector(mf, fam, 1, parse_poly("x")) == parse_poly("x - 1"));
  // Projections sum back to the projected polynomial on the span.
  Polynomial p = parse_poly("x^2");
  Polynomial sum;
  for (int i = 0; i < 3; ++i) sum = sum + sepbasis::moment_projector(mf, fam, i, p);
  CHECK(sum == p);
  // A non-orthogonal family is rejected.
  auto bad = make_family(BasisFamily::custom("bad", {parse_poly("1"), parse_poly("x + 1")}));
  try {
    sepbasis::moment_projector(mf, bad, 0, p);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Moments);
  }
}

TEST_CASE("derive_raising validates the stepping law") {
  auto mono = monomial_frame(4);
  std::vector<Polynomial> images;
  for (int i = 0; i < 4; ++i) images.push_back(Polynomial::monomial(i));
  SeparatedTransform ident = SeparatedTransform::from_images(mono, mono, images);
  // B = x steps the monomials; conjugation gives multiplication by x.
  LinearMap raise = derive_raising(ident, parse_poly("x"));
  CHECK(raise.apply(parse_poly("x^2")) == parse_poly("x^3"));
  // B = x + 1 does not step the monomial family.
  CHECK_THROWS_AS(derive_raising(ident, parse_poly("x + 1")), Error);
  // Degree-0 B cannot step anything.
  CHECK_THROWS_AS(derive_raising(ident, parse_poly("2")), Error);
}

TEST_CASE("ambient map rebuilds the stage on the target frame") {
  auto mono = monomial_frame(2);
  std::vector<Polynomial> e1 = {parse_poly("1"), parse_poly("1 + x")};
  auto mid = make_family(BasisFamily::custom("mid", e1));
  std::vector<Polynomial> e2 = {parse_poly("2"), parse_poly("1 - x")};
  SeparatedTransform stage2 = SeparatedTransform::from_images(mid, mono, e2);
  LinearMap u = stage2.ambient_map();
  CHECK(*u.source() == *mono);
  CHECK(*u.target() == *mono);
  CHECK(u.apply(parse_poly("1")) == parse_poly("2"));
  CHECK(u.apply(parse_poly("1 + x")) == parse_poly("1 - x"));
}
