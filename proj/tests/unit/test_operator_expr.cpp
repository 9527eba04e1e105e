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

#include "sepbasis/error.hpp"
#include "sepbasis/operator_expr.hpp"
#include "sepbasis/parse.hpp"

using sepbasis::Error;
using sepbasis::ErrorKind;
using sepbasis::LinearMap;
using sepbasis::monomial_frame;
using sepbasis::OperatorExpr;
using sepbasis::parse_operator;
using sepbasis::parse_poly;
using sepbasis::Polynomial;
using sepbasis::Rational;

TEST_CASE("atoms act as expected") {
  CHECK(OperatorExpr::D().apply(parse_poly("x^3"), 3) == parse_poly("3*x^2"));
  CHECK(OperatorExpr::X().apply(parse_poly("x"), 2) == parse_poly("x^2"));
  CHECK(OperatorExpr::Dinv().apply(parse_poly("x"), 2) == parse_poly("1/2*x^2"));
  CHECK(OperatorExpr::constant(Rational(3)).apply(parse_poly("x"), 1) == parse_poly("3*x"));
}

TEST_CASE("composition is operator product, not pointwise product") {
  OperatorExpr xD = OperatorExpr::X() * OperatorExpr::D();
  OperatorExpr Dx = OperatorExpr::D() * OperatorExpr::X();
  // [D, x] = 1: Dx - xD acts as the identity.
  Polynomial p = parse_poly("x^2 - 4*x + 2");
  CHECK((Dx - xD).apply(p, 3) == p);
  CHECK(xD.apply(parse_poly("x^2"), 2) == parse_poly("2*x^2"));
}

TEST_CASE("laguerre step operator on x^2") {
  OperatorExpr o2 = ((OperatorExpr::D() - OperatorExpr::constant(Rational(1))).pow(2))
                        .scaled(Rational(1, 2));
  CHECK(o2.apply(parse_poly("x^2"), 2) == parse_poly("1/2*x^2 - 2*x + 1"));
}

TEST_CASE("apply enforces the degree cap on every intermediate") {
  // x*Dinv pushes the degree up twice; the cap must catch the first step.
  OperatorExpr op = OperatorExpr::X() * OperatorExpr::Dinv();
  try {
    op.apply(parse_poly("x^2"), 3);  // Dinv: degree 3 ok; x: degree 4 overflows
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
  // Even when the final result would fit, intermediates may not:
  // D * x on x^(cap) overflows at the multiplication step.
  OperatorExpr dx = OperatorExpr::D() * OperatorExpr::X();
  CHECK_THROWS_AS(dx.apply(parse_poly("x^3"), 3), Error);
}

TEST_CASE("compile on a monomial frame") {
  auto mono = monomial_frame(3);
  LinearMap d = OperatorExpr::D().compile(mono, 0);
  CHECK(d.apply(parse_poly("x^2")) == parse_poly("2*x"));
  // D is nilpotent on a truncated space.
  auto m = d.matrix();
  CHECK(m * m * m == sepbasis::RatMatrix(3, 3));
  // x needs headroom on the top monomial.
  try {
    OperatorExpr::X().compile(mono, 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
  LinearMap xup = OperatorExpr::X().compile(mono, 1);
  CHECK(xup.matrix().rows() == 4);
  CHECK(xup.matrix().cols() == 3);
  CHECK(xup.apply(parse_poly("x^2")) == parse_poly("x^3"));
}

TEST_CASE("compile requires a monomial frame") {
  auto fam = sepbasis::make_family(
      sepbasis::BasisFamily::custom("c", {parse_poly("1"), parse_poly("1 - x")}));
  CHECK_THROWS_AS(OperatorExpr::D().compile(fam, 0), Error);
}

TEST_CASE("scaling folds constants") {
  OperatorExpr c = OperatorExpr::constant(Rational(2)).scaled(Rational(3));
  CHECK(c == OperatorExpr::constant(Rational(6)));
  CHECK((-OperatorExpr::constant(Rational(2))) == OperatorExpr::constant(Rational(-2)));
}

TEST_CASE("canonical text round-trips structurally") {
  OperatorExpr e =
      OperatorExpr::X() * OperatorExpr::D() - OperatorExpr::D().pow(2);
  CHECK(parse_operator(e.str()) == e);
  OperatorExpr lag = OperatorExpr::constant(Rational(1)) - OperatorExpr::Dinv();
  CHECK(parse_operator(lag.str()) == lag);
}

TEST_CASE("pow iterates composition") {
  OperatorExpr d2 = OperatorExpr::D().pow(2);
  CHECK(d2.apply(parse_poly("x^4"), 4) == parse_poly("12*x^2"));
  CHECK(OperatorExpr::D().pow(0).apply(parse_poly("x"), 1) == parse_poly("x"));
  CHECK_THROWS_AS(OperatorExpr::D().pow(-1), Error);
}
