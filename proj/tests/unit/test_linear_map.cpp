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
#include "sepbasis/linear_map.hpp"
#include "sepbasis/parse.hpp"

using sepbasis::BasisFamily;
using sepbasis::compose;
using sepbasis::Error;
using sepbasis::ErrorKind;
using sepbasis::LinearMap;
using sepbasis::make_family;
using sepbasis::monomial_frame;
using sepbasis::parse_poly;
using sepbasis::Polynomial;
using sepbasis::RatMatrix;
using sepbasis::Rational;

TEST_CASE("from_action stores images column by column") {
  auto mono = monomial_frame(2);
  LinearMap f = LinearMap::from_action(mono, mono, {parse_poly("1"), parse_poly("1 - x")});
  CHECK(f.matrix().at(0, 0) == Rational(1));
  CHECK(f.matrix().at(0, 1) == Rational(1));
  CHECK(f.matrix().at(1, 0) == Rational(0));
  CHECK(f.matrix().at(1, 1) == Rational(-1));
  CHECK(f.apply(parse_poly("x")) == parse_poly("1 - x"));
  CHECK(f.apply(parse_poly("3 + 2*x")) == parse_poly("3") + parse_poly("2 - 2*x"));
}

TEST_CASE("identity and coordinate projectors") {
  auto mono = monomial_frame(3);
  LinearMap id = LinearMap::identity(mono);
  CHECK(id.apply(parse_poly("x^2 - 4*x + 2")) == parse_poly("x^2 - 4*x + 2"));
  LinearMap p1 = LinearMap::coordinate_projector(mono, 1);
  CHECK(p1.apply(parse_poly("x^2 - 4*x + 2")) == parse_poly("-4*x"));
  RatMatrix sum = p1.matrix();
  sum = sum + LinearMap::coordinate_projector(mono, 0).matrix();
  sum = sum + LinearMap::coordinate_projector(mono, 2).matrix();
  CHECK(sum == RatMatrix::identity(3));
  CHECK_THROWS_AS(LinearMap::coordinate_projector(mono, 3), Error);
}

TEST_CASE("inverse swaps frames and round-trips") {
  auto mono = monomial_frame(2);
  auto fam = make_family(BasisFamily::custom("imgs", {parse_poly("1"), parse_poly("1 - x")}));
  LinearMap f = LinearMap::from_action(mono, fam, {parse_poly("1"), parse_poly("1 - x")});
  LinearMap inv = f.inverse();
  CHECK(*inv.source() == *fam);
  CHECK(*inv.target() == *mono);
  CHECK(compose(inv, f) == LinearMap::identity(mono));
  CHECK(compose(f, inv) == LinearMap::identity(fam));
}

TEST_CASE("composition requires matching inner frames") {
  auto m2 = monomial_frame(2);
  auto m3 = monomial_frame(3);
  LinearMap f = LinearMap::identity(m2);
  LinearMap g = LinearMap::identity(m3);
  try {
    compose(f, g);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FrameMismatch);
    // The message names both frames so the mismatch is diagnosable.
    CHECK(std::string(e.what()).find("monomial") != std::string::npos);
  }
}

TEST_CASE("composition composes actions") {
  auto mono = monomial_frame(3);
  LinearMap d = LinearMap::from_action(
      mono, mono, {parse_poly("0"), parse_poly("1"), parse_poly("2*x")});  // differentiation
  LinearMap dd = compose(d, d);
  CHECK(dd.apply(parse_poly("x^2")) == parse_poly("2"));
  CHECK(dd.apply(parse_poly("x")) == Polynomial());
}

TEST_CASE("triangular eigenvalue read-off") {
  auto mono = monomial_frame(3);
  LinearMap xd = LinearMap::from_action(
      mono, mono, {parse_poly("0"), parse_poly("x"), parse_poly("2*x^2")});  // x * d/dx
  CHECK(xd.eigenvalues_triangular() ==
        std::vector<Rational>{Rational(0), Rational(1), Rational(2)});
  // A non-triangular matrix cannot be read off; the error instructs the
  // caller to supply eigenvalues explicitly.
  LinearMap swap = LinearMap::from_action(
      mono, mono, {parse_poly("x"), parse_poly("1"), parse_poly("x^2")});
  try {
    swap.eigenvalues_triangular();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("eigenvalues") != std::string::npos);
  }
}

TEST_CASE("map equality is frames plus matrix") {
  auto mono = monomial_frame(2);
  LinearMap a = LinearMap::identity(mono);
  LinearMap b = LinearMap::identity(monomial_frame(2));
  CHECK(a == b);
  CHECK(a != LinearMap::identity(monomial_frame(3)));
}
