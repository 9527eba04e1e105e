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

#include <vector>

#include "sepbasis/error.hpp"
#include "sepbasis/matrix.hpp"

using sepbasis::Error;
using sepbasis::ErrorKind;
using sepbasis::RatMatrix;
using sepbasis::Rational;

namespace {

RatMatrix from_longs(const std::vector<std::vector<long>>& rows) {
  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = Rational(rows[i][j]);
  return m;
}

RatMatrix hilbert(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rational(1, i + j + 1);
  return m;
}

}  // namespace

TEST_CASE("identity and multiplication") {
  RatMatrix a = from_longs({{1, 2}, {3, 4}});
  CHECK(a * RatMatrix::identity(2) == a);
  CHECK(RatMatrix::identity(2) * a == a);
  RatMatrix b = from_longs({{0, 1}, {1, 0}});
  CHECK(a * b == from_longs({{2, 1}, {4, 3}}));
  CHECK(b * a == from_longs({{3, 4}, {1, 2}}));
  CHECK(a + (-a) == RatMatrix(2, 2));
  CHECK(a.scaled(Rational(1, 2)) * RatMatrix::identity(2).scaled(Rational(2)) == a);
}

TEST_CASE("exact inverse of the 3x3 Hilbert matrix") {
  // The Hilbert matrix is the classic ill-conditioned case for floating
  // point; its exact inverse is integral and known in closed form.
  RatMatrix expect = from_longs({{9, -36, 30}, {-36, 192, -180}, {30, -180, 180}});
  CHECK(hilbert(3).inverse() == expect);
  CHECK(hilbert(3) * expect == RatMatrix::identity(3));
}

TEST_CASE("inverse round-trips on a 6x6 Hilbert matrix") {
  RatMatrix h = hilbert(6);
  RatMatrix inv = h.inverse();
  CHECK(h * inv == RatMatrix::identity(6));
  CHECK(inv * h == RatMatrix::identity(6));
  CHECK(inv.inverse() == h);
}

TEST_CASE("an involutory matrix inverts to itself") {
  RatMatrix m = from_longs({{1, 1}, {0, -1}});
  CHECK(m.inverse() == m);
  CHECK(m * m == RatMatrix::identity(2));
}

TEST_CASE("singular matrices are rejected with kind Singular") {
  RatMatrix s = from_longs({{1, 2}, {2, 4}});
  try {
    s.inverse();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singular);
  }
  CHECK(s.rank() == 1);
  CHECK(from_longs({{0, 0}, {0, 0}}).rank() == 0);
  CHECK(hilbert(4).rank() == 4);
}

TEST_CASE("triangular structure and blocks") {
  RatMatrix t = from_longs({{1, 2, 3}, {0, 4, 5}, {0, 0, 6}});
  CHECK(t.is_upper_triangular());
  CHECK_FALSE(from_longs({{1, 0}, {1, 1}}).is_upper_triangular());
  CHECK(t.diagonal() == std::vector<Rational>{Rational(1), Rational(4), Rational(6)});
  CHECK(t.leading_block(2) == from_longs({{1, 2}, {0, 4}}));
  CHECK(t.leading_block(3) == t);
}

TEST_CASE("matrix-vector application") {
  RatMatrix a = from_longs({{1, 2}, {3, 4}});
  std::vector<Rational> v{Rational(1), Rational(-1)};
  CHECK(a.apply(v) == std::vector<Rational>{Rational(-1), Rational(-1)});
}

TEST_CASE("solve_exact distinguishes inconsistent from solvable") {
  // Full-column-rank, consistent.
  RatMatrix a = from_longs({{1, 0}, {0, 1}, {1, 1}});
  auto sol = sepbasis::solve_exact(a, {Rational(2), Rational(3), Rational(5)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == Rational(2));
  CHECK((*sol)[1] == Rational(3));
  // Inconsistent right-hand side.
  CHECK_FALSE(sepbasis::solve_exact(a, {Rational(2), Rational(3), Rational(6)}).has_value());
}
