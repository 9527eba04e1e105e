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

#ifndef SEPBASIS_MATRIX_HPP
#define SEPBASIS_MATRIX_HPP

#include <optional>
#include <vector>

#include "sepbasis/rational.hpp"

namespace sepbasis {

// Dense exact rational matrix.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols);
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j);
  const Rational& at(int i, int j) const;

  RatMatrix operator-() const;
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  RatMatrix scaled(const Rational& s) const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b);
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  bool is_upper_triangular() const;
  std::vector<Rational> diagonal() const;
  RatMatrix leading_block(int n) const;

  // Exact inverse by fraction-free (Bareiss-style) Gauss-Jordan elimination.
  // Throws Singular with the trace of pivots found so far.
  RatMatrix inverse() const;

  // Rank by exact elimination.
  int rank() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

// Unique exact solution of A x = b for A with full column rank.
// Returns nullopt when the system is inconsistent (b outside the column
// space); throws Singular when the columns of A are dependent.
std::optional<std::vector<Rational>> solve_exact(const RatMatrix& A,
                                                 const std::vector<Rational>& b);

}  // namespace sepbasis

#endif
