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

#ifndef SEPBASIS_OPERATOR_EXPR_HPP
#define SEPBASIS_OPERATOR_EXPR_HPP

#include <memory>
#include <string>

#include "sepbasis/linear_map.hpp"

namespace sepbasis {

// Symbolic linear operator on polynomials, built from the atoms
//   D     differentiation
//   Dinv  antidifferentiation (integration constant 0)
//   x     multiplication by x
//   c     scalar multiple (rational constant)
// combined by +, -, composition (*), and iterated composition (^).
class OperatorExpr {
 public:
  static OperatorExpr D();
  static OperatorExpr Dinv();
  static OperatorExpr X();
  static OperatorExpr constant(const Rational& c);

  friend OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b);
  // composition: (a * b)(p) = a(b(p))
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);
  OperatorExpr pow(int k) const;  // k >= 0 iterated composition
  OperatorExpr scaled(const Rational& c) const;
  OperatorExpr operator-() const { return scaled(Rational(-1)); }

  // Evaluate on p; any intermediate of degree > max_degree is a hard
  // degree-overflow error (strict mode, nothing is truncated).
  Polynomial apply(const Polynomial& p, int max_degree) const;

  // Evaluate on an internal monomial frame of dimension dim+headroom.
  // The returned map has the declared frame as source; with headroom > 0
  // the target is the internal frame (degree-raising atoms consume
  // headroom), with headroom 0 it is square on the declared frame.
  LinearMap compile(const FamilyRef& frame, int headroom) const;

  // Canonical text; parsing the result reproduces the tree exactly.
  std::string str() const;

  friend bool operator==(const OperatorExpr& a, const OperatorExpr& b);
  friend bool operator!=(const OperatorExpr& a, const OperatorExpr& b) { return !(a == b); }

  struct Node;
  using NodeRef = std::shared_ptr<const Node>;
  explicit OperatorExpr(NodeRef n) : node_(std::move(n)) {}
  const NodeRef& node() const { return node_; }

 private:
  NodeRef node_;
};

}  // namespace sepbasis

#endif
