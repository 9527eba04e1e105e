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

#include "sepbasis/operator_expr.hpp"

namespace sepbasis {

enum class OpKind { D, Dinv, X, Const, Add, Sub, Compose, Pow };

struct OperatorExpr::Node {
  OpKind kind;
  Rational value;        // Const
  NodeRef lhs, rhs;      // binary nodes; Pow uses lhs only
  int exponent = 0;      // Pow
};

namespace {

OperatorExpr::NodeRef make_node(OpKind k) {
  auto n = std::make_shared<OperatorExpr::Node>();
  n->kind = k;
  return n;
}

OperatorExpr::NodeRef make_binary(OpKind k, OperatorExpr::NodeRef l, OperatorExpr::NodeRef r) {
  auto n = std::make_shared<OperatorExpr::Node>();
  n->kind = k;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

void check_degree(const Polynomial& p, int max_degree) {
  if (p.degree() > max_degree)
    fail(ErrorKind::Overflow, "degree overflow: intermediate degree " +
                                  std::to_string(p.degree()) +
                                  " exceeds the working frame capacity (max degree " +
                                  std::to_string(max_degree) + ")");
}

Polynomial eval_node(const OperatorExpr::Node& n, const Polynomial& p, int max_degree) {
  Polynomial r;
  switch (n.kind) {
    case OpKind::D:
      r = p.derivative();
      break;
    case OpKind::Dinv:
      r = p.antiderivative();
      break;
    case OpKind::X:
      r = Polynomial::x() * p;
      break;
    case OpKind::Const:
      r = p.scaled(n.value);
      break;
    case OpKind::Add:
      r = eval_node(*n.lhs, p, max_degree) + eval_node(*n.rhs, p, max_degree);
      break;
    case OpKind::Sub:
      r = eval_node(*n.lhs, p, max_degree) - eval_node(*n.rhs, p, max_degree);
      break;
    case OpKind::Compose:
      r = eval_node(*n.lhs, eval_node(*n.rhs, p, max_degree), max_degree);
      break;
    case OpKind::Pow:
      r = p;
      for (int i = 0; i < n.exponent; ++i) r = eval_node(*n.lhs, r, max_degree);
      break;
  }
  check_degree(r, max_degree);
  return r;
}

bool is_const(const OperatorExpr::NodeRef& n, const Rational& c) {
  return n->kind == OpKind::Const && n->value == c;
}

// Printed precedence: 1 = sum, 2 = product, 3 = power, 4 = atom.
// A printed negation is given precedence 1 so that it is always
// parenthesized inside products and to the right of +/-.
int print_prec(const OperatorExpr::Node& n) {
  switch (n.kind) {
    case OpKind::Add:
    case OpKind::Sub:
      return 1;
    case OpKind::Compose:
      return is_const(n.lhs, Rational(-1)) ? 1 : 2;
    case OpKind::Pow:
      return 3;
    default:
      return n.kind == OpKind::Const && n.value.sign() < 0 ? 1 : 4;
  }
}

std::string print_node(const OperatorExpr::Node& n);

std::string print_child(const OperatorExpr::Node& child, int min_prec) {
  std::string s = print_node(child);
  if (print_prec(child) < min_prec) return "(" + s + ")";
  return s;
}

std::string print_node(const OperatorExpr::Node& n) {
  switch (n.kind) {
    case OpKind::D:
      return "D";
    case OpKind::Dinv:
      return "Dinv";
    case OpKind::X:
      return "x";
    case OpKind::Const:
      return n.value.str();
    case OpKind::Add:
      return print_child(*n.lhs, 1) + " + " + print_child(*n.rhs, 2);
    case OpKind::Sub:
      return print_child(*n.lhs, 1) + " - " + print_child(*n.rhs, 2);
    case OpKind::Compose:
      if (is_const(n.lhs, Rational(-1))) return "-" + print_child(*n.rhs, 3);
      return print_child(*n.lhs, 2) + "*" + print_child(*n.rhs, 3);
    case OpKind::Pow:
      return print_child(*n.lhs, 4) + "^" + std::to_string(n.exponent);
  }
  return {};
}

bool equal_nodes(const OperatorExpr::Node& a, const OperatorExpr::Node& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case OpKind::D:
    case OpKind::Dinv:
    case OpKind::X:
      return true;
    case OpKind::Const:
      return a.value == b.value;
    case OpKind::Pow:
      return a.exponent == b.exponent && equal_nodes(*a.lhs, *b.lhs);
    default:
      return equal_nodes(*a.lhs, *b.lhs) && equal_nodes(*a.rhs, *b.rhs);
  }
}

}  // namespace

OperatorExpr OperatorExpr::D() { return OperatorExpr(make_node(OpKind::D)); }
OperatorExpr OperatorExpr::Dinv() { return OperatorExpr(make_node(OpKind::Dinv)); }
OperatorExpr OperatorExpr::X() { return OperatorExpr(make_node(OpKind::X)); }

OperatorExpr OperatorExpr::constant(const Rational& c) {
  auto n = std::make_shared<Node>();
  n->kind = OpKind::Const;
  n->value = c;
  return OperatorExpr(std::move(n));
}

OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b) {
  return OperatorExpr(make_binary(OpKind::Add, a.node_, b.node_));
}

OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b) {
  return OperatorExpr(make_binary(OpKind::Sub, a.node_, b.node_));
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  return OperatorExpr(make_binary(OpKind::Compose, a.node_, b.node_));
}

OperatorExpr OperatorExpr::pow(int k) const {
  if (k < 0) fail(ErrorKind::Domain, "operator power with negative exponent");
  auto n = std::make_shared<Node>();
  n->kind = OpKind::Pow;
  n->lhs = node_;
  n->exponent = k;
  return OperatorExpr(std::move(n));
}

OperatorExpr OperatorExpr::scaled(const Rational& c) const {
  if (node_->kind == OpKind::Const) return constant(c * node_->value);
  return constant(c) * *this;
}

Polynomial OperatorExpr::apply(const Polynomial& p, int max_degree) const {
  check_degree(p, max_degree);
  return eval_node(*node_, p, max_degree);
}

LinearMap OperatorExpr::compile(const FamilyRef& frame, int headroom) const {
  if (!frame->is_monomial())
    fail(ErrorKind::Domain, "operator compilation needs a monomial frame, got '" +
                                frame->label() + "'");
  if (headroom < 0) fail(ErrorKind::Domain, "negative headroom");
  const int cap = frame->dim() + headroom - 1;
  std::vector<Polynomial> images;
  images.reserve(static_cast<std::size_t>(frame->dim()));
  for (int j = 0; j < frame->dim(); ++j)
    images.push_back(apply(frame->member(j), cap));
  FamilyRef target = headroom == 0 ? frame : monomial_frame(frame->dim() + headroom);
  return LinearMap::from_action(frame, std::move(target), images);
}

std::string OperatorExpr::str() const { return print_node(*node_); }

bool operator==(const OperatorExpr& a, const OperatorExpr& b) {
  return equal_nodes(*a.node_, *b.node_);
}

}  // namespace sepbasis
