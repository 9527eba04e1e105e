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

#include "sepbasis/families.hpp"

#include <algorithm>

#include "sepbasis/error.hpp"
#include "sepbasis/parse.hpp"

namespace sepbasis {

PearsonPair make_pearson(Polynomial A, Polynomial B) {
  if (A.degree() > 1)
    fail(ErrorKind::Domain,
         "A must have degree <= 1, got degree " + std::to_string(A.degree()));
  if (B.is_zero()) fail(ErrorKind::Domain, "B must be nonzero");
  if (B.degree() > 2)
    fail(ErrorKind::Domain,
         "B must have degree <= 2, got degree " + std::to_string(B.degree()));
  return PearsonPair{std::move(A), std::move(B)};
}

Polynomial rodrigues_general(const PearsonPair& pair, int n) {
  if (n < 0) fail(ErrorKind::Domain, "rodrigues index must be non-negative");
  const Polynomial Bp = pair.B.derivative();
  Polynomial h = Polynomial::constant(Rational(1));
  for (int j = 0; j < n; ++j)
    h = pair.B * h.derivative() + (pair.A + Bp.scaled(Rational(n - j - 1))) * h;
  return h;
}

DiffForm pearson_operator(const PearsonPair& pair) {
  return DiffForm({Polynomial(), pair.A, pair.B});
}

Rational pearson_eigenvalue(const PearsonPair& pair, int n) {
  if (n < 0) fail(ErrorKind::Domain, "eigenvalue index must be non-negative");
  return Rational(n) * pair.A.coeff(1) + Rational(n) * Rational(n - 1) * pair.B.coeff(2);
}

GenMethod parse_method(const std::string& token) {
  if (token == "operator") return GenMethod::Operator;
  if (token == "rodrigues") return GenMethod::Rodrigues;
  if (token == "raising") return GenMethod::Raising;
  fail(ErrorKind::Domain,
       "unknown method '" + token + "'; expected operator, rodrigues, or raising");
}

std::string method_name(GenMethod m) {
  switch (m) {
    case GenMethod::Operator: return "operator";
    case GenMethod::Rodrigues: return "rodrigues";
    case GenMethod::Raising: return "raising";
  }
  return "?";
}

namespace {

// Finite form of e^{-D^2/2} on inputs of degree <= max_degree: the series
// truncates exactly because D is nilpotent there.
OperatorExpr hermite_exponential(int max_degree) {
  OperatorExpr sum = OperatorExpr::constant(Rational(1));
  Rational c(1);
  for (int k = 1; 2 * k <= max_degree; ++k) {
    c = c * Rational(-1, 2) / Rational(k);
    sum = sum + OperatorExpr::D().pow(2 * k).scaled(c);
  }
  return sum;
}

std::vector<Polynomial> raising_chain(const FamilySpec& f, int count);

}  // namespace

FamilySpec::FamilySpec(Kind kind, std::string name, PearsonPair pearson, int sign)
    : kind_(kind), name_(std::move(name)), pearson_(std::move(pearson)), sign_(sign) {}

const std::vector<FamilySpec>& FamilySpec::registry() {
  static const std::vector<FamilySpec>* specs = [] {
    auto* v = new std::vector<FamilySpec>;
    v->push_back(FamilySpec(Kind::Laguerre, "laguerre",
                            make_pearson(parse_poly("1 - x"), parse_poly("x")), -1));
    v->push_back(FamilySpec(Kind::Hermite, "hermite",
                            make_pearson(parse_poly("-x"), parse_poly("1")), -1));
    v->push_back(FamilySpec(Kind::Legendre, "legendre",
                            make_pearson(parse_poly("2*x"), parse_poly("x^2 - 1")), 1));
    return v;
  }();
  return *specs;
}

const FamilySpec& FamilySpec::get(const std::string& name) {
  for (const auto& f : registry())
    if (f.name() == name) return f;
  std::string known;
  for (const auto& f : registry()) known += (known.empty() ? "" : ", ") + f.name();
  fail(ErrorKind::Domain, "unknown family '" + name + "'; shipped families: " + known);
}

const std::vector<std::string>& FamilySpec::names() {
  static const std::vector<std::string> n = [] {
    std::vector<std::string> out;
    for (const auto& f : FamilySpec::registry()) out.push_back(f.name());
    return out;
  }();
  return n;
}

Rational FamilySpec::eigenvalue(int n) const {
  return pearson_eigenvalue(pearson_, n) * Rational(sign_);
}

Rational FamilySpec::rodrigues_scale(int n) const {
  switch (kind_) {
    case Kind::Laguerre: return factorial(static_cast<unsigned>(n));
    case Kind::Hermite: return Rational(n % 2 == 0 ? 1 : -1);
    case Kind::Legendre: {
      Rational two_n(1);
      for (int i = 0; i < n; ++i) two_n = two_n * Rational(2);
      return two_n * factorial(static_cast<unsigned>(n));
    }
  }
  return Rational(1);
}

std::vector<Rational> FamilySpec::moments(int count) const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    switch (kind_) {
      case Kind::Laguerre: out.push_back(factorial(static_cast<unsigned>(k))); break;
      case Kind::Hermite:
        out.push_back(k % 2 == 0 ? double_factorial(k - 1) : Rational(0));
        break;
      case Kind::Legendre:
        out.push_back(k % 2 == 0 ? Rational(2, k + 1) : Rational(0));
        break;
    }
  }
  return out;
}

Rational FamilySpec::norm(int n) const {
  switch (kind_) {
    case Kind::Laguerre: return Rational(1);
    case Kind::Hermite: return factorial(static_cast<unsigned>(n));
    case Kind::Legendre: return Rational(2, 2 * n + 1);
  }
  return Rational(1);
}

FamilyRef FamilySpec::source_frame(int dim) const {
  if (kind_ == Kind::Legendre) return make_family(BasisFamily::bpower(pearson_.B, dim));
  return monomial_frame(dim);
}

Polynomial FamilySpec::source_step() const {
  if (kind_ == Kind::Legendre) return pearson_.B;
  return Polynomial::x();
}

OperatorExpr FamilySpec::op(int n, int max_degree) const {
  switch (kind_) {
    case Kind::Laguerre:
      return (OperatorExpr::D() - OperatorExpr::constant(Rational(1)))
          .pow(n)
          .scaled(Rational(1) / factorial(static_cast<unsigned>(n)));
    case Kind::Hermite: return hermite_exponential(max_degree);
    case Kind::Legendre:
      return OperatorExpr::D().pow(n).scaled(Rational(1) / rodrigues_scale(n));
  }
  fail(ErrorKind::Domain, "unreachable family kind");
}

std::optional<OperatorExpr> FamilySpec::raising_closed_form() const {
  switch (kind_) {
    case Kind::Laguerre: return OperatorExpr::constant(Rational(1)) - OperatorExpr::Dinv();
    case Kind::Hermite: return OperatorExpr::X() - OperatorExpr::D();
    case Kind::Legendre: return std::nullopt;
  }
  return std::nullopt;
}

SeparatedTransform FamilySpec::transform(int dim) const {
  if (dim < 1) fail(ErrorKind::Domain, "transform dimension must be at least 1");
  std::vector<OperatorExpr> ops;
  ops.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) ops.push_back(op(i, dim - 1));
  return SeparatedTransform::from_ops(source_frame(dim), monomial_frame(dim), std::move(ops));
}

namespace {

Polynomial gen_by_operator(const FamilySpec& f, int n) {
  const Polynomial source = f.source_frame(n + 1)->member(n);
  return f.op(n, n).apply(source, std::max(source.degree(), n) + 1);
}

Polynomial gen_by_rodrigues(const FamilySpec& f, int n) {
  return rodrigues_general(f.pearson(), n).scaled(Rational(1) / f.rodrigues_scale(n));
}

std::vector<Polynomial> raising_chain(const FamilySpec& f, int count) {
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(count));
  out.push_back(Polynomial::constant(Rational(1)));
  const auto closed = f.raising_closed_form();
  const Polynomial step = f.source_step();
  for (int n = 0; n + 1 < count; ++n) {
    if (closed) {
      out.push_back(closed->apply(out.back(), n + 1));
    } else {
      // Conjugated step: A+ maps monomial(n+1) to monomial(n+2) when the
      // transform is built with degree(step) extra dimensions.
      const LinearMap raise = derive_raising(f.transform(n + 2 + step.degree()), step);
      out.push_back(raise.apply(out.back()));
    }
  }
  return out;
}

}  // namespace

Polynomial gen_classical(const FamilySpec& f, int n, GenMethod method) {
  if (n < 0) fail(ErrorKind::Domain, "generation index must be non-negative");
  const Polynomial by_op = gen_by_operator(f, n);
  const Polynomial by_rod = gen_by_rodrigues(f, n);
  const Polynomial by_raise = raising_chain(f, n + 1).back();
  if (!(by_op == by_rod) || !(by_op == by_raise))
    fail(ErrorKind::Consistency, "internal-consistency error: generation methods disagree at index " +
                                     std::to_string(n) + ": operator " + by_op.str() +
                                     ", rodrigues " + by_rod.str() + ", raising " +
                                     by_raise.str());
  switch (method) {
    case GenMethod::Operator: return by_op;
    case GenMethod::Rodrigues: return by_rod;
    case GenMethod::Raising: return by_raise;
  }
  return by_op;
}

std::vector<Polynomial> gen_family(const FamilySpec& f, int count, GenMethod method) {
  if (count < 0) fail(ErrorKind::Domain, "generation count must be non-negative");
  if (count == 0) return {};
  if (method == GenMethod::Raising) return raising_chain(f, count);
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n)
    out.push_back(method == GenMethod::Operator ? gen_by_operator(f, n) : gen_by_rodrigues(f, n));
  return out;
}

}  // namespace sepbasis
