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

#include "sepbasis/diff_form.hpp"

#include <algorithm>
#include <tuple>

#include "sepbasis/error.hpp"

namespace sepbasis {
namespace {

// j * (j-1) * ... * (j-k+1)
Rational falling(int j, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r = r * Rational(j - i);
  return r;
}

std::string dpow(int k) { return k == 1 ? "D" : "D^" + std::to_string(k); }

// c is positive; elide a coefficient of one unless the term is bare.
std::string term_str(const Rational& c, int xp, int dp) {
  std::string out;
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += "*";
    out += piece;
  };
  if (!c.is_one() || (xp == 0 && dp == 0)) append(c.str());
  if (xp > 0) append(xp == 1 ? "x" : "x^" + std::to_string(xp));
  if (dp > 0) append(dpow(dp));
  return out;
}

}  // namespace

DiffForm::DiffForm(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial DiffForm::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Polynomial();
  return coeffs_[k];
}

DiffForm DiffForm::from_map(const LinearMap& f, int max_order) {
  const auto& src = *f.source();
  const auto& tgt = *f.target();
  if (!src.is_monomial() || !tgt.is_monomial() || src.dim() != tgt.dim())
    fail(ErrorKind::FrameMismatch,
         "differential-form extraction needs a square map on a monomial frame");
  const int d = src.dim();
  std::vector<Polynomial> c(d);
  for (int j = 0; j < d; ++j) {
    // Column j is the image of x^j; peel off the contributions of the
    // already known lower orders, leaving c_j * j!.
    Polynomial rest = f.apply(Polynomial::monomial(j));
    for (int k = 0; k < j; ++k)
      rest = rest - (c[k] * Polynomial::monomial(j - k)).scaled(falling(j, k));
    c[j] = rest.scaled(Rational(1) / factorial(static_cast<unsigned>(j)));
  }
  if (max_order >= d)
    fail(ErrorKind::Domain, "max_order " + std::to_string(max_order) +
                                " must be below the frame dimension " + std::to_string(d));
  DiffForm form(std::move(c));
  if (max_order >= 0 && form.order() > max_order)
    fail(ErrorKind::Consistency,
         "not a differential form of order <= " + std::to_string(max_order) +
             ": the minimal exact representation has order " + std::to_string(form.order()));
  return form;
}

Polynomial DiffForm::apply(const Polynomial& p) const {
  Polynomial out;
  for (int k = 0; k < static_cast<int>(coeffs_.size()); ++k)
    out = out + coeffs_[k] * p.derivative(k);
  return out;
}

LinearMap DiffForm::compile(const FamilyRef& frame) const {
  if (!frame->is_monomial())
    fail(ErrorKind::FrameMismatch, "forms compile on monomial frames only");
  const int d = frame->dim();
  std::vector<Polynomial> images;
  images.reserve(d);
  for (int j = 0; j < d; ++j) {
    Polynomial img = apply(Polynomial::monomial(j));
    if (img.degree() >= d)
      fail(ErrorKind::Overflow,
           "compiled form leaves the frame: image of x^" + std::to_string(j) + " has degree " +
               std::to_string(img.degree()) + " but the frame caps at degree " +
               std::to_string(d - 1));
    images.push_back(img);
  }
  return LinearMap::from_action(frame, frame, images);
}

DiffForm DiffForm::negated() const {
  std::vector<Polynomial> c = coeffs_;
  for (auto& p : c) p = p.scaled(Rational(-1));
  return DiffForm(std::move(c));
}

std::string DiffForm::str_expanded() const {
  struct Term {
    Rational c;
    int xp;
    int dp;
  };
  std::vector<Term> terms;
  for (int k = 0; k < static_cast<int>(coeffs_.size()); ++k)
    for (int i = 0; i <= coeffs_[k].degree(); ++i)
      if (!coeffs_[k].coeff(i).is_zero()) terms.push_back({coeffs_[k].coeff(i), i, k});
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return std::tie(b.xp, b.dp) < std::tie(a.xp, a.dp);
  });
  const bool flip = terms.front().c.sign() < 0;
  std::string body;
  bool first = true;
  for (const auto& t : terms) {
    Rational c = flip ? -t.c : t.c;
    if (first) {
      body = term_str(c.abs(), t.xp, t.dp);
      if (c.sign() < 0) body = "-" + body;
      first = false;
    } else {
      body += (c.sign() < 0 ? " - " : " + ") + term_str(c.abs(), t.xp, t.dp);
    }
  }
  return flip ? "-(" + body + ")" : body;
}

std::string DiffForm::str_grouped() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = order(); k >= 0; --k) {
    const Polynomial& ck = coeffs_[k];
    if (ck.is_zero()) continue;
    const bool neg = ck.coeff(ck.degree()).sign() < 0;
    const Polynomial q = neg ? ck.scaled(Rational(-1)) : ck;
    int nonzero = 0;
    for (int i = 0; i <= q.degree(); ++i)
      if (!q.coeff(i).is_zero()) ++nonzero;
    std::string body;
    if (nonzero == 1) {
      body = term_str(q.coeff(q.degree()), q.degree(), k);
    } else {
      body = "(" + q.str() + ")";
      if (k > 0) body += "*" + dpow(k);
    }
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace sepbasis
