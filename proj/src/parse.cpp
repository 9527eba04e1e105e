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

#include "sepbasis/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "sepbasis/error.hpp"
#include "sepbasis/rational.hpp"

namespace sepbasis {
namespace {

enum class TokKind { Integer, Slash, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::size_t offset;
  std::string text;  // digits for Integer, name for Ident
};

const char* describe(TokKind k) {
  switch (k) {
    case TokKind::Integer: return "integer";
    case TokKind::Slash: return "'/'";
    case TokKind::Ident: return "identifier";
    case TokKind::Plus: return "'+'";
    case TokKind::Minus: return "'-'";
    case TokKind::Star: return "'*'";
    case TokKind::Caret: return "'^'";
    case TokKind::LParen: return "'('";
    case TokKind::RParen: return "')'";
    case TokKind::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({TokKind::Integer, i, text.substr(i, j - i)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back({TokKind::Ident, i, text.substr(i, j - i)});
      i = j;
      continue;
    }
    TokKind k;
    switch (c) {
      case '/': k = TokKind::Slash; break;
      case '+': k = TokKind::Plus; break;
      case '-': k = TokKind::Minus; break;
      case '*': k = TokKind::Star; break;
      case '^': k = TokKind::Caret; break;
      case '(': k = TokKind::LParen; break;
      case ')': k = TokKind::RParen; break;
      default:
        fail(ErrorKind::Parse,
             "syntax error at byte " + std::to_string(i) + ": unexpected character '" +
                 std::string(1, c) + "'",
             i);
    }
    out.push_back({k, i, std::string(1, c)});
    ++i;
  }
  out.push_back({TokKind::End, text.size(), ""});
  return out;
}

constexpr long kMaxExponent = 4096;

// Recursive-descent parser shared by the polynomial and operator grammars.
// Alg supplies the value type and the atom/ident semantics.
template <class Alg>
class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  typename Alg::Value run() {
    auto v = parse_expr();
    expect_end();
    return v;
  }

 private:
  using Value = typename Alg::Value;

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  [[noreturn]] void unexpected(const std::string& expected) {
    const Token& t = peek();
    std::string what = t.kind == TokKind::End
                           ? std::string("unexpected end of input")
                           : "unexpected " + std::string(describe(t.kind)) +
                                 (t.text.empty() ? "" : " '" + t.text + "'");
    fail(ErrorKind::Parse,
         "syntax error at byte " + std::to_string(t.offset) + ": " + what + "; expected " +
             expected,
         t.offset);
  }

  void expect_end() {
    if (peek().kind != TokKind::End) unexpected("'+', '-', '*', '^', or end of input");
  }

  Value parse_expr() {
    Value v = parse_term();
    while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
      const bool plus = take().kind == TokKind::Plus;
      Value rhs = parse_term();
      v = plus ? Alg::add(v, rhs) : Alg::sub(v, rhs);
    }
    return v;
  }

  Value parse_term() {
    Value v = parse_factor();
    while (peek().kind == TokKind::Star) {
      take();
      v = Alg::mul(v, parse_factor());
    }
    return v;
  }

  Value parse_factor() {
    if (peek().kind == TokKind::Minus) {
      take();
      return Alg::neg(parse_factor());
    }
    return parse_power();
  }

  Value parse_power() {
    Value v = parse_primary();
    while (peek().kind == TokKind::Caret) {
      take();
      if (peek().kind == TokKind::Minus)
        fail(ErrorKind::Parse,
             "syntax error at byte " + std::to_string(peek().offset) +
                 ": negative exponent is not allowed",
             peek().offset);
      if (peek().kind != TokKind::Integer) unexpected("a non-negative integer exponent");
      v = Alg::pow(v, read_exponent());
    }
    return v;
  }

  long read_exponent() {
    const Token t = take();
    const mpz_class z(t.text);
    if (z > kMaxExponent)
      fail(ErrorKind::Parse,
           "syntax error at byte " + std::to_string(t.offset) + ": exponent " + t.text +
               " exceeds the limit " + std::to_string(kMaxExponent),
           t.offset);
    return z.get_si();
  }

  Value parse_primary() {
    switch (peek().kind) {
      case TokKind::Integer: {
        const Token num = take();
        mpz_class den(1);
        if (peek().kind == TokKind::Slash) {
          take();
          if (peek().kind != TokKind::Integer) unexpected("an integer denominator");
          const Token d = take();
          den = mpz_class(d.text);
          if (den == 0)
            fail(ErrorKind::Parse,
                 "syntax error at byte " + std::to_string(d.offset) +
                     ": zero denominator in rational literal",
                 d.offset);
        }
        return Alg::from_rational(Rational(mpz_class(num.text), den));
      }
      case TokKind::Ident: {
        const Token id = take();
        return Alg::ident(id.text, id.offset);
      }
      case TokKind::LParen: {
        take();
        Value v = parse_expr();
        if (peek().kind != TokKind::RParen) unexpected("')'");
        take();
        return v;
      }
      default:
        unexpected("a rational literal, an identifier, '-', or '('");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

struct PolyAlg {
  using Value = Polynomial;
  static Value from_rational(const Rational& r) { return Polynomial::constant(r); }
  static Value ident(const std::string& name, std::size_t offset) {
    if (name == "x") return Polynomial::x();
    fail(ErrorKind::Parse,
         "unknown identifier '" + name + "' at byte " + std::to_string(offset) +
             "; the polynomial variable is x",
         offset);
  }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value sub(const Value& a, const Value& b) { return a - b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value neg(const Value& a) { return a.scaled(Rational(-1)); }
  static Value pow(const Value& a, long k) { return a.pow(static_cast<int>(k)); }
};

struct OpAlg {
  using Value = OperatorExpr;
  static Value from_rational(const Rational& r) { return OperatorExpr::constant(r); }
  static Value ident(const std::string& name, std::size_t offset) {
    if (name == "D") return OperatorExpr::D();
    if (name == "Dinv") return OperatorExpr::Dinv();
    if (name == "x") return OperatorExpr::X();
    fail(ErrorKind::Parse,
         "unknown identifier '" + name + "' at byte " + std::to_string(offset) +
             "; operator atoms are D, Dinv, and x",
         offset);
  }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value sub(const Value& a, const Value& b) { return a - b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value neg(const Value& a) { return a.scaled(Rational(-1)); }
  static Value pow(const Value& a, long k) { return a.pow(static_cast<int>(k)); }
};

}  // namespace

Polynomial parse_poly(const std::string& text) { return Parser<PolyAlg>(text).run(); }

OperatorExpr parse_operator(const std::string& text) { return Parser<OpAlg>(text).run(); }

}  // namespace sepbasis
