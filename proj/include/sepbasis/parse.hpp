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

#ifndef SEPBASIS_PARSE_HPP
#define SEPBASIS_PARSE_HPP

#include <string>

#include "sepbasis/operator_expr.hpp"
#include "sepbasis/polynomial.hpp"

namespace sepbasis {

// Both parsers accept the same expression grammar over rational literals
// ("3", "3/2"), identifiers, '+', '-', '*', '^', and parentheses, with
// precedence ^ > unary minus > * > binary +/-. There is no implicit
// multiplication and no division operator ('/' only joins two integer
// literals). Errors carry the byte offset and the tokens that would have
// been accepted.

// Identifiers: x.
Polynomial parse_poly(const std::string& text);

// Identifiers: D, Dinv, x. '*' is composition, '^' iterated composition.
OperatorExpr parse_operator(const std::string& text);

}  // namespace sepbasis

#endif
