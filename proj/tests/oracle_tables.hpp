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

// Reference coefficient tables for the classical families, computed with an
// independent computer-algebra system and checked there against the
// defining differential equations. coeffs[n][k] is the coefficient of x^k
// in the n-th polynomial.

#ifndef SEPBASIS_TESTS_ORACLE_TABLES_HPP
#define SEPBASIS_TESTS_ORACLE_TABLES_HPP

#include <string>
#include <vector>

#include "sepbasis/polynomial.hpp"
#include "sepbasis/rational.hpp"

namespace sepbasis_oracle {

using CoeffTable = std::vector<std::vector<std::string>>;

// Laguerre L_n, normalization L_n(0) = 1.
inline const CoeffTable& laguerre_table() {
  static const CoeffTable t = {
      {"1"},
      {"1", "-1"},
      {"1", "-2", "1/2"},
      {"1", "-3", "3/2", "-1/6"},
      {"1", "-4", "3", "-2/3", "1/24"},
      {"1", "-5", "5", "-5/3", "5/24", "-1/120"},
      {"1", "-6", "15/2", "-10/3", "5/8", "-1/20", "1/720"},
      {"1", "-7", "21/2", "-35/6", "35/24", "-7/40", "7/720", "-1/5040"},
      {"1", "-8", "14", "-28/3", "35/12", "-7/15", "7/180", "-1/630", "1/40320"},
      {"1", "-9", "18", "-14", "21/4", "-21/20", "7/60", "-1/140", "1/4480", "-1/362880"},
      {"1", "-10", "45/2", "-20", "35/4", "-21/10", "7/24", "-1/42", "1/896", "-1/36288",
       "1/3628800"},
      {"1", "-11", "55/2", "-55/2", "55/4", "-77/20", "77/120", "-11/168", "11/2688",
       "-11/72576", "11/3628800", "-1/39916800"},
  };
  return t;
}

// Probabilist Hermite He_n (monic), He_{n+1} = x He_n - n He_{n-1}.
inline const CoeffTable& hermite_table() {
  static const CoeffTable t = {
      {"1"},
      {"0", "1"},
      {"-1", "0", "1"},
      {"0", "-3", "0", "1"},
      {"3", "0", "-6", "0", "1"},
      {"0", "15", "0", "-10", "0", "1"},
      {"-15", "0", "45", "0", "-15", "0", "1"},
      {"0", "-105", "0", "105", "0", "-21", "0", "1"},
      {"105", "0", "-420", "0", "210", "0", "-28", "0", "1"},
      {"0", "945", "0", "-1260", "0", "378", "0", "-36", "0", "1"},
      {"-945", "0", "4725", "0", "-3150", "0", "630", "0", "-45", "0", "1"},
      {"0", "-10395", "0", "17325", "0", "-6930", "0", "990", "0", "-55", "0", "1"},
  };
  return t;
}

// Legendre P_n, normalization P_n(1) = 1.
inline const CoeffTable& legendre_table() {
  static const CoeffTable t = {
      {"1"},
      {"0", "1"},
      {"-1/2", "0", "3/2"},
      {"0", "-3/2", "0", "5/2"},
      {"3/8", "0", "-15/4", "0", "35/8"},
      {"0", "15/8", "0", "-35/4", "0", "63/8"},
      {"-5/16", "0", "105/16", "0", "-315/16", "0", "231/16"},
      {"0", "-35/16", "0", "315/16", "0", "-693/16", "0", "429/16"},
      {"35/128", "0", "-315/32", "0", "3465/64", "0", "-3003/32", "0", "6435/128"},
      {"0", "315/128", "0", "-1155/32", "0", "9009/64", "0", "-6435/32", "0", "12155/128"},
      {"-63/256", "0", "3465/256", "0", "-15015/128", "0", "45045/128", "0", "-109395/256", "0",
       "46189/256"},
      {"0", "-693/256", "0", "15015/256", "0", "-45045/128", "0", "109395/128", "0",
       "-230945/256", "0", "88179/256"},
  };
  return t;
}

inline sepbasis::Polynomial make_poly(const std::vector<std::string>& coeffs) {
  sepbasis::Polynomial p;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    p = p + sepbasis::Polynomial::monomial(static_cast<int>(k),
                                           sepbasis::Rational::parse(coeffs[k]));
  }
  return p;
}

inline std::vector<sepbasis::Polynomial> make_polys(const CoeffTable& table) {
  std::vector<sepbasis::Polynomial> out;
  out.reserve(table.size());
  for (const auto& row : table) out.push_back(make_poly(row));
  return out;
}

inline const CoeffTable& table_for(const std::string& family) {
  if (family == "laguerre") return laguerre_table();
  if (family == "hermite") return hermite_table();
  return legendre_table();
}

}  // namespace sepbasis_oracle

#endif
