// Copyright 2026 the pisotbeta authors
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

// Companion polynomials of expansion words and co-factor analysis.
//
// A digit word encodes the equation 1 = sum a_i x^{-i}.  Clearing
// denominators turns a finite word a_1..a_m into the monic polynomial
//
//   P_m(x) = x^m - a_1 x^{m-1} - ... - a_m,
//
// and an eventually periodic word with preperiod k and period p into
// P_{k+p}(x) - P_k(x).  Either way the base is a root of the result,
// which we call the companion polynomial of the word.
//
// Dividing the companion polynomial by a (possibly reducible) defining
// polynomial of the base yields the "pseudo co-factor", a rational
// function; dividing by the minimal-polynomial candidate (the
// cyclotomic-free core of the defining polynomial) yields the "true
// co-factor", always a polynomial.  cofactor_analysis() classifies
// either one: is it a polynomial, is it a product of cyclotomic
// polynomials, and is its non-cyclotomic part reciprocal.

#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pisot/cyclotomic.hpp"
#include "pisot/expansion_word.hpp"
#include "pisot/polynomial.hpp"
#include "pisot/rational_function.hpp"

namespace pisot {

namespace detail {

// P_j(x) = x^j - a_1 x^{j-1} - ... - a_j with digits supplied by a callable.
template <typename DigitFn>
IntPolynomial power_minus_digits(std::size_t j, DigitFn digit) {
  std::vector<BigInt> c(j + 1);
  c[j] = 1;
  for (std::size_t i = 1; i <= j; ++i) c[j - i] = -BigInt(digit(i));
  return IntPolynomial(std::move(c));
}

}  // namespace detail

inline IntPolynomial companion_poly(const ExpansionWord& w) {
  const auto digit = [&w](std::size_t i) { return digit_at(w, i); };
  if (w.finite()) {
    if (w.pre.empty()) throw std::invalid_argument("companion_poly: empty word");
    return detail::power_minus_digits(w.pre.size(), digit);
  }
  const std::size_t k = w.pre.size();
  const std::size_t p = w.per.size();
  return detail::power_minus_digits(k + p, digit) - detail::power_minus_digits(k, digit);
}

inline RationalFunction pseudo_cofactor(const IntPolynomial& companion,
                                        const IntPolynomial& defining) {
  return RationalFunction(companion, defining);
}

// Exact quotient companion / core; throws if core does not divide.
inline IntPolynomial true_cofactor(const IntPolynomial& companion, const IntPolynomial& core) {
  auto q = poly_exact_div(companion, core);
  if (!q) throw std::domain_error("true_cofactor: core does not divide companion polynomial");
  return *q;
}

struct CofactorAnalysis {
  bool is_polynomial = false;
  // True when the numerator is +-1 times a product of cyclotomic polynomials.
  bool cyclotomic_product = false;
  // Reciprocity of the non-cyclotomic part of the numerator (of the whole
  // numerator when the non-cyclotomic part is constant).
  bool reciprocal = false;
  std::map<int, int> cyclotomic_factors;  // d -> multiplicity in the numerator
  IntPolynomial core;                     // numerator with cyclotomic factors removed
};

inline CofactorAnalysis cofactor_analysis(const RationalFunction& q) {
  CofactorAnalysis out;
  out.is_polynomial = q.is_polynomial();
  if (q.is_zero()) {
    out.core = IntPolynomial::zero();
    return out;
  }
  CyclotomicSplit split = strip_cyclotomic_factors(q.num());
  out.cyclotomic_factors = split.factors;
  out.core = split.core;
  const bool unit_core =
      split.core.is_constant() && (split.core.coeff(0) == 1 || split.core.coeff(0) == -1);
  out.cyclotomic_product = out.is_polynomial && unit_core;
  out.reciprocal = unit_core ? is_reciprocal(q.num()) : is_reciprocal(split.core);
  return out;
}

}  // namespace pisot
