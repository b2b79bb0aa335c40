/*
   Copyright 2026 the pisotbeta authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <pisot/polynomial.hpp>

#include <string>
#include <utility>

namespace pisot {

/* Ratio of integer polynomials kept in reduced form: gcd(num, den) = 1 up to
   content, the integer content gcd of the pair is 1, and den has a positive
   leading coefficient.  den is never zero. */
class RationalFunction {
 public:
  RationalFunction() : num_(IntPolynomial::constant(0)), den_(IntPolynomial::constant(1)) {}

  RationalFunction(IntPolynomial num, IntPolynomial den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
    reduce();
  }

  explicit RationalFunction(IntPolynomial num)
      : num_(std::move(num)), den_(IntPolynomial::constant(1)) {}

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }

  bool is_polynomial() const { return den_ == IntPolynomial::constant(1); }
  bool is_zero() const { return num_.is_zero(); }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::invalid_argument("RationalFunction: division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = IntPolynomial::constant(1);
      return;
    }
    IntPolynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      // g is primitive, so by Gauss's lemma it divides both parts over Z
      num_ = *poly_exact_div(num_, g);
      den_ = *poly_exact_div(den_, g);
    }
    BigInt c = boost::multiprecision::gcd(poly_content(num_), poly_content(den_));
    if (c > 1) {
      std::vector<BigInt> n(num_.coeffs()), d(den_.coeffs());
      for (auto& x : n) x /= c;
      for (auto& x : d) x /= c;
      num_ = IntPolynomial(std::move(n));
      den_ = IntPolynomial(std::move(d));
    }
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  IntPolynomial num_;
  IntPolynomial den_;
};

/* "num/den" in human polynomial notation; "/den" omitted when den = 1.
   Composite factors are parenthesised. */
inline std::string format_rational_function(const RationalFunction& q) {
  auto wrap = [](const IntPolynomial& p) {
    std::string s = format_polynomial(p);
    bool multi = false;
    for (std::size_t i = 1; i < s.size(); ++i)
      if (s[i] == '+' || s[i] == '-') multi = true;
    return multi ? "(" + s + ")" : s;
  };
  if (q.is_polynomial()) return format_polynomial(q.num());
  return wrap(q.num()) + "/" + wrap(q.den());
}

inline RationalFunction parse_rational_function(const std::string& text) {
  int depth = 0;
  std::size_t slash = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == '/' && depth == 0) {
      if (slash != std::string::npos)
        throw std::invalid_argument("rational function parse: multiple '/'");
      slash = i;
    }
  }
  auto strip_parens = [](std::string s) {
    auto trim = [](std::string& t) {
      while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
      while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    };
    trim(s);
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
      int d = 0;
      bool outer = true;
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == '(') ++d;
        else if (s[i] == ')') --d;
        if (d == 0) { outer = false; break; }
      }
      if (!outer) break;
      s = s.substr(1, s.size() - 2);
      trim(s);
    }
    return s;
  };
  if (slash == std::string::npos)
    return RationalFunction(parse_polynomial(strip_parens(text)));
  return RationalFunction(parse_polynomial(strip_parens(text.substr(0, slash))),
                          parse_polynomial(strip_parens(text.substr(slash + 1))));
}

}  // namespace pisot
