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

#include <pisot/numeric.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pisot {

/* Dense univariate polynomial over Z.  Coefficients are stored in ascending
   order of degree; the zero polynomial is the empty vector and a non-zero
   polynomial never has a trailing zero coefficient. */
class IntPolynomial {
 public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }

  IntPolynomial(std::initializer_list<BigInt> coeffs)
      : c_(coeffs.begin(), coeffs.end()) {
    normalize();
  }

  static IntPolynomial zero() { return IntPolynomial(); }

  static IntPolynomial constant(BigInt v) {
    IntPolynomial p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
  }

  /* c * x^deg */
  static IntPolynomial monomial(int deg, BigInt c = 1) {
    IntPolynomial p;
    if (c != 0) {
      p.c_.assign(static_cast<std::size_t>(deg) + 1, BigInt(0));
      p.c_.back() = std::move(c);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }

  /* degree of the zero polynomial is -1 */
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const std::vector<BigInt>& coeffs() const { return c_; }

  /* coefficient of x^i, zero beyond the degree */
  const BigInt& coeff(std::size_t i) const {
    static const BigInt kZero(0);
    return i < c_.size() ? c_[i] : kZero;
  }

  const BigInt& leading() const {
    static const BigInt kZero(0);
    return c_.empty() ? kZero : c_.back();
  }

  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  bool is_constant() const { return c_.size() <= 1; }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) {
    return !(a == b);
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPolynomial(std::move(r));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return IntPolynomial(std::move(r));
  }

  friend IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<BigInt> r(a.c_);
    for (auto& x : r) x = -x;
    return IntPolynomial(std::move(r));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(r));
  }

  friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& a) {
    if (s == 0) return IntPolynomial();
    std::vector<BigInt> r(a.c_);
    for (auto& x : r) x *= s;
    return IntPolynomial(std::move(r));
  }

  /* multiply by x^k */
  IntPolynomial shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> r(c_.size() + static_cast<std::size_t>(k), BigInt(0));
    std::copy(c_.begin(), c_.end(), r.begin() + k);
    return IntPolynomial(std::move(r));
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  return a * b;
}

/* Euclidean division by a monic divisor; quotient and remainder stay in Z[x].
   Throws std::invalid_argument for a zero or non-monic divisor. */
inline std::pair<IntPolynomial, IntPolynomial> poly_div_rem(
    const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("poly_div_rem: zero divisor");
  if (!g.is_monic()) throw std::invalid_argument("poly_div_rem: divisor must be monic");
  if (f.degree() < g.degree()) return {IntPolynomial(), f};

  std::vector<BigInt> rem(f.coeffs());
  const int dg = g.degree();
  std::vector<BigInt> quo(static_cast<std::size_t>(f.degree() - dg) + 1, BigInt(0));
  for (int i = f.degree(); i >= dg; --i) {
    BigInt q = rem[static_cast<std::size_t>(i)];
    if (q == 0) continue;
    quo[static_cast<std::size_t>(i - dg)] = q;
    for (int j = 0; j <= dg; ++j)
      rem[static_cast<std::size_t>(i - dg + j)] -= q * g.coeff(static_cast<std::size_t>(j));
  }
  return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem))};
}

/* Exact division for arbitrary non-zero divisors.  Returns the quotient when
   g divides f in Q[x] and the quotient has integer coefficients; nothing
   otherwise. */
inline std::optional<IntPolynomial> poly_exact_div(const IntPolynomial& f,
                                                   const IntPolynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("poly_exact_div: zero divisor");
  if (f.is_zero()) return IntPolynomial();
  if (f.degree() < g.degree()) return std::nullopt;

  std::vector<BigRat> rem(f.coeffs().size());
  for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = BigRat(f.coeff(i));
  const int dg = g.degree();
  const BigRat lc(g.leading());
  std::vector<BigInt> quo(static_cast<std::size_t>(f.degree() - dg) + 1, BigInt(0));
  for (int i = f.degree(); i >= dg; --i) {
    BigRat q = rem[static_cast<std::size_t>(i)] / lc;
    if (q == 0) continue;
    if (rat_den(q) != 1) return std::nullopt;
    quo[static_cast<std::size_t>(i - dg)] = rat_num(q);
    for (int j = 0; j <= dg; ++j)
      rem[static_cast<std::size_t>(i - dg + j)] -= q * BigRat(g.coeff(static_cast<std::size_t>(j)));
  }
  for (int j = 0; j < dg; ++j)
    if (rem[static_cast<std::size_t>(j)] != 0) return std::nullopt;
  return IntPolynomial(std::move(quo));
}

/* gcd of all coefficients, non-negative; content of the zero polynomial is 0 */
inline BigInt poly_content(const IntPolynomial& f) {
  BigInt g(0);
  for (const auto& c : f.coeffs()) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

/* f divided by its content; keeps the sign of the leading coefficient */
inline IntPolynomial poly_primitive_part(const IntPolynomial& f) {
  if (f.is_zero()) return f;
  BigInt ct = poly_content(f);
  if (ct == 1) return f;
  std::vector<BigInt> r(f.coeffs());
  for (auto& x : r) x /= ct;
  return IntPolynomial(std::move(r));
}

/* Pseudo-remainder lc(g)^e * f mod g with e chosen even, so the scaling
   factor is positive and sign sequences stay usable for Sturm chains. */
inline IntPolynomial poly_pseudo_rem(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("poly_pseudo_rem: zero divisor");
  if (f.degree() < g.degree()) return f;
  int e = f.degree() - g.degree() + 1;
  if (e % 2 != 0) ++e;

  BigInt m = 1;
  for (int i = 0; i < e; ++i) m *= g.leading();
  std::vector<BigInt> rem(f.coeffs());
  for (auto& x : rem) x *= m;

  const int dg = g.degree();
  const BigInt& lc = g.leading();
  for (int i = f.degree(); i >= dg; --i) {
    BigInt top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    BigInt q = top / lc;  // exact: top accumulated enough lc factors
    for (int j = 0; j <= dg; ++j)
      rem[static_cast<std::size_t>(i - dg + j)] -= q * g.coeff(static_cast<std::size_t>(j));
  }
  return IntPolynomial(std::move(rem));
}

/* Primitive gcd with positive leading coefficient. */
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("poly_gcd: gcd(0, 0) is undefined");
  a = poly_primitive_part(a);
  b = poly_primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = poly_primitive_part(poly_pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (a.leading() < 0) a = -a;
  return a;
}

inline IntPolynomial poly_derivative(const IntPolynomial& f) {
  if (f.degree() <= 0) return IntPolynomial();
  std::vector<BigInt> r(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) r[i - 1] = BigInt(i) * f.coeff(i);
  return IntPolynomial(std::move(r));
}

/* f with non-zero coefficient order reversed: x^deg(f) * f(1/x) */
inline IntPolynomial poly_reverse(const IntPolynomial& f) {
  std::vector<BigInt> r(f.coeffs().rbegin(), f.coeffs().rend());
  return IntPolynomial(std::move(r));
}

inline BigInt poly_eval(const IntPolynomial& f, const BigInt& x) {
  BigInt acc(0);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline BigRat poly_eval(const IntPolynomial& f, const BigRat& x) {
  BigRat acc(0);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * x + BigRat(*it);
  return acc;
}

/* sign of f(p/q) without rational arithmetic: evaluates sum c_i p^i q^(d-i) */
inline int poly_sign_at(const IntPolynomial& f, const BigRat& x) {
  if (f.is_zero()) return 0;
  const BigInt p = rat_num(x);
  const BigInt q = rat_den(x);
  // Horner in p with a growing power of q folded in per step
  BigInt acc(0);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
    acc = acc * p + *it * boost::multiprecision::pow(q, static_cast<unsigned>(it - f.coeffs().rbegin()));
  return acc.sign();
}

/* x^d - 1 */
inline IntPolynomial x_pow_minus_one(int d) {
  IntPolynomial p = IntPolynomial::monomial(d);
  return p - IntPolynomial::constant(1);
}

/* x^d + 1 */
inline IntPolynomial x_pow_plus_one(int d) {
  IntPolynomial p = IntPolynomial::monomial(d);
  return p + IntPolynomial::constant(1);
}

/* 1 + x + ... + x^(r-1) */
inline IntPolynomial geometric_sum(int r) {
  return IntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(r), BigInt(1)));
}

/* square-free part f / gcd(f, f') with positive leading coefficient */
inline IntPolynomial poly_squarefree_part(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("poly_squarefree_part: zero polynomial");
  if (f.degree() == 0) return IntPolynomial::constant(1);
  IntPolynomial g = poly_gcd(f, poly_derivative(f));
  IntPolynomial pf = poly_primitive_part(f);
  auto q = poly_exact_div(pf, g);
  if (!q) throw std::logic_error("poly_squarefree_part: gcd does not divide");
  IntPolynomial r = *q;
  if (r.leading() < 0) r = -r;
  return r;
}

/* ---- text formats ----
   Canonical form: "coeffs=c0,c1,...,cd" (ascending).
   Human form: "x^4-x^3-2x^2+1" (descending, implicit 1 coefficients). */

inline std::string format_polynomial_coeffs(const IntPolynomial& f) {
  std::string out = "coeffs=";
  if (f.is_zero()) return out + "0";
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ',';
    out += f.coeff(i).str();
  }
  return out;
}

inline std::string format_polynomial(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const BigInt& c = f.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    BigInt a = boost::multiprecision::abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? '-' : '+';
    }
    if (i == 0) {
      out += a.str();
    } else {
      if (a != 1) out += a.str();
      out += 'x';
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out;
}

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline BigInt parse_int(const std::string& s, std::size_t& i) {
  std::size_t start = i;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) throw std::invalid_argument("polynomial parse: expected integer in '" + s + "'");
  return BigInt(s.substr(start, i - start));
}

}  // namespace detail

/* Accepts both the canonical "coeffs=..." form and the human form.  The human
   parser tolerates whitespace and an optional '*' between coefficient and x. */
inline IntPolynomial parse_polynomial(const std::string& text) {
  std::size_t i = 0;
  detail::skip_ws(text, i);
  if (text.compare(i, 7, "coeffs=") == 0) {
    i += 7;
    std::vector<BigInt> cs;
    while (true) {
      detail::skip_ws(text, i);
      cs.push_back(detail::parse_int(text, i));
      detail::skip_ws(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    if (i != text.size()) throw std::invalid_argument("polynomial parse: trailing input in '" + text + "'");
    return IntPolynomial(std::move(cs));
  }

  std::vector<BigInt> cs;
  bool any = false;
  while (true) {
    detail::skip_ws(text, i);
    if (i == text.size()) break;
    int sgn = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sgn = -1;
      ++i;
      detail::skip_ws(text, i);
    } else if (any) {
      throw std::invalid_argument("polynomial parse: expected '+' or '-' in '" + text + "'");
    }
    BigInt coef(1);
    bool have_coef = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coef = detail::parse_int(text, i);
      have_coef = true;
      detail::skip_ws(text, i);
      if (i < text.size() && text[i] == '*') {
        ++i;
        detail::skip_ws(text, i);
      }
    }
    int exp = 0;
    if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
      ++i;
      exp = 1;
      detail::skip_ws(text, i);
      if (i < text.size() && text[i] == '^') {
        ++i;
        detail::skip_ws(text, i);
        BigInt e = detail::parse_int(text, i);
        if (e < 0 || e > 1000000) throw std::invalid_argument("polynomial parse: exponent out of range");
        exp = static_cast<int>(e);
      }
    } else if (!have_coef) {
      throw std::invalid_argument("polynomial parse: expected term in '" + text + "'");
    }
    if (static_cast<std::size_t>(exp) >= cs.size()) cs.resize(static_cast<std::size_t>(exp) + 1, BigInt(0));
    cs[static_cast<std::size_t>(exp)] += sgn * coef;
    any = true;
  }
  if (!any) throw std::invalid_argument("polynomial parse: empty input");
  return IntPolynomial(std::move(cs));
}

}  // namespace pisot
