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

#include <algorithm>
#include <utility>

namespace pisot {

/* Closed interval with exact rational endpoints, lo <= hi. */
struct RationalInterval {
  BigRat lo;
  BigRat hi;

  RationalInterval() : lo(0), hi(0) {}
  RationalInterval(BigRat l, BigRat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("RationalInterval: lo > hi");
  }

  BigRat width() const { return hi - lo; }
  bool contains(const BigRat& x) const { return lo <= x && x <= hi; }
  BigRat midpoint() const { return (lo + hi) / 2; }
};

namespace detail {

/* Interval Horner over integers.  The input interval is rescaled to a common
   denominator D, [a, b] = [lo*D, hi*D], and the enclosure of f over it is
   computed as [U, V] / D^deg(f).  Avoids per-step rational gcd work. */
struct ScaledEnclosure {
  BigInt num_lo;
  BigInt num_hi;
  BigInt den;  // D^deg(f), positive
};

inline ScaledEnclosure eval_interval_scaled(const IntPolynomial& f,
                                            const RationalInterval& I) {
  if (f.is_zero()) return {BigInt(0), BigInt(0), BigInt(1)};
  const BigInt d1 = rat_den(I.lo), d2 = rat_den(I.hi);
  const BigInt g = boost::multiprecision::gcd(d1, d2);
  const BigInt D = d1 / g * d2;
  const BigInt a = rat_num(I.lo) * (D / d1);
  const BigInt b = rat_num(I.hi) * (D / d2);

  const int deg = f.degree();
  std::vector<BigInt> dpow(static_cast<std::size_t>(deg) + 1);
  dpow[0] = 1;
  for (int i = 1; i <= deg; ++i) dpow[static_cast<std::size_t>(i)] = dpow[static_cast<std::size_t>(i - 1)] * D;

  BigInt u = f.leading(), v = f.leading();
  for (int i = deg - 1; i >= 0; --i) {
    BigInt p1 = u * a, p2 = u * b, p3 = v * a, p4 = v * b;
    u = std::min(std::min(p1, p2), std::min(p3, p4));
    v = std::max(std::max(p1, p2), std::max(p3, p4));
    const BigInt t = f.coeff(static_cast<std::size_t>(i)) * dpow[static_cast<std::size_t>(deg - i)];
    u += t;
    v += t;
  }
  return {std::move(u), std::move(v), dpow[static_cast<std::size_t>(deg)]};
}

}  // namespace detail

/* Exact interval-arithmetic enclosure of f over I: contains f(x) for every
   x in I, and the enclosure is monotone under interval inclusion. */
inline RationalInterval eval_interval(const IntPolynomial& f, const RationalInterval& I) {
  auto s = detail::eval_interval_scaled(f, I);
  return RationalInterval(BigRat(s.num_lo, s.den), BigRat(s.num_hi, s.den));
}

/* Sign of f over all of I when the enclosure decides it: -1, +1, or 0 when
   the enclosure straddles (or touches) zero. */
inline int interval_sign(const IntPolynomial& f, const RationalInterval& I) {
  auto s = detail::eval_interval_scaled(f, I);
  if (s.num_lo > 0) return 1;
  if (s.num_hi < 0) return -1;
  return 0;
}

}  // namespace pisot
