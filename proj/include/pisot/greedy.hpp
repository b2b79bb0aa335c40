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

#include <pisot/expansion_word.hpp>
#include <pisot/real_algebraic.hpp>

#include <cstddef>
#include <map>
#include <vector>

namespace pisot {

/* An element of Z[beta] in the power basis 1, beta, ..., beta^(d-1), reduced
   modulo the (monic) defining polynomial.  coeffs always has length d. */
struct BetaRemainder {
  std::vector<BigInt> coeffs;
};

constexpr std::size_t kDefaultMaxSteps = 100000;

/* Greedy expansion of 1 in base beta in (1,2): r_0 = 1, s = beta*r_{i-1},
   a_i = 1 iff s >= 1 (ties take the 1), r_i = s - a_i; all arithmetic exact
   in Z[x]/(defpoly).  Stops on r_i = 0 with a finite word (detected exactly,
   whatever the defining polynomial), or on the first repeated remainder
   vector with a periodic word; the result is canonical.  Throws
   StepLimitError past max_steps.  Note: an eventually periodic expansion is
   only guaranteed to produce repeating vectors when defpoly is the minimal
   polynomial of beta — with extra factors the components along them can
   drift forever.  Pass the cyclotomic-free core (pisot_root_of does). */
inline ExpansionWord greedy_expand(const RealAlgebraic& beta,
                                   std::size_t max_steps = kDefaultMaxSteps) {
  if (max_steps < 1) throw std::invalid_argument("greedy_expand: max_steps must be positive");
  if (beta.defpoly.degree() < 1)
    throw std::invalid_argument("greedy_expand: constant defining polynomial");
  if (compare_with_rational(beta, BigRat(1)) <= 0 || compare_with_rational(beta, BigRat(2)) >= 0)
    throw std::invalid_argument("greedy_expand: base must lie in the open interval (1,2)");

  const IntPolynomial& p = beta.defpoly;
  const std::size_t d = static_cast<std::size_t>(p.degree());
  RealAlgebraic local = beta;
  refine_inplace(local, BigRat(BigInt(1), BigInt(1) << 20));

  std::vector<BigInt> v(d, BigInt(0));
  v[0] = 1;  // r_0 = 1
  std::map<std::vector<BigInt>, std::size_t> seen;
  seen.emplace(v, 0);

  Digits digits;
  std::vector<BigInt> s(d);
  for (std::size_t step = 1; step <= max_steps; ++step) {
    // s = x * v mod p (p monic): fold the overflowing top coefficient back
    const BigInt& top = v[d - 1];
    for (std::size_t j = d; j-- > 1;) s[j] = v[j - 1] - top * p.coeff(j);
    s[0] = -top * p.coeff(0);

    std::vector<BigInt> gc = s;
    gc[0] -= 1;
    IntPolynomial g(std::move(gc));  // s - 1
    const int sg = sign_at_refining(g, local);
    const int digit = sg >= 0 ? 1 : 0;
    digits.push_back(digit);
    // sg == 0 means r_i = s - 1 = 0 exactly: the expansion is finite.  The
    // vector for 0 need not be the zero vector when defpoly is reducible, so
    // the value test is the one that counts.
    if (sg == 0) return canonicalize(ExpansionWord{std::move(digits), {}});
    if (digit) s[0] -= 1;
    v = s;

    auto [it, inserted] = seen.try_emplace(v, step);
    if (!inserted) {
      const std::size_t start = it->second;  // state after step `start` repeats
      Digits pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
      Digits per(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
      return canonicalize(ExpansionWord{std::move(pre), std::move(per)});
    }
  }
  throw StepLimitError("greedy_expand: no termination or cycle within max_steps");
}

}  // namespace pisot
