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

#include <pisot/interval.hpp>
#include <pisot/polynomial.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace pisot {

/* Sturm chain of f: [f, f', -prem(...), ...] with primitive, sign-preserving
   reduction at every step (the pseudo-remainder scaling factor is an even
   power of the leading coefficient, hence positive). */
inline std::vector<IntPolynomial> sturm_chain(const IntPolynomial& f) {
  std::vector<IntPolynomial> chain;
  chain.push_back(poly_primitive_part(f));
  if (f.degree() < 1) return chain;
  chain.push_back(poly_primitive_part(poly_derivative(f)));
  while (chain.back().degree() > 0) {
    IntPolynomial r = poly_pseudo_rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(-poly_primitive_part(r));
  }
  return chain;
}

namespace detail {

inline int sign_variations(const std::vector<IntPolynomial>& chain, const BigRat& x) {
  int variations = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = poly_sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

}  // namespace detail

/* Number of distinct real roots of square-free f in the open interval.
   Throws std::domain_error when an endpoint is a root (perturb and retry). */
inline int sturm_count(const IntPolynomial& f, const RationalInterval& I) {
  if (f.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  if (f.degree() == 0) return 0;
  if (poly_sign_at(f, I.lo) == 0 || poly_sign_at(f, I.hi) == 0)
    throw std::domain_error("sturm_count: interval endpoint is a root");
  auto chain = sturm_chain(f);
  return detail::sign_variations(chain, I.lo) - detail::sign_variations(chain, I.hi);
}

/* A real algebraic number: the unique real root of a square-free monic
   integer polynomial inside an isolating interval whose endpoints are not
   roots.  sign_lo caches the sign of defpoly at isol.lo so that bisection
   steps cost one evaluation each. */
struct RealAlgebraic {
  IntPolynomial defpoly;
  RationalInterval isol;
  int sign_lo = 0;
};

/* Checked constructor: verifies the type invariants (square-free monic
   defining polynomial, exactly one root strictly inside the interval) and
   fills in the cached endpoint sign. */
inline RealAlgebraic make_real_algebraic(IntPolynomial defpoly, RationalInterval isol) {
  if (!defpoly.is_monic() || defpoly.degree() < 1)
    throw std::invalid_argument("make_real_algebraic: defining polynomial must be monic, degree >= 1");
  if (poly_gcd(defpoly, poly_derivative(defpoly)).degree() > 0)
    throw std::invalid_argument("make_real_algebraic: defining polynomial must be square-free");
  if (sturm_count(defpoly, isol) != 1)
    throw std::invalid_argument("make_real_algebraic: interval does not isolate one root");
  RealAlgebraic a{std::move(defpoly), std::move(isol), 0};
  a.sign_lo = poly_sign_at(a.defpoly, a.isol.lo);
  return a;
}

namespace detail {

/* One bisection step; m must stay strictly inside.  When the root happens to
   be the midpoint itself, contract around it instead (endpoints stay
   non-roots because the interval holds no other root). */
inline void bisect_once(RealAlgebraic& a) {
  BigRat m = a.isol.midpoint();
  int sm = poly_sign_at(a.defpoly, m);
  if (sm == 0) {
    a.isol = RationalInterval((a.isol.lo + m) / 2, (m + a.isol.hi) / 2);
    // sign at the new lo matches the old lo: no root lies between them
    return;
  }
  if (sm == a.sign_lo) {
    a.isol.lo = std::move(m);
  } else {
    a.isol.hi = std::move(m);
  }
}

}  // namespace detail

inline void refine_inplace(RealAlgebraic& a, const BigRat& width_bound) {
  if (width_bound <= 0) throw std::invalid_argument("refine: width bound must be positive");
  while (a.isol.width() >= width_bound) detail::bisect_once(a);
}

/* Pure variant: returns the same number with an isolating interval of width
   strictly below width_bound. */
inline RealAlgebraic refine(const RealAlgebraic& a, const BigRat& width_bound) {
  RealAlgebraic r = a;
  refine_inplace(r, width_bound);
  return r;
}

/* Isolates the unique real root of f in (1, oo).  Returns nothing when f has
   no root above 1; throws std::domain_error when it has several.  The result
   carries f's square-free part (with any root at exactly 1 removed so the
   interval endpoints are never roots) and an isolating interval inside
   (1, B), B the Cauchy bound of the monic normalization. */
inline std::optional<RealAlgebraic> isolate_root_above_1(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("isolate_root_above_1: zero polynomial");
  if (!f.is_monic())
    throw std::invalid_argument("isolate_root_above_1: polynomial must be monic");
  if (f.degree() == 0) return std::nullopt;
  IntPolynomial sf = poly_squarefree_part(f);
  while (poly_eval(sf, BigInt(1)) == 0) {
    sf = poly_div_rem(sf, IntPolynomial({-1, 1})).first;
    if (sf.degree() == 0) return std::nullopt;
  }

  // Cauchy bound of sf/lc, rounded up to an integer so that all midpoints
  // produced by bisection are dyadic rationals (cheap interval arithmetic)
  BigInt maxc(0);
  for (int i = 0; i < sf.degree(); ++i) {
    BigInt a = boost::multiprecision::abs(sf.coeff(static_cast<std::size_t>(i)));
    if (a > maxc) maxc = a;
  }
  if (maxc == 0) return std::nullopt;  // pure power of x, only root is 0
  BigInt bound = 1 + maxc / sf.leading() + 1;

  RationalInterval I(BigRat(1), BigRat(bound));
  int n = sturm_count(sf, I);
  if (n == 0) return std::nullopt;
  if (n > 1) throw std::domain_error("isolate_root_above_1: several roots above 1");

  RealAlgebraic a{std::move(sf), std::move(I), 0};
  a.sign_lo = poly_sign_at(a.defpoly, a.isol.lo);
  // narrow until the interval lies strictly inside (1, B); the root is > 1,
  // so repeated bisection must eventually pull the lower endpoint above 1
  while (!(a.isol.lo > 1)) detail::bisect_once(a);
  return a;
}

/* Exact sign of g at the number a, refining a's own cached interval as a side
   effect (callers looping over many sign queries against one number should
   pass the same object each time). */
inline int sign_at_refining(const IntPolynomial& g, RealAlgebraic& a) {
  if (g.is_zero()) return 0;
  int s = interval_sign(g, a.isol);
  if (s != 0) return s;
  for (int round = 0; round < 3; ++round) {
    detail::bisect_once(a);
    detail::bisect_once(a);
    s = interval_sign(g, a.isol);
    if (s != 0) return s;
  }
  // interval evaluation keeps straddling zero: settle g(a) = 0 exactly.
  // g(a) = 0 iff gcd(g, defpoly) has a root in the isolating interval, and
  // any such root must be a itself.
  IntPolynomial h = poly_gcd(g, a.defpoly);
  if (h.degree() > 0 && sturm_count(h, a.isol) > 0) return 0;
  while (true) {
    detail::bisect_once(a);
    s = interval_sign(g, a.isol);
    if (s != 0) return s;
  }
}

/* Pure spec-facing variant. */
inline int sign_at(const IntPolynomial& g, const RealAlgebraic& a) {
  RealAlgebraic tmp = a;
  return sign_at_refining(g, tmp);
}

/* Exact comparison of a with a rational. */
inline int compare_with_rational(const RealAlgebraic& a, const BigRat& q) {
  if (a.isol.contains(q) && poly_sign_at(a.defpoly, q) == 0) return 0;
  RealAlgebraic tmp = a;
  while (tmp.isol.contains(q)) detail::bisect_once(tmp);
  return tmp.isol.hi < q ? -1 : 1;
}

}  // namespace pisot
