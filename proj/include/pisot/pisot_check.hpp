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

#include <pisot/cyclotomic.hpp>
#include <pisot/real_algebraic.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>
#include <limits>
#include <optional>
#include <type_traits>
#include <vector>

namespace pisot {

template <unsigned Digits>
using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>,
                                               boost::multiprecision::et_off>;
template <unsigned Digits>
using BigComplex = boost::multiprecision::cpp_complex<Digits>;

namespace detail {

/* One certification attempt at fixed precision.  Runs Durand-Kerner on a
   square-free cyclotomic-free polynomial, then converts the final
   Weierstrass corrections W_i = f(z_i)/prod(z_i - z_j) into inclusion discs
   of radius n*|W_i|: when pairwise disjoint, each disc contains exactly one
   root.  The radii are inflated by a running round-off bound for the
   evaluation and the product, so a positive answer is trustworthy at any
   precision.  Returns the number of discs strictly outside the closed unit
   disc, or nothing when discs overlap each other or touch the circle. */
template <class Real, class Complex>
std::optional<int> count_roots_outside_unit_circle(const IntPolynomial& f, int attempt) {
  const int n = f.degree();
  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<Complex> c(un + 1);
  std::vector<Real> cabs(un + 1);
  Real maxabs = 0;
  for (std::size_t i = 0; i <= un; ++i) {
    Real v;
    if constexpr (std::is_same_v<Real, double>) {
      // doubles hold integers up to 2^53 exactly; larger seeds would solve
      // a perturbed polynomial, so hand those to the multiprecision rungs
      if (boost::multiprecision::abs(f.coeff(i)) > (BigInt(1) << 53)) return std::nullopt;
      v = f.coeff(i).template convert_to<double>();
    } else {
      v = Real(f.coeff(i).str());
    }
    c[i] = Complex(v);
    cabs[i] = v < 0 ? -v : v;
    if (i < un && cabs[i] > maxabs) maxabs = cabs[i];
  }

  using std::abs;
  using std::acos;
  using std::cos;
  using std::sin;
  const Real eps = std::numeric_limits<Real>::epsilon();

  auto horner = [&](const Complex& z) {
    Complex acc = c[un];
    for (std::size_t i = un; i-- > 0;) acc = acc * z + c[i];
    return acc;
  };
  // upper bound for |f| round-off at z: 4(n+1) eps sum |c_i||z|^i
  auto eval_err = [&](const Real& az) {
    Real s = cabs[un];
    for (std::size_t i = un; i-- > 0;) s = s * az + cabs[i];
    return Real(4 * (n + 1)) * eps * s;
  };

  // start on a circle scaled off the Cauchy bound; nudge angle and radius per
  // attempt so an escalation is not a bit-identical rerun
  const Real radius = (Real(1) + maxabs) * Real(55 + 13 * (attempt % 5)) / 100;
  const Real two_pi = 2 * acos(Real(-1));
  std::vector<Complex> z(un);
  const Complex centroid = -c[un - 1] / Real(n);
  for (int k = 0; k < n; ++k) {
    Real angle = two_pi * Real(k) / Real(n) + Real(37 + 11 * attempt) / 100;
    z[static_cast<std::size_t>(k)] = centroid + radius * Complex(cos(angle), sin(angle));
  }

  const Real tol = eps * 4096;
  const int max_iter = 200 + 100 * attempt;
  for (int iter = 0; iter < max_iter; ++iter) {
    Real worst = 0;
    for (std::size_t i = 0; i < un; ++i) {
      Complex denom(1);
      for (std::size_t j = 0; j < un; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (denom == Complex(0)) return std::nullopt;
      Complex w = horner(z[i]) / denom;
      z[i] -= w;
      Real aw = abs(w);
      if (!(aw == aw)) return std::nullopt;  // NaN escape
      if (aw > worst) worst = aw;
    }
    if (worst < tol) break;
  }

  // inclusion radii from corrections recomputed cleanly at the settled points
  std::vector<Real> rad(un);
  for (std::size_t i = 0; i < un; ++i) {
    Complex denom(1);
    for (std::size_t j = 0; j < un; ++j)
      if (j != i) denom *= z[i] - z[j];
    Real ad = abs(denom);
    if (!(ad > 0)) return std::nullopt;
    Real az = abs(z[i]);
    Real num = abs(horner(z[i])) + eval_err(az);
    // denominator has n-1 multiplications and n-1 subtractions of error
    Real shrink = Real(1) - Real(4 * n) * eps;
    if (!(shrink > 0)) return std::nullopt;
    rad[i] = Real(n) * num / (ad * shrink);
  }

  const Real margin = Real(1) + Real(1) / 1000000;
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = i + 1; j < un; ++j) {
      Real gap = abs(z[i] - z[j]);
      if (!(gap > margin * (rad[i] + rad[j]))) return std::nullopt;
    }

  int outside = 0;
  for (std::size_t i = 0; i < un; ++i) {
    Real m = abs(z[i]);
    Real r = margin * rad[i];
    if (m - r > 1) {
      ++outside;
    } else if (!(m + r < 1)) {
      return std::nullopt;  // disc straddles or touches the unit circle
    }
  }
  return outside;
}

}  // namespace detail

/* True iff monic f has exactly one real root q > 1 and every other complex
   root lies strictly inside the unit circle.  Exact steps settle the real
   root count and all roots of unity; the remaining modulus comparisons are
   certified numerically, escalating the working precision on failure.
   Inputs whose roots hug the unit circle without being roots of unity
   (Salem-like) exhaust the ladder and raise PrecisionError, never a wrong
   boolean. */
inline bool pisot_verify(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("pisot_verify: zero polynomial");
  if (!f.is_monic()) throw std::invalid_argument("pisot_verify: polynomial must be monic");
  if (f.degree() == 0) return false;

  IntPolynomial sf = poly_squarefree_part(f);

  // exact part 1: exactly one real root above 1 (strip roots at exactly 1 so
  // the Sturm endpoints are clean)
  {
    IntPolynomial probe = sf;
    while (poly_eval(probe, BigInt(1)) == 0)
      probe = poly_div_rem(probe, IntPolynomial({-1, 1})).first;
    if (probe.degree() < 1) return false;
    BigInt maxc(0);
    for (int i = 0; i < probe.degree(); ++i) {
      BigInt a = boost::multiprecision::abs(probe.coeff(static_cast<std::size_t>(i)));
      if (a > maxc) maxc = a;
    }
    if (maxc == 0) return false;  // power of x: no root above 1
    RationalInterval I(BigRat(1), BigRat(maxc + 2));
    if (sturm_count(probe, I) != 1) return false;
  }

  // exact part 2: a cyclotomic factor means a root of modulus exactly 1
  CyclotomicSplit split = strip_cyclotomic_factors(sf);
  if (!split.factors.empty()) return false;
  const IntPolynomial& core = split.core;
  if (core.degree() == 1) return true;  // only root is the real one above 1

  // numeric part: exactly one root of the core outside the closed unit disc
  // (necessarily the real one), none on it
  using C = std::complex<double>;
  if (auto r = detail::count_roots_outside_unit_circle<double, C>(core, 0)) return *r == 1;
  if (auto r = detail::count_roots_outside_unit_circle<BigFloat<50>, BigComplex<50>>(core, 1))
    return *r == 1;
  if (auto r = detail::count_roots_outside_unit_circle<BigFloat<100>, BigComplex<100>>(core, 2))
    return *r == 1;
  if (auto r = detail::count_roots_outside_unit_circle<BigFloat<200>, BigComplex<200>>(core, 3))
    return *r == 1;
  if (auto r = detail::count_roots_outside_unit_circle<BigFloat<400>, BigComplex<400>>(core, 4))
    return *r == 1;
  if (auto r = detail::count_roots_outside_unit_circle<BigFloat<800>, BigComplex<800>>(core, 5))
    return *r == 1;
  throw PrecisionError(
      "pisot_verify: root moduli not separable from the unit circle at maximum precision");
}

}  // namespace pisot
