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

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <vector>

namespace pisot {

namespace detail {

inline int euler_phi(int d) {
  int result = d;
  int m = d;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

inline std::vector<int> divisors_of(int d) {
  std::vector<int> divs;
  for (int e = 1; e * e <= d; ++e) {
    if (d % e == 0) {
      divs.push_back(e);
      if (e != d / e) divs.push_back(d / e);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace detail

/* d-th cyclotomic polynomial, computed by exact division of x^d - 1 by all
   lower-order cyclotomic factors.  Memoized; thread-safe. */
inline const IntPolynomial& cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic: order must be >= 1");
  static std::map<int, IntPolynomial> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);

  auto it = cache.find(d);
  if (it != cache.end()) return it->second;

  // iterative over divisors so the recursion never re-locks
  std::vector<int> order;
  std::vector<int> stack{d};
  while (!stack.empty()) {
    int k = stack.back();
    stack.pop_back();
    if (cache.count(k)) continue;
    order.push_back(k);
    for (int e : detail::divisors_of(k))
      if (e != k && !cache.count(e)) stack.push_back(e);
  }
  std::sort(order.begin(), order.end());
  for (int k : order) {
    if (cache.count(k)) continue;
    IntPolynomial num = x_pow_minus_one(k);
    for (int e : detail::divisors_of(k)) {
      if (e == k) continue;
      auto [q, r] = poly_div_rem(num, cache.at(e));
      if (!r.is_zero()) throw std::logic_error("cyclotomic: non-exact division");
      num = std::move(q);
    }
    cache.emplace(k, std::move(num));
  }
  return cache.at(d);
}

/* All orders d whose cyclotomic polynomial could divide a polynomial of the
   given degree, i.e. phi(d) <= degree.  Uses phi(d) >= sqrt(d/2), so the
   search space is d <= 2*degree^2, covered by a shared sieve.  Memoized;
   thread-safe. */
inline std::vector<int> cyclotomic_candidates(int degree) {
  if (degree < 1) return {};
  if (degree > 2048)
    throw std::invalid_argument("cyclotomic_candidates: degree too large for factor search");
  static std::mutex mu;
  static std::vector<int> phi;  // phi[d] for d < phi.size()
  static std::map<int, std::vector<int>> memo;
  std::lock_guard<std::mutex> lock(mu);

  auto it = memo.find(degree);
  if (it != memo.end()) return it->second;

  const std::size_t limit = 2 * static_cast<std::size_t>(degree) * static_cast<std::size_t>(degree) + 1;
  if (phi.size() < limit + 1) {
    phi.resize(limit + 1);
    for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = static_cast<int>(i);
    for (std::size_t i = 2; i < phi.size(); ++i) {
      if (phi[i] == static_cast<int>(i)) {  // i prime
        for (std::size_t j = i; j < phi.size(); j += i) phi[j] -= phi[j] / static_cast<int>(i);
      }
    }
  }
  std::vector<int> out;
  for (std::size_t d = 1; d <= limit; ++d)
    if (phi[d] <= degree) out.push_back(static_cast<int>(d));
  return memo.emplace(degree, std::move(out)).first->second;
}

struct CyclotomicSplit {
  std::map<int, int> factors;  // order -> multiplicity
  IntPolynomial core;          // what remains, no cyclotomic divisor
};

namespace detail {

/* Numeric screen: |f(e^{2pi*i/d})| larger than a rigorous round-off bound
   proves Phi_d does not divide f, skipping the exact trial division.  Returns
   false only when the value is provably non-zero. */
inline bool maybe_root_of_unity(const IntPolynomial& f, int d) {
  long double sumabs = 0;
  for (const auto& c : f.coeffs()) {
    double v = boost::multiprecision::abs(c).convert_to<double>();
    if (!std::isfinite(v) || v > 1e280) return true;  // screen unusable, go exact
    sumabs += v;
  }
  const long double theta = 2.0L * 3.14159265358979323846264338327950288L / d;
  const std::complex<long double> z(std::cos(theta), std::sin(theta));
  std::complex<long double> acc(0, 0);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
    acc = acc * z + std::complex<long double>(it->convert_to<double>(), 0);
  const long double bound = sumabs * (f.degree() + 1) * 1e-12L;
  return std::abs(acc) <= bound;
}

}  // namespace detail

/* Peels every cyclotomic factor off f (with multiplicity) and returns the
   multiset of orders plus the cyclotomic-free remainder.  The core keeps f's
   content and leading sign. */
inline CyclotomicSplit strip_cyclotomic_factors(const IntPolynomial& f) {
  if (f.is_zero())
    throw std::invalid_argument("strip_cyclotomic_factors: zero polynomial");
  CyclotomicSplit split;
  split.core = f;
  if (f.degree() < 1) return split;

  for (int d : cyclotomic_candidates(f.degree())) {
    if (split.core.degree() < 1) break;
    if (detail::euler_phi(d) > split.core.degree()) continue;
    if (!detail::maybe_root_of_unity(split.core, d)) continue;
    const IntPolynomial& phi = cyclotomic(d);
    while (true) {
      auto [q, r] = poly_div_rem(split.core, phi);
      if (!r.is_zero()) break;
      split.core = std::move(q);
      ++split.factors[d];
      if (split.core.degree() < 1) break;
    }
  }
  return split;
}

/* True iff f is (up to sign) a product of cyclotomic polynomials. */
inline bool is_cyclotomic_product(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("is_cyclotomic_product: zero polynomial");
  IntPolynomial core = strip_cyclotomic_factors(f).core;
  return core.is_constant() && (core.leading() == 1 || core.leading() == -1);
}

/* True iff x^deg(f) * f(1/x) = +-f. */
inline bool is_reciprocal(const IntPolynomial& f) {
  IntPolynomial r = poly_reverse(f);
  return r == f || r == -f;
}

}  // namespace pisot
