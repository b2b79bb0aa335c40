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

#include <pisot/cyclotomic.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace pisot;
using pisot::detail::divisors_of;
using pisot::detail::euler_phi;

TEST_CASE("euler phi on small arguments") {
  const int expected[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (int d = 1; d <= 12; ++d) CHECK(euler_phi(d) == expected[d]);
  CHECK(euler_phi(360) == 96);
}

TEST_CASE("cyclotomic polynomials: known small cases") {
  CHECK(cyclotomic(1) == IntPolynomial({-1, 1}));
  CHECK(cyclotomic(2) == IntPolynomial({1, 1}));
  CHECK(cyclotomic(3) == IntPolynomial({1, 1, 1}));
  CHECK(cyclotomic(4) == IntPolynomial({1, 0, 1}));
  CHECK(cyclotomic(6) == IntPolynomial({1, -1, 1}));
  CHECK(cyclotomic(12) == IntPolynomial({1, 0, -1, 0, 1}));
  // the first case with a coefficient outside {-1,0,1}
  CHECK(cyclotomic(105).coeff(7) == -2);
}

TEST_CASE("product over divisors reconstructs x^d - 1") {
  for (int d : {1, 2, 6, 12, 30, 48}) {
    IntPolynomial prod = IntPolynomial::constant(1);
    for (int q : divisors_of(d)) prod = prod * cyclotomic(q);
    CHECK(prod == x_pow_minus_one(d));
  }
}

TEST_CASE("cyclotomic degree equals euler phi") {
  for (int d = 1; d <= 60; ++d) CHECK(cyclotomic(d).degree() == euler_phi(d));
}

TEST_CASE("strip_cyclotomic_factors recomposes its input") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> pick_d(1, 20);
  std::uniform_int_distribution<int> pick_mult(1, 2);
  const IntPolynomial cores[] = {
      IntPolynomial({-1, -1, 1}),        // x^2 - x - 1
      IntPolynomial({-1, -1, 0, 1}),     // x^3 - x - 1
      IntPolynomial({1, 0, -2, -1, 1}),  // x^4 - x^3 - 2x^2 + 1
      IntPolynomial::constant(1),
  };
  for (int trial = 0; trial < 50; ++trial) {
    IntPolynomial f = cores[static_cast<std::size_t>(trial) % 4];
    std::map<int, int> planted;
    for (int j = 0, reps = 1 + trial % 3; j < reps; ++j) {
      int d = pick_d(rng), m = pick_mult(rng);
      planted[d] += m;
      for (int t = 0; t < m; ++t) f = f * cyclotomic(d);
    }
    CyclotomicSplit split = strip_cyclotomic_factors(f);
    IntPolynomial rebuilt = split.core;
    for (const auto& [d, mult] : split.factors)
      for (int t = 0; t < mult; ++t) rebuilt = rebuilt * cyclotomic(d);
    CHECK(rebuilt == f);
    CHECK(split.factors == planted);
    CHECK(strip_cyclotomic_factors(split.core).factors.empty());
  }
}

TEST_CASE("is_cyclotomic_product") {
  CHECK(is_cyclotomic_product(IntPolynomial::constant(1)));
  CHECK(is_cyclotomic_product(x_pow_minus_one(7)));
  CHECK(is_cyclotomic_product(x_pow_plus_one(6)));
  CHECK(is_cyclotomic_product(cyclotomic(3) * cyclotomic(3) * cyclotomic(10)));
  CHECK_FALSE(is_cyclotomic_product(IntPolynomial({-1, -1, 1})));
  CHECK_FALSE(is_cyclotomic_product(IntPolynomial({-1, 0, 0, 1}) * IntPolynomial({-1, -1, 1})));
  CHECK_FALSE(is_cyclotomic_product(IntPolynomial({0, 1})));  // x is not cyclotomic
}

TEST_CASE("is_reciprocal: self-reciprocal products and counterexamples") {
  CHECK(is_reciprocal(IntPolynomial({1, 3, 1})));
  CHECK(is_reciprocal(IntPolynomial::constant(5)));
  CHECK_FALSE(is_reciprocal(IntPolynomial({-1, -1, 1})));
  CHECK_FALSE(is_reciprocal(IntPolynomial({1, 2})));
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<BigInt> c(1 + static_cast<std::size_t>(trial % 6));
    for (auto& x : c) x = coeff(rng);
    IntPolynomial f(std::move(c));
    if (f.is_zero() || f.coeff(0) == 0) continue;  // reversal must not lose degree
    CHECK(is_reciprocal(f * poly_reverse(f)));
  }
}
