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

#include <pisot/polynomial.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace pisot;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int max_deg, int coeff_bound) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coeff(rng);
  return IntPolynomial(std::move(c));
}

IntPolynomial random_nonzero_poly(std::mt19937_64& rng, int max_deg, int coeff_bound) {
  for (;;) {
    IntPolynomial f = random_poly(rng, max_deg, coeff_bound);
    if (!f.is_zero()) return f;
  }
}

IntPolynomial make_monic(const IntPolynomial& f) {
  std::vector<BigInt> c(f.coeffs());
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("degree, leading coefficient, normalization") {
  IntPolynomial f({-1, -1, 1});  // x^2 - x - 1
  CHECK(f.degree() == 2);
  CHECK(f.leading() == 1);
  CHECK(f.is_monic());
  CHECK(IntPolynomial({0, 0, 0}).is_zero());
  CHECK(IntPolynomial({3, 1, 0, 0}).degree() == 1);  // trailing zeros dropped
  CHECK(IntPolynomial::zero().degree() == -1);
  CHECK(IntPolynomial::monomial(5).degree() == 5);
}

TEST_CASE("ring operations on known values") {
  IntPolynomial fib({-1, -1, 1});
  IntPolynomial lin({1, 1});  // x + 1
  CHECK(fib * lin == IntPolynomial({-1, -2, 0, 1}));
  CHECK(fib + lin == IntPolynomial({0, 0, 1}));
  CHECK(fib - fib == IntPolynomial::zero());
  CHECK(fib.shifted(2) == IntPolynomial({0, 0, -1, -1, 1}));
  CHECK(-fib == IntPolynomial({1, 1, -1}));
  CHECK(BigInt(3) * lin == IntPolynomial({3, 3}));
}

TEST_CASE("division with remainder against multiplication") {
  std::mt19937_64 rng(20260814);
  for (int trial = 0; trial < 200; ++trial) {
    // divisors must be monic, which keeps quotient and remainder in Z[x];
    // build the dividend from known parts and recover them exactly
    IntPolynomial g = make_monic(random_nonzero_poly(rng, 5, 6));
    while (g.degree() < 1) g = make_monic(random_nonzero_poly(rng, 5, 6));
    IntPolynomial q = random_poly(rng, 4, 8);
    IntPolynomial r = random_poly(rng, g.degree() - 1, 20);
    IntPolynomial built = q * g + r;
    auto [q2, r2] = poly_div_rem(built, g);
    CHECK(q2 * g + r2 == built);
    CHECK(r2.degree() < g.degree());
    CHECK(q2 == q);
    CHECK(r2 == r);
  }
  CHECK_THROWS_AS(poly_div_rem(IntPolynomial({1, 1}), IntPolynomial({0, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(poly_div_rem(IntPolynomial({1, 1}), IntPolynomial::zero()),
                  std::invalid_argument);
}

TEST_CASE("exact division recognizes factors and rejects non-factors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    IntPolynomial f = random_nonzero_poly(rng, 6, 9);
    IntPolynomial g = random_nonzero_poly(rng, 5, 9);
    auto q = poly_exact_div(f * g, g);
    REQUIRE(q.has_value());
    CHECK(*q == f);
  }
  CHECK_FALSE(poly_exact_div(IntPolynomial({1, 0, 1}), IntPolynomial({1, 1})).has_value());
  CHECK_FALSE(poly_exact_div(IntPolynomial({2, 2}), IntPolynomial({0, 4})).has_value());
}

TEST_CASE("content and primitive part") {
  IntPolynomial f({6, -12, 18});
  CHECK(poly_content(f) == 6);
  CHECK(poly_primitive_part(f) == IntPolynomial({1, -2, 3}));
  CHECK(poly_content(IntPolynomial({-4, -8})) == 4);
}

TEST_CASE("gcd of polynomials with a planted common factor") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    IntPolynomial h = poly_primitive_part(random_nonzero_poly(rng, 3, 5));
    IntPolynomial a = random_nonzero_poly(rng, 4, 5);
    IntPolynomial b = random_nonzero_poly(rng, 4, 5);
    IntPolynomial g = poly_gcd(a * h, b * h);
    // the planted factor must divide the gcd; equality only when a, b coprime
    CHECK(poly_exact_div(g, poly_primitive_part(h)).has_value());
    CHECK(poly_exact_div(a * h, g).has_value());
    CHECK(poly_exact_div(b * h, g).has_value());
  }
  CHECK(poly_gcd(IntPolynomial({-1, -1, 1}), IntPolynomial({1, 1})) == IntPolynomial::constant(1));
}

TEST_CASE("derivative, reverse, evaluation") {
  IntPolynomial f({-1, 0, -2, 0, 1});  // x^4 - 2x^2 - 1
  CHECK(poly_derivative(f) == IntPolynomial({0, -4, 0, 4}));
  CHECK(poly_reverse(f) == IntPolynomial({1, 0, -2, 0, -1}));
  CHECK(poly_eval(f, BigInt(3)) == 81 - 18 - 1);
  CHECK(poly_eval(f, BigRat(1, 2)) == BigRat(1, 16) - BigRat(1, 2) - 1);
  CHECK(poly_sign_at(f, BigRat(2)) > 0);
  CHECK(poly_sign_at(IntPolynomial({-1, -1, 1}), BigRat(1)) < 0);
}

TEST_CASE("squarefree part drops multiplicities only") {
  IntPolynomial f({-1, 1});           // x - 1
  IntPolynomial g({-1, -1, 1});       // x^2 - x - 1
  IntPolynomial h = f * f * f * g * g;
  CHECK(poly_squarefree_part(h) == f * g);
  CHECK(poly_squarefree_part(g) == g);
}

TEST_CASE("builders: x^d -+ 1 and geometric sums") {
  CHECK(x_pow_minus_one(3) == IntPolynomial({-1, 0, 0, 1}));
  CHECK(x_pow_plus_one(4) == IntPolynomial({1, 0, 0, 0, 1}));
  CHECK(geometric_sum(3) == IntPolynomial({1, 1, 1}));
  CHECK(x_pow_minus_one(6) == geometric_sum(6) * IntPolynomial({-1, 1}));
}

TEST_CASE("format and parse round-trip") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    IntPolynomial f = random_poly(rng, 8, 50);
    CHECK(parse_polynomial(format_polynomial(f)) == f);
  }
  CHECK(format_polynomial(IntPolynomial({-1, -1, 1})) == "x^2-x-1");
  CHECK(format_polynomial(IntPolynomial::zero()) == "0");
  CHECK(parse_polynomial("x^2 - x - 1") == IntPolynomial({-1, -1, 1}));
  CHECK(parse_polynomial("2x^3+5") == IntPolynomial({5, 0, 0, 2}));
  CHECK(parse_polynomial("-x") == IntPolynomial({0, -1}));
  CHECK_THROWS_AS(parse_polynomial("x^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("x**2"), std::invalid_argument);
}
