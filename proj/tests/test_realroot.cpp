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

#include <pisot/interval.hpp>
#include <pisot/pisot_check.hpp>
#include <pisot/real_algebraic.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace pisot;

namespace {

const IntPolynomial kGolden({-1, -1, 1});      // x^2 - x - 1
const IntPolynomial kPlastic({-1, -1, 0, 1});  // x^3 - x - 1
const IntPolynomial kChi({1, 0, -2, -1, 1});   // x^4 - x^3 - 2x^2 + 1

}  // namespace

TEST_CASE("interval evaluation encloses every rational sample") {
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> num(-40, 40);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigInt> c(1 + static_cast<std::size_t>(trial % 7));
    for (auto& x : c) x = coeff(rng);
    IntPolynomial f(std::move(c));
    BigRat lo(num(rng), 8), w(std::uniform_int_distribution<int>(1, 16)(rng), 8);
    RationalInterval I{lo, lo + w};
    RationalInterval out = eval_interval(f, I);
    for (BigRat t : {BigRat(0), BigRat(1, 3), BigRat(1, 2), BigRat(7, 8), BigRat(1)}) {
      BigRat x = I.lo + t * (I.hi - I.lo);
      BigRat y = poly_eval(f, x);
      CHECK(out.lo <= y);
      CHECK(y <= out.hi);
    }
  }
}

TEST_CASE("interval_sign is conclusive away from roots") {
  RationalInterval right{BigRat(2), BigRat(3)};
  CHECK(interval_sign(kGolden, right) > 0);
  CHECK(interval_sign(-kGolden, right) < 0);
  // straddles the golden ratio: must stay undecided
  CHECK(interval_sign(kGolden, RationalInterval{BigRat(1), BigRat(2)}) == 0);
}

TEST_CASE("sturm counts on pinned intervals") {
  CHECK(sturm_count(kGolden, RationalInterval{BigRat(1), BigRat(2)}) == 1);
  CHECK(sturm_count(kGolden, RationalInterval{BigRat(-2), BigRat(0)}) == 1);
  CHECK(sturm_count(kGolden, RationalInterval{BigRat(-2), BigRat(2)}) == 2);
  CHECK(sturm_count(kPlastic, RationalInterval{BigRat(1), BigRat(2)}) == 1);
  CHECK(sturm_count(kChi, RationalInterval{BigRat(1), BigRat(2)}) == 1);
  CHECK(sturm_count(IntPolynomial({2, 0, 1}), RationalInterval{BigRat(-9), BigRat(9)}) == 0);
  // 1.618 is just below the root, so the open interval holds nothing
  CHECK(sturm_count(kGolden, RationalInterval{BigRat(0), BigRat(1618, 1000)}) == 0);
  // endpoint roots are rejected rather than silently miscounted
  CHECK_THROWS_AS(sturm_count(IntPolynomial({2, -3, 1}), RationalInterval{BigRat(0), BigRat(2)}),
                  std::domain_error);
}

TEST_CASE("make_real_algebraic enforces its invariants") {
  CHECK_THROWS_AS(make_real_algebraic(kGolden * kGolden, RationalInterval{BigRat(1), BigRat(2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_real_algebraic(kGolden, RationalInterval{BigRat(2), BigRat(3)}),
                  std::invalid_argument);
  RealAlgebraic phi = make_real_algebraic(kGolden, RationalInterval{BigRat(1), BigRat(2)});
  CHECK(phi.sign_lo != 0);
}

TEST_CASE("refinement shrinks the isolating interval around the same root") {
  RealAlgebraic phi = make_real_algebraic(kGolden, RationalInterval{BigRat(1), BigRat(2)});
  RealAlgebraic fine = refine(phi, BigRat(1, 1000000));
  CHECK(fine.isol.hi - fine.isol.lo <= BigRat(1, 1000000));
  // 1.618033 < phi < 1.618034, so the 1e-6 bracket pins one more digit out
  CHECK(fine.isol.lo > BigRat(1618032, 1000000));
  CHECK(fine.isol.hi < BigRat(1618035, 1000000));
}

TEST_CASE("sign_at decides exactly, including the zero case") {
  RealAlgebraic phi = make_real_algebraic(kGolden, RationalInterval{BigRat(1), BigRat(2)});
  CHECK(sign_at(kGolden, phi) == 0);
  CHECK(sign_at(kGolden * IntPolynomial({5, 7, 1}), phi) == 0);
  CHECK(sign_at(IntPolynomial({-1, 1}), phi) > 0);             // phi - 1 > 0
  CHECK(sign_at(IntPolynomial({-2, 1}), phi) < 0);             // phi - 2 < 0
  CHECK(sign_at(IntPolynomial({1, -1, 1}), phi) > 0);          // x^2-x+1 at phi
  CHECK(sign_at(IntPolynomial({-8, 0, 0, 5}), phi) > 0);       // 5x^3 - 8
  CHECK(compare_with_rational(phi, BigRat(1618, 1000)) > 0);
  CHECK(compare_with_rational(phi, BigRat(1619, 1000)) < 0);
  RealAlgebraic three = make_real_algebraic(IntPolynomial({-3, 1}), RationalInterval{BigRat(2), BigRat(4)});
  CHECK(compare_with_rational(three, BigRat(3)) == 0);
}

TEST_CASE("isolate_root_above_1") {
  auto phi = isolate_root_above_1(kGolden);
  REQUIRE(phi.has_value());
  CHECK(compare_with_rational(*phi, BigRat(3, 2)) > 0);
  CHECK_FALSE(isolate_root_above_1(IntPolynomial({1, 1})).has_value());     // root -1
  CHECK_FALSE(isolate_root_above_1(IntPolynomial({2, 0, 1})).has_value());  // no real root
  CHECK_FALSE(isolate_root_above_1(IntPolynomial({-1, 1})).has_value());    // root exactly 1
}

TEST_CASE("pisot_verify accepts known Pisot numbers") {
  CHECK(pisot_verify(kGolden));
  CHECK(pisot_verify(kPlastic));                           // smallest Pisot number
  CHECK(pisot_verify(IntPolynomial({-1, -1, -1, 1})));     // tribonacci
  CHECK(pisot_verify(IntPolynomial({-2, 1})));             // the integer 2
  CHECK(pisot_verify(kChi));
}

TEST_CASE("pisot_verify rejects non-Pisot algebraic integers") {
  CHECK_FALSE(pisot_verify(IntPolynomial({-2, 0, 1})));       // sqrt(2): conjugate -sqrt(2)
  CHECK_FALSE(pisot_verify(IntPolynomial({-3, 0, 1})));       // sqrt(3)
  CHECK_FALSE(pisot_verify(IntPolynomial({-3, -1, 1})));      // x^2-x-3: conjugate below -1
  CHECK_FALSE(pisot_verify(IntPolynomial({1, 0, 0, 0, 1})));  // no root > 1 at all
  CHECK_FALSE(pisot_verify(x_pow_minus_one(5)));              // cyclotomic factors
  CHECK(pisot_verify(IntPolynomial({1, -3, 1})));             // golden ratio squared
}

TEST_CASE("pisot_verify refuses to guess on unit-circle conjugates") {
  // x^4 - x^3 - x^2 - x + 1 is reciprocal with its complex pair exactly on
  // the unit circle but not at roots of unity; no precision can separate it
  CHECK_THROWS_AS(pisot_verify(IntPolynomial({1, -1, -1, -1, 1})), PrecisionError);
}
