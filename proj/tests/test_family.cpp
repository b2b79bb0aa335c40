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

#include <pisot/family.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace pisot;

namespace {
FamilyId fam(FamilyKind k, int sign, int r, int n) { return FamilyId{k, sign, r, n}; }
}  // namespace

TEST_CASE("parse_family/format_family: round trips and arity") {
  for (const char* text : {"PhiR(3)", "PsiR(1)", "Chi", "PhiA+(2,3)", "PhiB-(4,1)",
                           "PhiC+(1,7)", "PsiA-(2,2)", "PsiB+(3,3)", "ChiA-(5)", "ChiB+(12)"}) {
    CHECK(format_family(parse_family(text)) == text);
  }
  CHECK(parse_family(" PhiA + ( 2 , 3 ) ") == fam(FamilyKind::PhiA, 1, 2, 3));

  CHECK_THROWS_AS(parse_family("PhiA(2,3)"), std::invalid_argument);   // sign required
  CHECK_THROWS_AS(parse_family("Chi+"), std::invalid_argument);        // no sign on limits
  CHECK_THROWS_AS(parse_family("PhiR(2,3)"), std::invalid_argument);   // one argument only
  CHECK_THROWS_AS(parse_family("PhiA+(2)"), std::invalid_argument);    // needs both r and n
  CHECK_THROWS_AS(parse_family("ChiB+(2,3)"), std::invalid_argument);  // n only
  CHECK_THROWS_AS(parse_family("Bogus(1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("PhiR(0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("Chi extra"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family(""), std::invalid_argument);
}

TEST_CASE("validate_family: parameter shape per kind") {
  CHECK_NOTHROW(validate_family(fam(FamilyKind::Chi, 0, 0, 0)));
  CHECK_THROWS_AS(validate_family(fam(FamilyKind::Chi, 1, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(validate_family(fam(FamilyKind::PhiR, 1, 2, 0)), std::invalid_argument);
  CHECK_THROWS_AS(validate_family(fam(FamilyKind::PhiR, 0, 2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(validate_family(fam(FamilyKind::PhiA, 0, 2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(validate_family(fam(FamilyKind::ChiA, 1, 2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(validate_family(fam(FamilyKind::PhiA, 1, 0, 3)), std::invalid_argument);
  CHECK_THROWS_AS(validate_family(fam(FamilyKind::PhiA, 1, 2, kMaxFamilyParam + 1)),
                  std::invalid_argument);
}

TEST_CASE("defining_poly: limit polynomials and perturbations") {
  CHECK(defining_poly(parse_family("PhiR(2)")) == parse_polynomial("x^3-2x^2+x-1"));
  CHECK(defining_poly(parse_family("PhiR(1)")) == parse_polynomial("x^2-x-1"));
  CHECK(defining_poly(parse_family("PsiR(2)")) == parse_polynomial("x^3-x^2-x-1"));
  CHECK(defining_poly(parse_family("Chi")) == parse_polynomial("x^4-x^3-2x^2+1"));

  // limit * x^n +/- perturbation, assembled by hand for one of each shape
  CHECK(defining_poly(parse_family("PhiA+(2,3)")) ==
        parse_polynomial("x^6-2x^5+x^4-x^3+x^2-x+1"));
  CHECK(defining_poly(parse_family("PhiB-(2,3)")) ==
        parse_polynomial("x^6-2x^5+x^4-x^3-x^2+x-1"));
  CHECK(defining_poly(parse_family("PhiC+(1,2)")) ==
        phi_limit_poly(1).shifted(2) + parse_polynomial("x+1") * parse_polynomial("x-1"));
  CHECK(defining_poly(parse_family("PsiA-(2,2)")) ==
        parse_polynomial("x^5-x^4-2x^3-x^2+1"));
  CHECK(defining_poly(parse_family("PsiB+(1,2)")) == parse_polynomial("x^4-x^3-x^2+1"));
  CHECK(defining_poly(parse_family("ChiA-(3)")) ==
        chi_limit_poly().shifted(3) - parse_polynomial("x^3+x^2-x-1"));
  CHECK(defining_poly(parse_family("ChiB+(2)")) ==
        chi_limit_poly().shifted(2) + parse_polynomial("x^4-x^2+1"));
}

TEST_CASE("normalize_family: reindexing folds") {
  CHECK(normalize_family(parse_family("PhiA+(5,2)")) == parse_family("PhiA+(3,4)"));
  CHECK(normalize_family(parse_family("PhiA+(3,4)")) == parse_family("PhiA+(3,4)"));
  CHECK(normalize_family(parse_family("PhiA-(5,2)")) == parse_family("PhiA-(5,2)"));
  CHECK(normalize_family(parse_family("PhiC+(3,2)")) == parse_family("PhiC+(2,3)"));
  CHECK(normalize_family(parse_family("PhiC+(2,2)")) == parse_family("PhiC+(2,2)"));
  CHECK(normalize_family(parse_family("PhiC-(3,2)")) == parse_family("PhiC-(3,2)"));

  // folds are sound: both parameterizations name the same polynomial
  CHECK(defining_poly(parse_family("PhiA+(5,2)")) == defining_poly(parse_family("PhiA+(3,4)")));
  CHECK(defining_poly(parse_family("PhiC+(3,2)")) == defining_poly(parse_family("PhiC+(2,3)")));
}

TEST_CASE("classify_root: exact trichotomy") {
  CHECK(classify_root(parse_family("PhiR(2)")).status == InstanceStatus::OK);
  CHECK(classify_root(parse_family("Chi")).status == InstanceStatus::OK);
  CHECK(classify_root(parse_family("PhiA-(1,2)")).status == InstanceStatus::OK);

  // (x-1)^2 times a reciprocal factor: nothing above 1 at all
  CHECK(classify_root(parse_family("PhiB+(2,1)")).status == InstanceStatus::NO_ROOT);
  CHECK(classify_root(parse_family("PsiB+(1,1)")).status == InstanceStatus::NO_ROOT);

  // x(x-2)(x+1): a root above 1, but exactly at 2
  CHECK(defining_poly(parse_family("PhiA-(1,1)")) == parse_polynomial("x^3-x^2-2x"));
  CHECK(classify_root(parse_family("PhiA-(1,1)")).status == InstanceStatus::ROOT_NOT_IN_1_2);
  CHECK(classify_root(parse_family("PsiA-(2,2)")).status == InstanceStatus::ROOT_NOT_IN_1_2);
}

TEST_CASE("pisot_root_of: certified root over the cyclotomic-free core") {
  auto root = pisot_root_of(parse_family("PhiR(1)"));
  REQUIRE(root.has_value());
  CHECK(root->defpoly == parse_polynomial("x^2-x-1"));
  CHECK(compare_with_rational(*root, BigRat(1618, 1000)) > 0);
  CHECK(compare_with_rational(*root, BigRat(1619, 1000)) < 0);

  // PsiB+(2,1) defines x^4-x^3-x^2+1 = (x-1)(x^3-x-1): the core the engine
  // sees must be the cubic
  auto folded = pisot_root_of(parse_family("PsiB+(2,1)"));
  REQUIRE(folded.has_value());
  CHECK(folded->defpoly == parse_polynomial("x^3-x-1"));

  CHECK_FALSE(pisot_root_of(parse_family("PhiB+(2,1)")).has_value());
  CHECK_FALSE(pisot_root_of(parse_family("PhiA-(1,1)")).has_value());
}
