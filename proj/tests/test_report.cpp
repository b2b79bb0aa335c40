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

#include <pisot/render.hpp>
#include <pisot/sweep.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <sstream>

using namespace pisot;

TEST_CASE("parse_checks: comma lists") {
  CheckSet all = parse_checks("all");
  CHECK(all.expansion);
  CHECK(all.identities);

  CheckSet two = parse_checks("parry,boyd");
  CHECK(two.parry);
  CHECK(two.boyd);
  CHECK_FALSE(two.expansion);
  CHECK_FALSE(two.cofactor);
  CHECK_FALSE(two.frg);
  CHECK_FALSE(two.identities);

  CHECK_THROWS_AS(parse_checks("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(parse_checks("parry,"), std::invalid_argument);
  CHECK_THROWS_AS(parse_checks(""), std::invalid_argument);
}

TEST_CASE("parse_family_selection: canonical order, sign expansion") {
  CHECK(parse_family_selection("all").size() == 17);

  auto both = parse_family_selection("PhiB");
  REQUIRE(both.size() == 2);
  CHECK(both[0] == FamilySelector{FamilyKind::PhiB, 1});
  CHECK(both[1] == FamilySelector{FamilyKind::PhiB, -1});

  // output order is the table order, not the mention order
  auto mixed = parse_family_selection("ChiB-,PhiR,PsiA+");
  REQUIRE(mixed.size() == 3);
  CHECK(mixed[0] == FamilySelector{FamilyKind::PhiR, 0});
  CHECK(mixed[1] == FamilySelector{FamilyKind::PsiA, 1});
  CHECK(mixed[2] == FamilySelector{FamilyKind::ChiB, -1});

  // duplicates collapse
  CHECK(parse_family_selection("Chi,Chi,all").size() == 17);

  CHECK_THROWS_AS(parse_family_selection("PhiB+(2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_selection(""), std::invalid_argument);
}

TEST_CASE("sweep_instances: range expansion per family shape") {
  auto ids = sweep_instances(parse_family_selection("PhiR,Chi,ChiA+"), 2, 3, 4, 5);
  REQUIRE(ids.size() == 5);  // PhiR r=2,3; Chi; ChiA+ n=4,5
  CHECK(ids[0] == parse_family("PhiR(2)"));
  CHECK(ids[1] == parse_family("PhiR(3)"));
  CHECK(ids[2] == parse_family("Chi"));
  CHECK(ids[3] == parse_family("ChiA+(4)"));
  CHECK(ids[4] == parse_family("ChiA+(5)"));

  auto grid = sweep_instances(parse_family_selection("PhiB+"), 1, 2, 1, 3);
  REQUIRE(grid.size() == 6);  // r outer, n inner
  CHECK(grid[0] == parse_family("PhiB+(1,1)"));
  CHECK(grid[2] == parse_family("PhiB+(1,3)"));
  CHECK(grid[3] == parse_family("PhiB+(2,1)"));

  CHECK_THROWS_AS(sweep_instances(parse_family_selection("all"), 0, 3, 1, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(sweep_instances(parse_family_selection("all"), 1, 3, 2, 1),
                  std::invalid_argument);
}

TEST_CASE("run_instance: clean instances have no failures") {
  InstanceRecord rec = run_instance(parse_family("PhiR(2)"), CheckSet{});
  CHECK(rec.status == InstanceStatus::OK);
  CHECK(rec.failures.empty());
  CHECK(rec.word == parse_word("1101"));
  CHECK(rec.companion == parse_polynomial("x^4-x^3-x^2-1"));
  CHECK(rec.engine_match == std::optional<bool>(true));

  InstanceRecord empty = run_instance(parse_family("PhiB+(2,1)"), CheckSet{});
  CHECK(empty.status == InstanceStatus::NO_ROOT);
  CHECK(empty.failures.empty());
  CHECK_FALSE(empty.word.has_value());
  CHECK_FALSE(empty.parry.has_value());
}

TEST_CASE("run_instance: published-rule deviations surface as notes") {
  InstanceRecord rec = run_instance(parse_family("ChiB-(5)"), CheckSet{});
  CHECK(rec.failures.empty());
  REQUIRE_FALSE(rec.notes.empty());
  bool mentions_cofactor = false;
  for (const std::string& note : rec.notes)
    if (note.find("x^7+x^5+x^2+1") != std::string::npos) mentions_cofactor = true;
  CHECK(mentions_cofactor);
}

TEST_CASE("jsonl_record: fixed key order, null for absent fields") {
  InstanceRecord ok = run_instance(parse_family("PhiA+(1,3)"), CheckSet{});
  CHECK(jsonl_record(ok) ==
        R"j({"family":"PhiA+","r":1,"n":3,"status":"OK","word":"10001",)j"
        R"j("companion":"x^6-x^5-x","pseudo_cofactor":"(x^2-x+1)/(x-1)",)j"
        R"j("true_cofactor_cyclotomic":true,"true_cofactor_reciprocal":true,)j"
        R"j("parry":true,"frg":true,"engine_match":true,"ms":0})j");

  InstanceRecord none = run_instance(parse_family("PhiA+(1,1)"), CheckSet{});
  CHECK(jsonl_record(none) ==
        R"j({"family":"PhiA+","r":1,"n":1,"status":"NO_ROOT","word":null,)j"
        R"j("companion":null,"pseudo_cofactor":null,"true_cofactor_cyclotomic":null,)j"
        R"j("true_cofactor_reciprocal":null,"parry":null,"frg":null,)j"
        R"j("engine_match":null,"ms":0})j");

  // families without an r parameter report r as null
  InstanceRecord chi_a = run_instance(parse_family("ChiA+(1)"), CheckSet{});
  CHECK(jsonl_record(chi_a).rfind(R"j({"family":"ChiA+","r":null,"n":1,)j", 0) == 0);
}

TEST_CASE("run_sweep: counts failures across records") {
  auto ids = sweep_instances(parse_family_selection("PsiR"), 1, 4, 1, 1);
  SweepReport report = run_sweep(ids, CheckSet{});
  REQUIRE(report.records.size() == 4);
  CHECK(report.failure_count == 0);
  for (const auto& rec : report.records) CHECK(rec.failures.empty());
}

TEST_CASE("render_instance: row index drives the free parameter") {
  CHECK(render_instance(parse_family_parts("PhiB-(20)"), 7) == parse_family("PhiB-(20,7)"));
  CHECK(render_instance(parse_family_parts("PsiR"), 3) == parse_family("PsiR(3)"));
  CHECK(render_instance(parse_family_parts("ChiB+"), 4) == parse_family("ChiB+(4)"));

  CHECK_THROWS_AS(render_instance(parse_family_parts("Chi"), 1), std::invalid_argument);
  CHECK_THROWS_AS(render_instance(parse_family_parts("PhiB(20)"), 1), std::invalid_argument);
  CHECK_THROWS_AS(render_instance(parse_family_parts("PhiB-"), 1), std::invalid_argument);
  CHECK_THROWS_AS(render_instance(parse_family_parts("PhiR(5)"), 1), std::invalid_argument);
  CHECK_THROWS_AS(render_instance(parse_family_parts("ChiB+(2)"), 1), std::invalid_argument);
}

TEST_CASE("render_family: digit colors, padding, no-root rows") {
  // PsiR words are all-ones: row n begins with n+1 black pixels, then green
  RasterImage img = render_family(parse_family_parts("PsiR"), 1, 10, 20);
  REQUIRE(img.width == 20);
  REQUIRE(img.height == 10);
  const auto pixel = [&](int row, int col) {
    const std::size_t at = 3 * (static_cast<std::size_t>(row) * img.width + col);
    return std::array<unsigned char, 3>{img.rgb[at], img.rgb[at + 1], img.rgb[at + 2]};
  };
  const std::array<unsigned char, 3> black{0, 0, 0}, green{0, 255, 0}, white{255, 255, 255};
  CHECK(pixel(1, 0) == black);  // row n=2: digits 1,1,1,0,...
  CHECK(pixel(1, 2) == black);
  CHECK(pixel(1, 3) == green);
  CHECK(pixel(9, 10) == black);  // row n=10 is ones through column 10

  // no-root rows are white across the full width
  RasterImage blank = render_family(parse_family_parts("PhiB+(2)"), 1, 2, 4);
  const auto at = [&](int row, int col) {
    const std::size_t a = 3 * (static_cast<std::size_t>(row) * blank.width + col);
    return std::array<unsigned char, 3>{blank.rgb[a], blank.rgb[a + 1], blank.rgb[a + 2]};
  };
  for (int c = 0; c < 4; ++c) CHECK(at(0, c) == white);
  CHECK(at(1, 0) == black);  // n=2 has a root; every expansion starts with 1

  // pixels match digit_at across a ragged family; n = 1, 2 have their only
  // root at or beyond 2 and must come out white
  RasterImage grid = render_family(parse_family_parts("PhiB-(3)"), 1, 6, 40);
  for (int n = 1; n <= 6; ++n) {
    CatalogEntry e = catalog_expansion(parse_family("PhiB-(3," + std::to_string(n) + ")"));
    CHECK((e.status == InstanceStatus::OK) == (n >= 3));
    for (int c = 0; c < 40; ++c) {
      const std::size_t a = 3 * (static_cast<std::size_t>(n - 1) * 40 + c);
      if (e.status != InstanceStatus::OK) {
        CHECK(grid.rgb[a] == 255);
        continue;
      }
      const bool is_one = grid.rgb[a] == 0 && grid.rgb[a + 1] == 0;
      CHECK(is_one == (digit_at(*e.word, static_cast<std::size_t>(c) + 1) == 1));
    }
  }

  CHECK_THROWS_AS(render_family(parse_family_parts("PsiR"), 1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(render_family(parse_family_parts("PsiR"), 3, 2, 10), std::invalid_argument);
}

TEST_CASE("write_ppm: exact bytes") {
  RasterImage img = render_family(parse_family_parts("PsiR"), 1, 2, 3);
  std::ostringstream os;
  write_ppm(os, img);
  // row r=1: word 11  -> black black green; row r=2: word 111 -> all black
  const std::string want = std::string("P6\n3 2\n255\n") +
                           std::string("\0\0\0\0\0\0\0\xff\0\0\0\0\0\0\0\0\0\0", 18);
  CHECK(os.str() == want);
}
