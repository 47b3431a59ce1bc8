/* Copyright 2026 the finsite authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <doctest.h>

#include <json.hpp>

#include "finsite/io.hpp"
#include "testutil.hpp"

using namespace fstest;

TEST_CASE("category files round trip byte-exactly") {
  for (auto name : fixture_names()) {
    const std::string& text = fixture_json(name);
    const auto cat = FiniteCategory::validate(read_category_description(text));
    CHECK(write_category(*cat) == text);
  }
}

TEST_CASE("file kinds are classified by their keys") {
  CHECK(classify_json(fixture_json("WALK")) == FileKind::kCategory);
  CHECK(classify_json(R"({"category":"WALK","covers":{}})") ==
        FileKind::kTopology);
  CHECK(classify_json(R"({"cod":"b","arrows":[]})") == FileKind::kSieve);
  CHECK(classify_json(R"({"category":"WALK","values":{},"restriction":{}})") ==
        FileKind::kPresheaf);
  CHECK(classify_json(R"({"presheaf":"x","chosen":{}})") ==
        FileKind::kSubpresheaf);
  CHECK_THROWS_AS(classify_json("{}"), Error);
  CHECK_THROWS_AS(classify_json("not json"), Error);
}

TEST_CASE("strict topology loading demands the axioms") {
  const CategoryPtr walk = fixture_category("WALK");
  // {u} covers b and ∅ covers a, so transitivity forces ∅ at b
  const std::string text = R"({
    "category": "WALK",
    "covers": {
      "a": [[], ["id_a"]],
      "b": [["u"], ["id_b", "u"]]
    }
  })";
  try {
    read_topology(text, walk, LoadMode::kStrict);
    FAIL("expected AxiomViolation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kAxiomViolation);
    CHECK(std::string(e.what()).find("transitivity") != std::string::npos);
  }
  CHECK(read_topology(text, walk, LoadMode::kSaturate) ==
        maximal_topology(walk));
}

TEST_CASE("topology round trip") {
  const CategoryPtr walk = fixture_category("WALK");
  const auto j = jcov(walk);
  const std::string text = write_topology(j, "WALK");
  CHECK(referenced_category(text) == "WALK");
  CHECK(read_topology(text, walk, LoadMode::kStrict) == j);
  CHECK(write_topology(read_topology(text, walk, LoadMode::kStrict), "WALK") ==
        text);
}

TEST_CASE("sieve files") {
  const CategoryPtr walk = fixture_category("WALK");
  const Sieve s = sieve(walk, "b", {"u"});
  CHECK(read_sieve(write_sieve(s), walk) == s);
  CHECK_THROWS_AS(read_sieve(R"({"cod":"b","arrows":["nope"]})", walk), Error);
  try {
    read_sieve(R"({"cod":"b","arrows":["id_b"]})", walk);
    FAIL("expected NotASieve");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kNotASieve);
  }
}

TEST_CASE("presheaf and subpresheaf files") {
  const CategoryPtr walk = fixture_category("WALK");
  Presheaf::Description d;
  d.values["a"] = {"e0"};
  d.values["b"] = {"x", "y"};
  d.restriction["id_a"] = {{"e0", "e0"}};
  d.restriction["id_b"] = {{"x", "x"}, {"y", "y"}};
  d.restriction["u"] = {{"x", "e0"}, {"y", "e0"}};
  const PresheafPtr e = Presheaf::validate(walk, d);

  const std::string text = write_presheaf(*e, "WALK");
  CHECK(referenced_category(text) == "WALK");
  const PresheafPtr back = read_presheaf(text, walk);
  CHECK(back->description().values == e->description().values);
  CHECK(back->description().restriction == e->description().restriction);

  std::vector<std::vector<bool>> chosen = {{true}, {true, false}};
  const Subpresheaf a(back, chosen);
  const std::string sub_text = write_subpresheaf(a, "two_point");
  CHECK(referenced_presheaf(sub_text) == "two_point");
  CHECK(read_subpresheaf(sub_text, back, "two_point") == a);
  CHECK_THROWS_AS(read_subpresheaf(sub_text, back, "other"), Error);
}

TEST_CASE("analysis reports are deterministic and carry the verdicts") {
  const CategoryPtr walk = fixture_category("WALK");
  const SiteAnalysis analysis = analyze_site(trivial_topology(walk));
  const std::string once = write_analysis(analysis, "WALK", "trivial");
  const std::string twice =
      write_analysis(analyze_site(trivial_topology(walk)), "WALK", "trivial");
  CHECK(once == twice);

  const auto parsed = nlohmann::json::parse(once);
  CHECK(parsed["category"] == "WALK");
  CHECK(parsed["topology"] == "trivial");
  CHECK(parsed["boolean"] == false);
  CHECK(parsed["de_morgan"] == true);
  CHECK(parsed["groupoid"] == false);
  CHECK(parsed["right_ore"] == true);
  CHECK(parsed["subcanonical"] == true);
  CHECK(parsed["kept_objects"] == nlohmann::json::array({"a", "b"}));
  CHECK(parsed["witness"]["boolean"]["arrows"] ==
        nlohmann::json::array({"u"}));
  CHECK(parsed["booleanization"]["covers"]["b"].size() == 2);
  CHECK_FALSE(parsed["witness"].contains("de_morgan"));
}

TEST_CASE("reduced site reports") {
  const CategoryPtr walk = fixture_category("WALK");
  const std::string text =
      write_reduced_site(reduced_subcategory(jcov(walk)), "WALK");
  const auto parsed = nlohmann::json::parse(text);
  CHECK(parsed["ambient"] == "WALK");
  CHECK(parsed["kept_objects"] == nlohmann::json::array({"b"}));
  CHECK(parsed["category"]["objects"] == nlohmann::json::array({"b"}));
}
