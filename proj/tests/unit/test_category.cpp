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

#include <functional>

#include "finsite/io.hpp"
#include "testutil.hpp"

using namespace fstest;

namespace {

CategoryDescription walk_description() {
  return read_category_description(fixture_json("WALK"));
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::kParseError;
}

}  // namespace

TEST_CASE("walk fixture validates with explicit identities") {
  const CategoryPtr walk = fixture_category("WALK");
  CHECK(walk->object_count() == 2);
  CHECK(walk->arrow_count() == 3);
  const ArrId u = arr(walk, "u");
  CHECK(walk->dom(u) == obj(walk, "a"));
  CHECK(walk->cod(u) == obj(walk, "b"));
  CHECK(walk->compose(u, arr(walk, "id_b")) == u);
  CHECK(walk->compose(arr(walk, "id_a"), u) == u);
}

TEST_CASE("every fixture validates and the property checks are stable") {
  for (auto name : fixture_names()) {
    const CategoryPtr cat = fixture_category(name);
    CHECK(is_groupoid(*cat) == is_groupoid(*cat));
    CHECK(satisfies_right_ore(*cat) == satisfies_right_ore(*cat));
  }
}

TEST_CASE("missing composite names the pair") {
  CategoryDescription d = walk_description();
  std::erase_if(d.compose, [](const CategoryDescription::Composite& e) {
    return e.first == "u" && e.then == "id_b";
  });
  try {
    FiniteCategory::validate(d);
    FAIL("expected MissingComposite");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kMissingComposite);
    CHECK(std::string(e.what()).find("id_b") != std::string::npos);
    CHECK(std::string(e.what()).find("u") != std::string::npos);
  }
}

TEST_CASE("dom/cod mismatches are rejected") {
  CategoryDescription d = walk_description();

  SUBCASE("non-composable pair") {
    d.compose.push_back({"u", "u", "u"});
    CHECK(code_of([&] { FiniteCategory::validate(d); }) ==
          Errc::kDomCodMismatch);
  }
  SUBCASE("result with wrong endpoints") {
    for (auto& e : d.compose)
      if (e.first == "id_a" && e.then == "u") e.result = "id_b";
    CHECK(code_of([&] { FiniteCategory::validate(d); }) ==
          Errc::kDomCodMismatch);
  }
  SUBCASE("conflicting duplicate entries") {
    d.compose.push_back({"id_a", "id_a", "u"});
    CHECK(code_of([&] { FiniteCategory::validate(d); }) ==
          Errc::kDomCodMismatch);
  }
}

TEST_CASE("identity violations are rejected") {
  SUBCASE("missing identity") {
    CategoryDescription d = walk_description();
    d.identities.erase("a");
    CHECK(code_of([&] { FiniteCategory::validate(d); }) ==
          Errc::kIdentityViolation);
  }
  SUBCASE("identity law broken in the table") {
    CategoryDescription d;
    d.objects = {"x"};
    d.arrows = {{"e", "x", "x"}, {"t", "x", "x"}};
    d.identities = {{"x", "e"}};
    d.compose = {{"e", "e", "e"},
                 {"e", "t", "t"},
                 {"t", "e", "e"},  // e∘t should be t
                 {"t", "t", "t"}};
    try {
      FiniteCategory::validate(d);
      FAIL("expected IdentityViolation");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::kIdentityViolation);
      CHECK(std::string(e.what()).find("t") != std::string::npos);
    }
  }
}

TEST_CASE("associativity violations name the witnessing triple") {
  CategoryDescription d;
  d.objects = {"x"};
  d.arrows = {{"e", "x", "x"}, {"p", "x", "x"}, {"q", "x", "x"}};
  d.identities = {{"x", "e"}};
  // (p∘p)∘p = q∘p = e but p∘(p∘p) = p∘q = p
  d.compose = {{"e", "e", "e"}, {"e", "p", "p"}, {"e", "q", "q"},
               {"p", "e", "p"}, {"p", "p", "q"}, {"p", "q", "e"},
               {"q", "e", "q"}, {"q", "p", "p"}, {"q", "q", "q"}};
  try {
    FiniteCategory::validate(d);
    FAIL("expected AssociativityViolation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kAssociativityViolation);
    CHECK(std::string(e.what()).find("p") != std::string::npos);
  }
}

TEST_CASE("duplicate and empty names are parse errors") {
  CategoryDescription d = walk_description();
  SUBCASE("duplicate object") {
    d.objects.push_back("a");
    CHECK(code_of([&] { FiniteCategory::validate(d); }) == Errc::kParseError);
  }
  SUBCASE("unknown dom") {
    d.arrows.push_back({"w", "zzz", "b"});
    CHECK(code_of([&] { FiniteCategory::validate(d); }) == Errc::kParseError);
  }
}

TEST_CASE("the empty category is valid") {
  const auto cat = FiniteCategory::validate({});
  CHECK(cat->object_count() == 0);
  CHECK(is_groupoid(*cat));
  CHECK(satisfies_right_ore(*cat));
}

TEST_CASE("opposite swaps direction and is an involution") {
  const CategoryPtr walk = fixture_category("WALK");
  const CategoryPtr op = opposite(*walk);
  const ArrId u = arr(op, "u");
  CHECK(op->dom(u) == obj(op, "b"));
  CHECK(op->cod(u) == obj(op, "a"));
  for (auto name : fixture_names()) {
    const CategoryPtr cat = fixture_category(name);
    CHECK(*opposite(*opposite(*cat)) == *cat);
  }
}

TEST_CASE("opposite of COSPAN is SPAN, and Z2 is self-dual") {
  CHECK(*opposite(*fixture_category("COSPAN")) == *fixture_category("SPAN"));
  CHECK(*opposite(*fixture_category("SPAN")) == *fixture_category("COSPAN"));
  CHECK(*opposite(*fixture_category("Z2")) == *fixture_category("Z2"));
}

TEST_CASE("groupoid verdicts across the corpus") {
  CHECK(is_groupoid(*fixture_category("Z2")));
  CHECK(is_groupoid(*fixture_category("TERM")));
  CHECK(is_groupoid(*fixture_category("DISC2")));
  CHECK_FALSE(is_groupoid(*fixture_category("WALK")));
  CHECK_FALSE(is_groupoid(*fixture_category("SPAN")));
  CHECK_FALSE(is_groupoid(*fixture_category("COSPAN")));
  CHECK_FALSE(is_groupoid(*fixture_category("M2")));
  CHECK_FALSE(is_groupoid(*fixture_category("PAIR")));
}

TEST_CASE("right Ore verdicts across the corpus") {
  CHECK(satisfies_right_ore(*fixture_category("WALK")));
  CHECK(satisfies_right_ore(*fixture_category("SPAN")));
  CHECK(satisfies_right_ore(*fixture_category("Z2")));
  CHECK(satisfies_right_ore(*fixture_category("M2")));
  CHECK(satisfies_right_ore(*fixture_category("TERM")));
  CHECK(satisfies_right_ore(*fixture_category("DISC2")));
  CHECK_FALSE(satisfies_right_ore(*fixture_category("COSPAN")));
  CHECK_FALSE(satisfies_right_ore(*fixture_category("PAIR")));
}

TEST_CASE("groupoids complete cospans") {
  for (auto name : fixture_names()) {
    const CategoryPtr cat = fixture_category(name);
    if (is_groupoid(*cat)) CHECK(satisfies_right_ore(*cat));
  }
}
