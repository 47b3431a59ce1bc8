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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "finsite/fixtures.hpp"
#include "finsite/io.hpp"
#include "testutil.hpp"

namespace {

using namespace fstest;
namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("finsite_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_scratch(const std::string& name, const std::string& text) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

RunResult run_cli(const std::string& args) {
  const fs::path out = scratch_dir() / "stdout.txt";
  const fs::path err = scratch_dir() / "stderr.txt";
  const std::string cmd = std::string(FINSITE_CLI_PATH) + " " + args + " >" +
                          out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("fixtures command lists the corpus") {
  const RunResult r = run_cli("fixtures");
  REQUIRE(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.out);
  REQUIRE(parsed.size() == 8);
  CHECK(parsed[0]["name"] == "WALK");
  CHECK(parsed[0]["objects"] == 2);
  CHECK(parsed[0]["arrows"] == 3);
  CHECK(parsed[7]["name"] == "PAIR");
}

TEST_CASE("validate prints a verdict and exits accordingly") {
  const auto walk = write_scratch("walk.json", fixture_json("WALK"));
  const RunResult ok = run_cli("validate " + walk.string());
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "valid: 2 objects, 3 arrows\n");

  // delete the id_b∘u entry
  auto broken = nlohmann::json::parse(fixture_json("WALK"));
  auto& compose = broken["compose"];
  for (auto it = compose.begin(); it != compose.end(); ++it)
    if ((*it)["first"] == "u") {
      compose.erase(it);
      break;
    }
  const auto path = write_scratch("broken.json", broken.dump());
  const RunResult bad = run_cli("validate " + path.string());
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("invalid:") == 0);
  CHECK(bad.out.find("MissingComposite") != std::string::npos);
  CHECK(bad.out.find("id_b") != std::string::npos);
  CHECK(bad.out.find("u") != std::string::npos);

  const auto garbage = write_scratch("garbage.json", "][");
  CHECK(run_cli("validate " + garbage.string()).exit_code == 2);
}

TEST_CASE("validate handles topology files in both modes") {
  const std::string unsaturated = R"({
    "category": "WALK",
    "covers": {
      "a": [[], ["id_a"]],
      "b": [["u"], ["id_b", "u"]]
    }
  })";
  const auto path = write_scratch("unsaturated.json", unsaturated);
  const RunResult strict = run_cli("validate " + path.string());
  CHECK(strict.exit_code == 1);
  CHECK(strict.out.find("transitivity") != std::string::npos);

  const RunResult saturated =
      run_cli("--saturate validate " + path.string());
  CHECK(saturated.exit_code == 0);
  CHECK(saturated.out.find("valid: topology on WALK") == 0);
}

TEST_CASE("analyze emits the full report, deterministically") {
  const RunResult first = run_cli("analyze WALK");
  REQUIRE(first.exit_code == 0);
  const RunResult second = run_cli("analyze WALK");
  CHECK(first.out == second.out);

  const auto parsed = nlohmann::json::parse(first.out);
  CHECK(parsed["boolean"] == false);
  CHECK(parsed["de_morgan"] == true);
  CHECK(parsed["witness"]["boolean"]["arrows"] ==
        nlohmann::json::array({"u"}));

  const auto cospan = nlohmann::json::parse(run_cli("analyze COSPAN").out);
  CHECK(cospan["de_morgan"] == false);
  CHECK(cospan["witness"]["de_morgan"]["arrows"] ==
        nlohmann::json::array({"f"}));
  CHECK(cospan["witness"]["de_morgan"]["cod"] == "c");

  const auto z2 = nlohmann::json::parse(run_cli("analyze Z2").out);
  CHECK(z2["boolean"] == true);
  CHECK(z2["de_morgan"] == true);
  CHECK(z2["subcanonical"] == true);
}

TEST_CASE("booleanize and demorganize print topologies") {
  const RunResult r = run_cli("booleanize WALK");
  REQUIRE(r.exit_code == 0);
  const CategoryPtr walk = fixture_category("WALK");
  CHECK(r.out == write_topology(dense_topology(walk), "WALK"));

  const RunResult m = run_cli("demorganize COSPAN");
  REQUIRE(m.exit_code == 0);
  const CategoryPtr cospan = fixture_category("COSPAN");
  CHECK(m.out == write_topology(de_morgan_topology(cospan), "COSPAN"));
}

TEST_CASE("reduce reports kept objects") {
  const auto jcov_path =
      write_scratch("walk_jcov.json",
                    write_topology(jcov(fixture_category("WALK")), "WALK"));
  const RunResult r = run_cli("reduce WALK " + jcov_path.string());
  REQUIRE(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed["kept_objects"] == nlohmann::json::array({"b"}));
}

TEST_CASE("closure closes sieves and subpresheaves") {
  const CategoryPtr walk = fixture_category("WALK");
  const auto jcov_path = write_scratch(
      "walk_jcov2.json", write_topology(jcov(walk), "WALK"));
  const auto sieve_path = write_scratch(
      "empty_b.json", write_sieve(Sieve::empty(walk, obj(walk, "b"))));

  const RunResult r = run_cli("closure WALK " + jcov_path.string() +
                              " --sieve " + sieve_path.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == write_sieve(sieve(walk, "b", {"u"})));

  const PresheafPtr yb = Presheaf::yoneda(walk, obj(walk, "b"));
  const auto presheaf_path =
      write_scratch("yb.json", write_presheaf(*yb, "WALK"));
  const auto sub_path = write_scratch(
      "usub.json",
      write_subpresheaf(subpresheaf_from_sieve(yb, sieve(walk, "b", {"u"})),
                        "yb"));
  const RunResult s =
      run_cli("closure WALK dense --presheaf " + presheaf_path.string() +
              " --sub " + sub_path.string());
  REQUIRE(s.exit_code == 0);
  const auto parsed = nlohmann::json::parse(s.out);
  CHECK(parsed["chosen"]["b"] == nlohmann::json::array({"id_b"}));
}

TEST_CASE("subcanonical exit codes reflect the verdict") {
  CHECK(run_cli("subcanonical WALK").exit_code == 0);
  const RunResult r = run_cli("subcanonical WALK dense");
  CHECK(r.exit_code == 1);
  const auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed["subcanonical"] == false);
  CHECK(parsed["witness"]["arrows"] == nlohmann::json::array({"u"}));
}

TEST_CASE("oracle prints one line per invariant") {
  const RunResult r = run_cli("oracle TERM");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("PASS fincat.groupoid_implies_right_ore") !=
        std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("oracle: 28 checks, 0 failed") != std::string::npos);

  CHECK(run_cli("oracle WALK --bound 1").exit_code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("analyze NOSUCH").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
