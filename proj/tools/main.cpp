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

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "finsite/fixtures.hpp"
#include "finsite/io.hpp"
#include "finsite/oracle.hpp"
#include "workspace.hpp"

namespace {

using namespace finsite;
using tools::Workspace;

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;

int list_fixtures() {
  nlohmann::json out = nlohmann::json::array();
  for (auto name : fixture_names()) {
    const CategoryPtr cat = fixture_category(name);
    out.push_back({{"arrows", cat->arrow_count()},
                   {"name", std::string(name)},
                   {"objects", cat->object_count()}});
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

/// `validate` prints a one-line verdict; a failed validation is exit 1 with
/// the first witness in the message.
int cmd_validate(Workspace& ws, const std::string& path,
                 const std::string& category_arg,
                 const std::string& presheaf_arg, bool saturate) {
  const std::string text = Workspace::read_file(path);
  const FileKind kind = classify_json(text);

  auto context_category = [&](const std::string& referenced) {
    return ws.category(category_arg.empty() ? referenced : category_arg);
  };

  try {
    switch (kind) {
      case FileKind::kCategory: {
        const auto cat =
            FiniteCategory::validate(read_category_description(text));
        std::cout << "valid: " << cat->object_count() << " objects, "
                  << cat->arrow_count() << " arrows\n";
        break;
      }
      case FileKind::kTopology: {
        const auto cat = context_category(referenced_category(text));
        const auto j = read_topology(
            text, cat.category,
            saturate ? LoadMode::kSaturate : LoadMode::kStrict);
        std::cout << "valid: topology on " << cat.name << ", "
                  << j.total_covers() << " covering sieves\n";
        break;
      }
      case FileKind::kSieve: {
        if (category_arg.empty())
          throw Error(Errc::kParseError,
                      "sieve files need --category to name their category");
        const auto cat = ws.category(category_arg);
        const auto s = read_sieve(text, cat.category);
        std::cout << "valid: sieve on "
                  << cat.category->object_name(s.cod()) << ", " << s.size()
                  << " arrows\n";
        break;
      }
      case FileKind::kPresheaf: {
        const auto cat = context_category(referenced_category(text));
        const auto e = read_presheaf(text, cat.category);
        std::cout << "valid: presheaf on " << cat.name << ", "
                  << e->total_elements() << " elements\n";
        break;
      }
      case FileKind::kSubpresheaf: {
        if (presheaf_arg.empty())
          throw Error(Errc::kParseError,
                      "subpresheaf files need --presheaf <file>");
        const std::string parent_text = Workspace::read_file(presheaf_arg);
        const auto cat = context_category(referenced_category(parent_text));
        const auto parent = read_presheaf(parent_text, cat.category);
        const std::string parent_name =
            std::filesystem::path(presheaf_arg).stem().string();
        const auto a = read_subpresheaf(text, parent, parent_name);
        std::cout << "valid: subpresheaf with " << a.total_size() << " of "
                  << parent->total_elements() << " elements\n";
        break;
      }
    }
  } catch (const Error& e) {
    if (e.code() == Errc::kParseError) throw;
    std::cout << "invalid: " << e.what() << "\n";
    return kExitVerdict;
  }
  return kExitOk;
}

int cmd_analyze(Workspace& ws, const std::string& category_arg,
                const std::string& topology_arg) {
  const auto cat = ws.category(category_arg);
  const auto named = ws.topology(topology_arg, cat);
  std::cout << write_analysis(analyze_site(named.topology), cat.name,
                              named.name);
  return kExitOk;
}

int cmd_completion(Workspace& ws, const std::string& category_arg,
                   const std::string& topology_arg, bool boolean_form) {
  const auto cat = ws.category(category_arg);
  const auto named = ws.topology(topology_arg, cat);
  const GrothendieckTopology result = boolean_form
                                          ? booleanization(named.topology)
                                          : demorganization(named.topology);
  std::cout << write_topology(result, cat.name);
  return kExitOk;
}

int cmd_reduce(Workspace& ws, const std::string& category_arg,
               const std::string& topology_arg) {
  const auto cat = ws.category(category_arg);
  const auto named = ws.topology(topology_arg, cat);
  std::cout << write_reduced_site(reduced_subcategory(named.topology),
                                  cat.name);
  return kExitOk;
}

int cmd_closure(Workspace& ws, const std::string& category_arg,
                const std::string& topology_arg, const std::string& sieve_path,
                const std::string& presheaf_path, const std::string& sub_path) {
  const auto cat = ws.category(category_arg);
  const auto named = ws.topology(topology_arg, cat);
  if (!sieve_path.empty()) {
    const Sieve s =
        read_sieve(Workspace::read_file(sieve_path), cat.category);
    std::cout << write_sieve(close_sieve(named.topology, s));
    return kExitOk;
  }
  const std::string parent_text = Workspace::read_file(presheaf_path);
  const std::string referenced = referenced_category(parent_text);
  if (referenced != cat.name)
    throw Error(Errc::kParseError, "presheaf file references category '" +
                                       referenced + "', expected '" +
                                       cat.name + "'");
  const auto parent = read_presheaf(parent_text, cat.category);
  const std::string parent_name =
      std::filesystem::path(presheaf_path).stem().string();
  const Subpresheaf a =
      read_subpresheaf(Workspace::read_file(sub_path), parent, parent_name);
  std::cout << write_subpresheaf(close_subobject(named.topology, a),
                                 parent_name);
  return kExitOk;
}

int cmd_subcanonical(Workspace& ws, const std::string& category_arg,
                     const std::string& topology_arg) {
  const auto cat = ws.category(category_arg);
  const auto named = ws.topology(topology_arg, cat);
  nlohmann::json out{{"category", cat.name},
                     {"topology", named.name},
                     {"subcanonical", true}};
  bool verdict = true;
  for (ObjId c = 0; c < cat.category->object_count() && verdict; ++c)
    for (const Sieve& s : named.topology.covers(c))
      if (!effective_epimorphic(s)) {
        verdict = false;
        nlohmann::json arrows = nlohmann::json::array();
        for (ArrId a : s.arrows())
          arrows.push_back(cat.category->arrow_name(a));
        out["subcanonical"] = false;
        out["witness"] = {{"arrows", std::move(arrows)},
                          {"cod", cat.category->object_name(s.cod())}};
        break;
      }
  std::cout << out.dump(2) << "\n";
  return verdict ? kExitOk : kExitVerdict;
}

int cmd_oracle(Workspace& ws, const std::string& category_arg, int bound) {
  const auto cat = ws.category(category_arg);
  const auto checks = run_oracle(cat.category, OracleOptions{bound});
  int failed = 0;
  for (const auto& check : checks) {
    if (check.passed) {
      std::cout << "PASS " << check.name;
      if (check.detail.rfind("ok: ", 0) == 0)
        std::cout << " (" << check.detail.substr(4) << ")";
      std::cout << "\n";
    } else {
      ++failed;
      std::cout << "FAIL " << check.name << ": " << check.detail << "\n";
    }
  }
  std::cout << "oracle: " << checks.size() << " checks, " << failed
            << " failed\n";
  return failed == 0 ? kExitOk : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finsite — a calculus for finite sites: sieves, Grothendieck "
               "topologies, presheaves, Boolean and De Morgan verdicts"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  bool saturate = false;
  int bound = 16;
  bool show_fixtures = false;
  app.add_flag("--saturate", saturate,
               "saturate topology files instead of requiring the axioms");
  app.add_option("--bound", bound, "size cap for the enumeration oracle")
      ->capture_default_str();
  app.add_flag("--fixtures", show_fixtures, "list the bundled corpus");

  std::string path, category_arg, topology_arg, presheaf_arg, sieve_arg,
      sub_arg;

  auto* validate = app.add_subcommand("validate", "validate a JSON artifact");
  validate->add_option("path", path, "file to validate")->required();
  validate->add_option("--category", category_arg,
                       "category for artifacts that reference one");
  validate->add_option("--presheaf", presheaf_arg,
                       "presheaf file for subpresheaf artifacts");

  auto* analyze =
      app.add_subcommand("analyze", "full report for a site (C, J)");
  analyze->add_option("category", category_arg)->required();
  analyze->add_option("topology", topology_arg);

  auto* booleanize =
      app.add_subcommand("booleanize", "topology of the Booleanization");
  booleanize->add_option("category", category_arg)->required();
  booleanize->add_option("topology", topology_arg);

  auto* demorganize =
      app.add_subcommand("demorganize", "topology of the DeMorganization");
  demorganize->add_option("category", category_arg)->required();
  demorganize->add_option("topology", topology_arg);

  auto* reduce = app.add_subcommand("reduce", "reduced site of (C, J)");
  reduce->add_option("category", category_arg)->required();
  reduce->add_option("topology", topology_arg);

  auto* closure =
      app.add_subcommand("closure", "close a sieve or a subpresheaf");
  closure->add_option("category", category_arg)->required();
  closure->add_option("topology", topology_arg);
  auto* sieve_opt = closure->add_option("--sieve", sieve_arg, "sieve file");
  closure->add_option("--presheaf", presheaf_arg, "presheaf file");
  auto* sub_opt =
      closure->add_option("--sub", sub_arg, "subpresheaf file")
          ->needs(closure->get_option("--presheaf"));
  sub_opt->excludes(sieve_opt);

  auto* subcanonical =
      app.add_subcommand("subcanonical", "decide subcanonicity of (C, J)");
  subcanonical->add_option("category", category_arg)->required();
  subcanonical->add_option("topology", topology_arg);

  auto* oracle = app.add_subcommand(
      "oracle", "run every enumeration-based invariant against a category");
  oracle->add_option("category", category_arg)->required();

  auto* fixtures = app.add_subcommand("fixtures", "list the bundled corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Workspace ws(saturate);
    if (show_fixtures || fixtures->parsed()) return list_fixtures();
    if (validate->parsed())
      return cmd_validate(ws, path, category_arg, presheaf_arg, saturate);
    if (analyze->parsed()) return cmd_analyze(ws, category_arg, topology_arg);
    if (booleanize->parsed())
      return cmd_completion(ws, category_arg, topology_arg, true);
    if (demorganize->parsed())
      return cmd_completion(ws, category_arg, topology_arg, false);
    if (reduce->parsed()) return cmd_reduce(ws, category_arg, topology_arg);
    if (closure->parsed()) {
      if (sieve_arg.empty() && sub_arg.empty())
        throw Error(Errc::kParseError,
                    "closure needs --sieve or --presheaf/--sub");
      return cmd_closure(ws, category_arg, topology_arg, sieve_arg,
                         presheaf_arg, sub_arg);
    }
    if (subcanonical->parsed())
      return cmd_subcanonical(ws, category_arg, topology_arg);
    if (oracle->parsed()) return cmd_oracle(ws, category_arg, bound);
    std::cout << app.help();
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool usage =
        e.code() == Errc::kParseError || e.code() == Errc::kTooLarge;
    return usage ? kExitUsage : kExitVerdict;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerdict;
  }
}
