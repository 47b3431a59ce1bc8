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

#include "workspace.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "finsite/fixtures.hpp"

namespace finsite::tools {

std::string Workspace::read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::kParseError, "cannot read file '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Workspace::Named Workspace::category(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    const std::string name = std::filesystem::path(arg).stem().string();
    auto it = categories_.find(name);
    if (it != categories_.end()) return {name, it->second};
    auto cat = FiniteCategory::validate(
        read_category_description(read_file(arg)));
    categories_.emplace(name, cat);
    return {name, cat};
  }
  if (is_fixture_name(arg)) {
    std::string upper = arg;
    for (char& c : upper) c = static_cast<char>(std::toupper(c));
    return {upper, fixture_category(arg)};
  }
  throw Error(Errc::kParseError,
              "'" + arg + "' is neither a file nor a bundled fixture");
}

Workspace::NamedTopology Workspace::topology(const std::string& arg,
                                             const Named& cat) {
  if (arg.empty() || arg == "trivial")
    return {"trivial", trivial_topology(cat.category)};
  if (arg == "dense") return {"dense", dense_topology(cat.category)};
  if (arg == "demorgan") return {"demorgan", de_morgan_topology(cat.category)};
  if (arg == "maximal") {
    std::vector<Sieve> family;
    for (ObjId c = 0; c < cat.category->object_count(); ++c)
      family.push_back(Sieve::empty(cat.category, c));
    return {"maximal", generate_topology(cat.category, family)};
  }
  if (!std::filesystem::exists(arg))
    throw Error(Errc::kParseError,
                "'" + arg +
                    "' is neither a topology file nor one of "
                    "trivial/dense/demorgan/maximal");
  const std::string text = read_file(arg);
  const std::string referenced = referenced_category(text);
  if (referenced != cat.name)
    throw Error(Errc::kParseError, "topology file references category '" +
                                       referenced + "', expected '" +
                                       cat.name + "'");
  const LoadMode mode = saturate_ ? LoadMode::kSaturate : LoadMode::kStrict;
  return {std::filesystem::path(arg).stem().string(),
          read_topology(text, cat.category, mode)};
}

}  // namespace finsite::tools
