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

#ifndef FINSITE_TOOLS_WORKSPACE_HPP_
#define FINSITE_TOOLS_WORKSPACE_HPP_

#include <map>
#include <string>

#include "finsite/io.hpp"

namespace finsite::tools {

/// Named artifact store behind the CLI. Category arguments are fixture names
/// or file paths; topology arguments are "trivial" / "dense" / "demorgan" /
/// "maximal", a fixture-relative path, or a topology file. Every artifact is
/// validated on load; names are unique per kind.
class Workspace {
 public:
  explicit Workspace(bool saturate) : saturate_(saturate) {}

  struct Named {
    std::string name;
    CategoryPtr category;
  };
  struct NamedTopology {
    std::string name;
    GrothendieckTopology topology;
  };

  /// Fixture name (case-insensitive) or path to a category file.
  Named category(const std::string& arg);

  /// Named construction or path to a topology file on `cat`.
  NamedTopology topology(const std::string& arg, const Named& cat);

  static std::string read_file(const std::string& path);

 private:
  bool saturate_;
  std::map<std::string, CategoryPtr> categories_;
};

}  // namespace finsite::tools

#endif  // FINSITE_TOOLS_WORKSPACE_HPP_
