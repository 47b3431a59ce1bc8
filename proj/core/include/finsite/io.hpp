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

#ifndef FINSITE_IO_HPP_
#define FINSITE_IO_HPP_

#include <string>
#include <string_view>

#include "finsite/reduct.hpp"

namespace finsite {

/// Strict mode requires topology files to already satisfy the axioms;
/// Saturate treats the listed covers as a generating family.
enum class LoadMode { kStrict, kSaturate };

/// What kind of artifact a JSON document describes, decided by its keys.
enum class FileKind { kCategory, kTopology, kSieve, kPresheaf, kSubpresheaf };
FileKind classify_json(const std::string& text);

// All readers throw Error(kParseError) on malformed input; writers emit
// canonical (sorted, 2-space indented) JSON ending in a newline.

CategoryDescription read_category_description(const std::string& text);
std::string write_category(const FiniteCategory& cat);

/// The "category"/"presheaf" reference fields, for resolving before loading.
std::string referenced_category(const std::string& text);
std::string referenced_presheaf(const std::string& text);

GrothendieckTopology read_topology(const std::string& text, CategoryPtr cat,
                                   LoadMode mode);
std::string write_topology(const GrothendieckTopology& j,
                           std::string_view category_name);

Sieve read_sieve(const std::string& text, CategoryPtr cat);
std::string write_sieve(const Sieve& s);

PresheafPtr read_presheaf(const std::string& text, CategoryPtr cat);
std::string write_presheaf(const Presheaf& e, std::string_view category_name);

Subpresheaf read_subpresheaf(const std::string& text, PresheafPtr parent,
                             std::string_view presheaf_name);
std::string write_subpresheaf(const Subpresheaf& a,
                              std::string_view presheaf_name);

std::string write_analysis(const SiteAnalysis& analysis,
                           std::string_view category_name,
                           std::string_view topology_name);

std::string write_reduced_site(const ReducedSite& site,
                               std::string_view category_name);

}  // namespace finsite

#endif  // FINSITE_IO_HPP_
