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

#ifndef FINSITE_FIXTURES_HPP_
#define FINSITE_FIXTURES_HPP_

#include <span>
#include <string>
#include <string_view>

#include "finsite/category.hpp"

namespace finsite {

// The bundled desk-scale corpus, compiled in from data/fixtures at build
// time: WALK, SPAN, COSPAN, Z2, M2, TERM, DISC2, PAIR.

std::span<const std::string_view> fixture_names();
bool is_fixture_name(std::string_view name);  // case-insensitive

/// Raw file bytes; throws Error(kParseError) for unknown names.
const std::string& fixture_json(std::string_view name);

/// Validated category, cached so repeated lookups share one identity.
CategoryPtr fixture_category(std::string_view name);

}  // namespace finsite

#endif  // FINSITE_FIXTURES_HPP_
