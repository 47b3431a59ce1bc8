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

#ifndef FINSITE_ORACLE_HPP_
#define FINSITE_ORACLE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "finsite/reduct.hpp"

namespace finsite {

// Exhaustive cross-checks of every construction against brute-force
// enumeration, at desk scale. Each check compares a formula-based operation
// with an independently enumerated answer (largest disjoint sieve, all
// compatible assignments, intersections of enumerated topologies, ...), so a
// bug in either route shows up as a disagreement.

struct OracleCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample, or a short summary
};

struct OracleOptions {
  int bound = 16;  // cap on total sieves/elements for the enumerations
};

/// Runs the whole invariant suite against one category. Throws
/// Error(kTooLarge) when the sieve space exceeds the bound.
std::vector<OracleCheck> run_oracle(const CategoryPtr& cat,
                                    const OracleOptions& options = {});

/// The presheaves the enumeration-based checks quantify over: yoneda(c) for
/// every object plus a two-element constant presheaf.
std::vector<std::pair<std::string, PresheafPtr>> standard_presheaves(
    const CategoryPtr& cat);

}  // namespace finsite

#endif  // FINSITE_ORACLE_HPP_
