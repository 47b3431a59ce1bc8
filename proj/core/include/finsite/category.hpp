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

#ifndef FINSITE_CATEGORY_HPP_
#define FINSITE_CATEGORY_HPP_

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finsite/error.hpp"

namespace finsite {

/// Dense indices into a validated category's object/arrow tables. Names are
/// the serialized identity; ids are per-category and never cross categories.
using ObjId = int;
using ArrId = int;

inline constexpr ArrId kNoArrow = -1;
inline constexpr ObjId kNoObject = -1;

/// Raw, unvalidated category data as it appears on disk. "compose" entries
/// read result = then ∘ first.
struct CategoryDescription {
  struct Arrow {
    std::string name;
    std::string dom;
    std::string cod;
  };
  struct Composite {
    std::string first;
    std::string then;
    std::string result;
  };

  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::map<std::string, std::string> identities;
  std::vector<Composite> compose;
};

/// A finite category given by a total composition table. Immutable after
/// validation; shared by reference. Objects and arrows are stored sorted by
/// name, so ids are canonical for one description.
class FiniteCategory {
 public:
  /// Checks totality of the table, dom/cod coherence, the identity laws and
  /// associativity, exhaustively. Throws Error with the witnessing arrows.
  static std::shared_ptr<const FiniteCategory> validate(
      const CategoryDescription& raw);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  const std::string& object_name(ObjId o) const { return objects_[o]; }
  const std::string& arrow_name(ArrId a) const { return arrows_[a].name; }
  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<ArrId> find_arrow(std::string_view name) const;

  ObjId dom(ArrId a) const { return arrows_[a].dom; }
  ObjId cod(ArrId a) const { return arrows_[a].cod; }
  ArrId identity(ObjId o) const { return identities_[o]; }
  bool is_identity(ArrId a) const;

  bool composable(ArrId first, ArrId then) const {
    return cod(first) == dom(then);
  }
  /// then ∘ first; defined exactly on composable pairs.
  ArrId compose(ArrId first, ArrId then) const {
    return table_[static_cast<size_t>(first) * arrows_.size() + then];
  }

  std::span<const ArrId> arrows_into(ObjId o) const { return into_[o]; }
  std::span<const ArrId> hom(ObjId from, ObjId to) const {
    return hom_[static_cast<size_t>(from) * objects_.size() + to];
  }

  /// Canonical (sorted) description; loading it back yields an equal category.
  CategoryDescription description() const;

 private:
  struct ArrowRec {
    std::string name;
    ObjId dom;
    ObjId cod;
  };

  FiniteCategory() = default;

  std::vector<std::string> objects_;
  std::vector<ArrowRec> arrows_;
  std::vector<ArrId> identities_;  // by object
  std::vector<ArrId> table_;       // arrow_count^2, kNoArrow off the diagonal
  std::vector<std::vector<ArrId>> into_;
  std::vector<std::vector<ArrId>> hom_;
};

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

/// Structural equality of the canonical descriptions. Identity (pointer)
/// equality is what the cross-category mismatch checks use.
bool operator==(const FiniteCategory& a, const FiniteCategory& b);

/// Same objects and arrow names, dom/cod swapped, composition transposed.
CategoryPtr opposite(const FiniteCategory& cat);

/// Every arrow has a two-sided inverse somewhere in the table.
bool is_groupoid(const FiniteCategory& cat);

/// Every cospan f: a→c, g: b→c completes to a commutative square
/// f ∘ h = g ∘ k for some h: d→a, k: d→b.
bool satisfies_right_ore(const FiniteCategory& cat);

}  // namespace finsite

#endif  // FINSITE_CATEGORY_HPP_
