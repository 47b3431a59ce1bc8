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

#ifndef FINSITE_PRESHEAF_HPP_
#define FINSITE_PRESHEAF_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finsite/topology.hpp"

namespace finsite {

/// A contravariant finite-set-valued functor: a finite set of named elements
/// per object and, for each arrow f: a→b, a restriction map E(b)→E(a).
/// Element names are scoped to (presheaf, object).
class Presheaf {
 public:
  struct Description {
    std::map<std::string, std::vector<std::string>> values;
    // arrow name -> (element at cod -> element at dom)
    std::map<std::string, std::map<std::string, std::string>> restriction;
  };

  /// Checks identity and (contravariant) functoriality laws exhaustively.
  static std::shared_ptr<const Presheaf> validate(CategoryPtr cat,
                                                  const Description& raw);

  /// Hom(−, c) with precomposition as restriction.
  static std::shared_ptr<const Presheaf> yoneda(CategoryPtr cat, ObjId c);

  /// Same element set everywhere, identity restrictions.
  static std::shared_ptr<const Presheaf> constant(
      CategoryPtr cat, std::vector<std::string> elements);

  const CategoryPtr& category() const { return cat_; }
  int value_count(ObjId o) const {
    return static_cast<int>(values_[o].size());
  }
  const std::string& element_name(ObjId o, int e) const {
    return values_[o][e];
  }
  std::optional<int> find_element(ObjId o, std::string_view name) const;

  /// E(f): E(cod f) → E(dom f).
  int restrict_along(ArrId f, int element_at_cod) const {
    return restriction_[f][element_at_cod];
  }

  int total_elements() const;
  Description description() const;

 private:
  Presheaf() = default;

  CategoryPtr cat_;
  std::vector<std::vector<std::string>> values_;  // per object, sorted
  std::vector<std::vector<int>> restriction_;     // per arrow
};

using PresheafPtr = std::shared_ptr<const Presheaf>;

/// Object-indexed subsets of a presheaf's values, closed under restriction.
class Subpresheaf {
 public:
  Subpresheaf(PresheafPtr parent, std::vector<std::vector<bool>> chosen);

  static Subpresheaf empty(PresheafPtr parent);
  static Subpresheaf full(PresheafPtr parent);

  const PresheafPtr& parent() const { return parent_; }
  bool contains(ObjId o, int e) const { return chosen_[o][e]; }
  int size(ObjId o) const;
  int total_size() const;
  bool is_full() const;
  bool is_empty() const;
  bool subset_of(const Subpresheaf& other) const;

  friend bool operator==(const Subpresheaf& a, const Subpresheaf& b) {
    return a.chosen_ == b.chosen_;
  }
  friend bool operator<(const Subpresheaf& a, const Subpresheaf& b) {
    return a.chosen_ < b.chosen_;
  }

 private:
  PresheafPtr parent_;
  std::vector<std::vector<bool>> chosen_;
};

Subpresheaf sub_meet(const Subpresheaf& a, const Subpresheaf& b);
Subpresheaf sub_join(const Subpresheaf& a, const Subpresheaf& b);

/// (A ⇒ B)(c) = {e | every restriction of e landing in A lands in B}.
Subpresheaf sub_implies(const Subpresheaf& a, const Subpresheaf& b);

/// (¬A)(c) = {e | no restriction of e lands in A}; the largest subpresheaf
/// disjoint from A.
Subpresheaf sub_not(const Subpresheaf& a);

/// {f: d→c | E(f)(e) ∈ A(d)}; maximal exactly when e ∈ A(c).
Sieve element_sieve(const Subpresheaf& a, ObjId c, int element);

/// closure(A)(c) = {e | element_sieve(A, c, e) covers}; the universal closure
/// operator of J on subobjects.
Subpresheaf close_subobject(const GrothendieckTopology& j, const Subpresheaf& a);
bool is_dense_mono(const GrothendieckTopology& j, const Subpresheaf& a);

/// Least topology above J for which A ↪ E is dense: J extended by all the
/// element sieves of A.
GrothendieckTopology densifying_topology(const GrothendieckTopology& j,
                                         const Subpresheaf& a);

/// Pseudocomplement of a J-closed A inside the lattice of J-closed
/// subobjects: A ⇒ closure(∅). Requires A closed (kNotClosed otherwise).
/// Coincides with sub_not(A) whenever J is below the dense topology.
Subpresheaf closed_sub_not(const GrothendieckTopology& j, const Subpresheaf& a);

/// All restriction-closed pointwise subsets, canonically ordered. Throws
/// Error(kTooLarge) past the element bound.
std::vector<Subpresheaf> enumerate_subpresheaves(const PresheafPtr& parent,
                                                 int max_total_elements = 16);

/// The canonical bijection between sieves on c and subpresheaves of
/// yoneda(c). `yc` must be yoneda(cat, c) (verified by element names).
Subpresheaf subpresheaf_from_sieve(const PresheafPtr& yc, const Sieve& s);
Sieve sieve_from_subpresheaf(const Subpresheaf& sub_of_yc, ObjId c);

}  // namespace finsite

#endif  // FINSITE_PRESHEAF_HPP_
