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

#ifndef FINSITE_SIEVE_HPP_
#define FINSITE_SIEVE_HPP_

#include <compare>
#include <span>
#include <vector>

#include "finsite/category.hpp"

namespace finsite {

/// A set of arrows with common codomain, closed under precomposition. Stored
/// extensionally as a sorted id vector; the constructor enforces both
/// invariants. Ordering is canonical: fewer arrows first, then by the (name-
/// sorted) arrow id sequence.
class Sieve {
 public:
  Sieve(CategoryPtr cat, ObjId cod, std::vector<ArrId> arrows);

  static Sieve empty(CategoryPtr cat, ObjId cod);
  static Sieve maximal(CategoryPtr cat, ObjId cod);

  const CategoryPtr& category() const { return cat_; }
  ObjId cod() const { return cod_; }
  std::span<const ArrId> arrows() const { return arrows_; }
  int size() const { return static_cast<int>(arrows_.size()); }

  bool contains(ArrId a) const;
  bool is_empty() const { return arrows_.empty(); }
  /// A sieve containing the identity is the maximal sieve; asserted, never
  /// special-cased.
  bool is_maximal() const;
  bool subset_of(const Sieve& other) const;

  friend bool operator==(const Sieve& a, const Sieve& b) {
    return a.cod_ == b.cod_ && a.arrows_ == b.arrows_;
  }
  friend bool operator<(const Sieve& a, const Sieve& b) {
    if (a.cod_ != b.cod_) return a.cod_ < b.cod_;
    if (a.arrows_.size() != b.arrows_.size())
      return a.arrows_.size() < b.arrows_.size();
    return a.arrows_ < b.arrows_;
  }

 private:
  CategoryPtr cat_;
  ObjId cod_;
  std::vector<ArrId> arrows_;  // sorted, unique
};

/// Smallest sieve on `cod` containing the generators: one pass over all
/// f ∘ g with f a generator already reaches the fixpoint, because any
/// precomposite of a composite is again of that form.
Sieve generate_sieve(CategoryPtr cat, ObjId cod,
                     std::span<const ArrId> generators);

/// f∗(S) = {g | cod g = dom f, f ∘ g ∈ S}, a sieve on dom f.
Sieve pullback_sieve(const Sieve& s, ArrId along);

Sieve sieve_union(const Sieve& a, const Sieve& b);
Sieve sieve_intersection(const Sieve& a, const Sieve& b);

/// Pseudocomplement: ¬R = {f | f∗(R) = ∅}, the largest sieve disjoint
/// from R.
Sieve sieve_not(const Sieve& r);

/// ¬¬R = {f | f∗(R) is stably non-empty}; always contains R.
Sieve sieve_not_not(const Sieve& r);

/// Heyting implication: S ⇒ T = {f | f∗(S) ⊆ f∗(T)}, the largest U with
/// U ∩ S ⊆ T.
Sieve sieve_implies(const Sieve& s, const Sieve& t);

/// Every pullback of s is non-empty (in particular s itself).
bool stably_nonempty(const Sieve& s);

/// All precomposition-closed subsets of the arrows into `cod`, in canonical
/// order. Includes the empty and the maximal sieve.
std::vector<Sieve> enumerate_sieves(CategoryPtr cat, ObjId cod);

}  // namespace finsite

#endif  // FINSITE_SIEVE_HPP_
