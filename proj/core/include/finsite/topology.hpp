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

#ifndef FINSITE_TOPOLOGY_HPP_
#define FINSITE_TOPOLOGY_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "finsite/sieve.hpp"

namespace finsite {

using CoverSets = std::vector<std::set<Sieve>>;  // indexed by object

/// First axiom failure found in a cover assignment, with the witnessing
/// sieves/arrow. Upward closure follows from the three axioms but is checked
/// separately because covers are stored extensionally.
struct TopologyViolation {
  enum class Kind { kMaximality, kStability, kTransitivity, kUpwardClosure };

  Kind kind;
  ObjId object;
  std::optional<Sieve> sieve;
  std::optional<Sieve> other;
  std::optional<ArrId> arrow;

  std::string describe(const FiniteCategory& cat) const;
};

std::optional<TopologyViolation> check_topology_axioms(const CategoryPtr& cat,
                                                       const CoverSets& covers);

/// Covering sieves per object, stored extensionally. Instances built by the
/// constructors below always satisfy the axioms; `checked` is for covers read
/// from files.
class GrothendieckTopology {
 public:
  /// Runs the axiom checker; throws Error(kAxiomViolation) with the witness.
  static GrothendieckTopology checked(CategoryPtr cat, CoverSets covers);

  const CategoryPtr& category() const { return cat_; }
  const std::set<Sieve>& covers(ObjId o) const { return covers_[o]; }
  bool covers_sieve(const Sieve& s) const;
  const CoverSets& cover_sets() const { return covers_; }
  int total_covers() const;

  friend bool operator==(const GrothendieckTopology& a,
                         const GrothendieckTopology& b) {
    return a.covers_ == b.covers_;
  }

 private:
  friend GrothendieckTopology make_topology_unchecked(CategoryPtr, CoverSets);
  GrothendieckTopology(CategoryPtr cat, CoverSets covers);

  CategoryPtr cat_;
  CoverSets covers_;
};

/// Only the maximal sieves cover; the minimum topology.
GrothendieckTopology trivial_topology(CategoryPtr cat);

/// Least topology whose covers contain the family: saturates under
/// stability, transitivity and upward closure to the fixpoint over the
/// finite sieve space, in that pass order.
GrothendieckTopology generate_topology(CategoryPtr cat,
                                       std::span<const Sieve> family);

/// Covering sieves are exactly the stably non-empty ones.
GrothendieckTopology dense_topology(CategoryPtr cat);

/// Generated by the sieves ¬R ∪ ¬¬R over all sieves R of the category;
/// always below the dense topology.
GrothendieckTopology de_morgan_topology(CategoryPtr cat);

/// Per-object inclusion of cover sets.
bool topology_leq(const GrothendieckTopology& a, const GrothendieckTopology& b);

/// Least upper bound: saturation of the united covers.
GrothendieckTopology topology_join(const GrothendieckTopology& a,
                                   const GrothendieckTopology& b);

/// Per-object intersection of cover sets (always a topology).
GrothendieckTopology topology_meet(const GrothendieckTopology& a,
                                   const GrothendieckTopology& b);

/// S̄ = {f | f∗(S) covers}; the universal closure operator of J on sieves.
Sieve close_sieve(const GrothendieckTopology& j, const Sieve& s);
bool is_closed(const GrothendieckTopology& j, const Sieve& s);

/// The canonical map Hom(c, e) → {compatible families on S} is a bijection
/// for every object e. Compatible: x_{f∘g} = x_f ∘ g for all f in S and all
/// g into dom f.
bool effective_epimorphic(const Sieve& s);

/// effective_epimorphic holds for every pullback of s.
bool universally_effective_epimorphic(const Sieve& s);

/// Every covering sieve is effective-epimorphic. Covers are pullback-closed,
/// so this coincides with requiring the universal form.
bool is_subcanonical(const GrothendieckTopology& j);

/// All cover assignments passing the axiom checker, canonically ordered.
/// Throws Error(kTooLarge) when the total sieve count exceeds the bound.
std::vector<GrothendieckTopology> enumerate_topologies(
    CategoryPtr cat, int max_total_sieves = 16);

int total_sieve_count(const CategoryPtr& cat);

}  // namespace finsite

#endif  // FINSITE_TOPOLOGY_HPP_
