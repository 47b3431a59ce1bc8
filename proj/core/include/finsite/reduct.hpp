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

#ifndef FINSITE_REDUCT_HPP_
#define FINSITE_REDUCT_HPP_

#include <optional>

#include "finsite/presheaf.hpp"

namespace finsite {

/// A full subcategory as its own validated category plus the id maps back
/// and forth. Arrow/object names are shared with the ambient category.
struct FullSubcategory {
  CategoryPtr ambient;
  CategoryPtr category;
  std::vector<ObjId> kept;  // ambient ids, ascending

  std::vector<ObjId> obj_to_ambient;   // by sub id
  std::vector<ArrId> arr_to_ambient;   // by sub id
  std::vector<ObjId> obj_from_ambient; // kNoObject when dropped
  std::vector<ArrId> arr_from_ambient; // kNoArrow when dropped

  bool keeps_object(ObjId ambient_obj) const {
    return obj_from_ambient[ambient_obj] != kNoObject;
  }
  /// Throws Error(kObjectNotInSubcategory).
  ObjId sub_object(ObjId ambient_obj) const;
};

FullSubcategory full_subcategory(CategoryPtr cat,
                                 std::span<const ObjId> objects);

struct ReducedSite {
  FullSubcategory site;
  GrothendieckTopology topology;  // restriction of the ambient topology
};

/// Full subcategory on the objects not covered by the empty sieve, with the
/// restricted topology. May be empty (degenerate site).
ReducedSite reduced_subcategory(const GrothendieckTopology& j);

/// A sieve of the subcategory covers iff the sieve it generates in the
/// ambient category covers there.
GrothendieckTopology restrict_topology(const GrothendieckTopology& j,
                                       const FullSubcategory& sub);

/// Inverse of restriction along a J-dense full subcategory: S covers c iff
/// f∗(S) ∩ arr(D) covers dom f for every f: d→c with d in D. Throws
/// Error(kNotDense) when D is not J-dense.
GrothendieckTopology extend_topology(const GrothendieckTopology& z_on_sub,
                                     const FullSubcategory& sub,
                                     const GrothendieckTopology& j_ambient);

/// The topology of the largest dense Boolean subtopos: the empty sieve covers
/// dropped objects; on kept objects, S covers iff S contains the ambient
/// sieve generated by some dense-topology cover of the reduced site.
GrothendieckTopology booleanization(const GrothendieckTopology& j);

/// Same shape with the De Morgan topology joined with the restricted J in
/// place of the dense topology.
GrothendieckTopology demorganization(const GrothendieckTopology& j);

/// Independent second route: extend J by the element sieves that make every
/// R ∪ ¬R (respectively ¬R ∪ ¬¬R) of the reduced site dense. Shipped so the
/// two descriptions can be checked against each other.
GrothendieckTopology booleanization_by_densification(
    const GrothendieckTopology& j);
GrothendieckTopology demorganization_by_densification(
    const GrothendieckTopology& j);

/// Sheaves are Boolean iff the restricted topology is the dense topology of
/// the reduced site; De Morgan iff it contains the De Morgan topology.
/// An empty reduced site yields the degenerate topos: both verdicts true.
bool is_boolean(const GrothendieckTopology& j);
bool is_de_morgan(const GrothendieckTopology& j);

/// Everything the `analyze` command reports. Witnesses are sieves of the
/// reduced site: R with R ∪ ¬R (respectively ¬R ∪ ¬¬R) not covering, first
/// in canonical order.
struct SiteAnalysis {
  bool groupoid = false;
  bool right_ore = false;
  bool boolean_site = false;
  bool de_morgan_site = false;
  bool subcanonical = false;
  ReducedSite reduced;
  GrothendieckTopology booleanized;
  GrothendieckTopology demorganized;
  std::optional<Sieve> boolean_witness;
  std::optional<Sieve> de_morgan_witness;
};

SiteAnalysis analyze_site(const GrothendieckTopology& j);

}  // namespace finsite

#endif  // FINSITE_REDUCT_HPP_
