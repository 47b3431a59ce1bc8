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

#include "finsite/reduct.hpp"

#include <algorithm>

namespace finsite {

namespace {

GrothendieckTopology make_topology_checked(CategoryPtr cat, CoverSets covers) {
  return GrothendieckTopology::checked(std::move(cat), std::move(covers));
}

/// Sieve of the ambient category generated by the arrows of a subcategory
/// sieve.
Sieve ambient_sieve(const FullSubcategory& sub, const Sieve& s) {
  std::vector<ArrId> gens;
  for (ArrId a : s.arrows()) gens.push_back(sub.arr_to_ambient[a]);
  return generate_sieve(sub.ambient, sub.obj_to_ambient[s.cod()], gens);
}

/// f∗(S) ∩ arr(D) as a sieve of the subcategory on dom f; the subcategory is
/// full, so membership is just "domain kept".
Sieve trace_sieve(const FullSubcategory& sub, const Sieve& ambient_s,
                  ArrId along) {
  const auto& cat = sub.ambient;
  const Sieve pulled = pullback_sieve(ambient_s, along);
  std::vector<ArrId> arrows;
  for (ArrId g : pulled.arrows())
    if (sub.keeps_object(cat->dom(g)))
      arrows.push_back(sub.arr_from_ambient[g]);
  return Sieve(sub.category, sub.obj_from_ambient[cat->dom(along)],
               std::move(arrows));
}

}  // namespace

ObjId FullSubcategory::sub_object(ObjId ambient_obj) const {
  const ObjId o = obj_from_ambient[ambient_obj];
  if (o == kNoObject)
    throw Error(Errc::kObjectNotInSubcategory,
                "object '" + ambient->object_name(ambient_obj) +
                    "' is not in the subcategory");
  return o;
}

FullSubcategory full_subcategory(CategoryPtr cat,
                                 std::span<const ObjId> objects) {
  FullSubcategory sub;
  sub.ambient = cat;
  sub.kept.assign(objects.begin(), objects.end());
  std::sort(sub.kept.begin(), sub.kept.end());
  sub.kept.erase(std::unique(sub.kept.begin(), sub.kept.end()),
                 sub.kept.end());
  for (ObjId o : sub.kept)
    if (o < 0 || o >= cat->object_count())
      throw Error(Errc::kObjectNotInSubcategory, "object id out of range");

  sub.obj_from_ambient.assign(cat->object_count(), kNoObject);
  sub.arr_from_ambient.assign(cat->arrow_count(), kNoArrow);

  CategoryDescription d;
  for (ObjId o : sub.kept) d.objects.push_back(cat->object_name(o));
  auto kept_obj = [&](ObjId o) {
    return std::binary_search(sub.kept.begin(), sub.kept.end(), o);
  };
  auto kept_arr = [&](ArrId a) {
    return kept_obj(cat->dom(a)) && kept_obj(cat->cod(a));
  };
  for (ArrId a = 0; a < cat->arrow_count(); ++a)
    if (kept_arr(a))
      d.arrows.push_back({cat->arrow_name(a), cat->object_name(cat->dom(a)),
                          cat->object_name(cat->cod(a))});
  for (ObjId o : sub.kept)
    d.identities[cat->object_name(o)] = cat->arrow_name(cat->identity(o));
  for (ArrId f = 0; f < cat->arrow_count(); ++f)
    for (ArrId g = 0; g < cat->arrow_count(); ++g)
      if (kept_arr(f) && kept_arr(g) && cat->composable(f, g))
        d.compose.push_back({cat->arrow_name(f), cat->arrow_name(g),
                             cat->arrow_name(cat->compose(f, g))});
  sub.category = FiniteCategory::validate(d);

  for (ObjId o = 0; o < sub.category->object_count(); ++o) {
    const ObjId amb = *cat->find_object(sub.category->object_name(o));
    sub.obj_to_ambient.push_back(amb);
    sub.obj_from_ambient[amb] = o;
  }
  for (ArrId a = 0; a < sub.category->arrow_count(); ++a) {
    const ArrId amb = *cat->find_arrow(sub.category->arrow_name(a));
    sub.arr_to_ambient.push_back(amb);
    sub.arr_from_ambient[amb] = a;
  }
  return sub;
}

ReducedSite reduced_subcategory(const GrothendieckTopology& j) {
  const auto& cat = j.category();
  std::vector<ObjId> kept;
  for (ObjId c = 0; c < cat->object_count(); ++c)
    if (!j.covers(c).count(Sieve::empty(cat, c))) kept.push_back(c);
  FullSubcategory sub = full_subcategory(cat, kept);
  GrothendieckTopology restricted = restrict_topology(j, sub);
  return ReducedSite{std::move(sub), std::move(restricted)};
}

GrothendieckTopology restrict_topology(const GrothendieckTopology& j,
                                       const FullSubcategory& sub) {
  if (sub.ambient.get() != j.category().get())
    throw Error(Errc::kCategoryMismatch,
                "subcategory taken in a different category");
  CoverSets covers(sub.category->object_count());
  for (ObjId c = 0; c < sub.category->object_count(); ++c)
    for (const Sieve& r : enumerate_sieves(sub.category, c))
      if (j.covers_sieve(ambient_sieve(sub, r))) covers[c].insert(r);
  return make_topology_checked(sub.category, std::move(covers));
}

GrothendieckTopology extend_topology(const GrothendieckTopology& z_on_sub,
                                     const FullSubcategory& sub,
                                     const GrothendieckTopology& j_ambient) {
  const auto& cat = sub.ambient;
  if (z_on_sub.category().get() != sub.category.get())
    throw Error(Errc::kCategoryMismatch,
                "topology is not on the subcategory");
  if (j_ambient.category().get() != cat.get())
    throw Error(Errc::kCategoryMismatch,
                "base topology is not on the ambient category");

  // Density: the sieve generated by all arrows out of kept objects covers.
  for (ObjId c = 0; c < cat->object_count(); ++c) {
    std::vector<ArrId> gens;
    for (ArrId f : cat->arrows_into(c))
      if (sub.keeps_object(cat->dom(f))) gens.push_back(f);
    if (!j_ambient.covers_sieve(generate_sieve(cat, c, gens)))
      throw Error(Errc::kNotDense,
                  "subcategory is not dense at '" + cat->object_name(c) + "'");
  }

  CoverSets covers(cat->object_count());
  for (ObjId c = 0; c < cat->object_count(); ++c)
    for (const Sieve& s : enumerate_sieves(cat, c)) {
      bool covering = true;
      for (ArrId f : cat->arrows_into(c)) {
        if (!sub.keeps_object(cat->dom(f))) continue;
        if (!z_on_sub.covers_sieve(trace_sieve(sub, s, f))) {
          covering = false;
          break;
        }
      }
      if (covering) covers[c].insert(s);
    }
  return make_topology_checked(cat, std::move(covers));
}

namespace {

/// The explicit completion shared by booleanization and demorganization:
/// dropped objects are covered by the empty sieve (hence by everything);
/// on kept objects a sieve covers iff it contains the ambient sieve
/// generated by some cover from `base` (a topology on the reduced site).
GrothendieckTopology complete_over(const GrothendieckTopology& j,
                                   const ReducedSite& red,
                                   const GrothendieckTopology& base) {
  const auto& cat = j.category();
  CoverSets covers(cat->object_count());
  for (ObjId c = 0; c < cat->object_count(); ++c) {
    const auto all = enumerate_sieves(cat, c);
    if (!red.site.keeps_object(c)) {
      covers[c].insert(all.begin(), all.end());
      continue;
    }
    std::vector<Sieve> thresholds;
    for (const Sieve& t : base.covers(red.site.obj_from_ambient[c]))
      thresholds.push_back(ambient_sieve(red.site, t));
    for (const Sieve& s : all)
      for (const Sieve& t : thresholds)
        if (t.subset_of(s)) {
          covers[c].insert(s);
          break;
        }
  }
  return make_topology_checked(cat, std::move(covers));
}

/// Extend J so that the named combination of each reduced-site sieve with its
/// pseudocomplements becomes dense, through the element-sieve machinery on
/// representables.
GrothendieckTopology densify_over(const GrothendieckTopology& j,
                                  bool excluded_middle_form) {
  const ReducedSite red = reduced_subcategory(j);
  const auto& cat = j.category();
  GrothendieckTopology result = j;
  for (ObjId c = 0; c < red.site.category->object_count(); ++c) {
    const ObjId amb = red.site.obj_to_ambient[c];
    const PresheafPtr yc = Presheaf::yoneda(cat, amb);
    for (const Sieve& r : enumerate_sieves(red.site.category, c)) {
      const Sieve combined =
          excluded_middle_form
              ? sieve_union(r, sieve_not(r))
              : sieve_union(sieve_not(r), sieve_not_not(r));
      const Subpresheaf mono =
          subpresheaf_from_sieve(yc, ambient_sieve(red.site, combined));
      result = densifying_topology(result, mono);
    }
  }
  return result;
}

}  // namespace

GrothendieckTopology booleanization(const GrothendieckTopology& j) {
  const ReducedSite red = reduced_subcategory(j);
  return complete_over(j, red, dense_topology(red.site.category));
}

GrothendieckTopology demorganization(const GrothendieckTopology& j) {
  const ReducedSite red = reduced_subcategory(j);
  return complete_over(
      j, red,
      topology_join(de_morgan_topology(red.site.category), red.topology));
}

GrothendieckTopology booleanization_by_densification(
    const GrothendieckTopology& j) {
  return densify_over(j, /*excluded_middle_form=*/true);
}

GrothendieckTopology demorganization_by_densification(
    const GrothendieckTopology& j) {
  return densify_over(j, /*excluded_middle_form=*/false);
}

bool is_boolean(const GrothendieckTopology& j) {
  const ReducedSite red = reduced_subcategory(j);
  return red.topology == dense_topology(red.site.category);
}

bool is_de_morgan(const GrothendieckTopology& j) {
  const ReducedSite red = reduced_subcategory(j);
  return topology_leq(de_morgan_topology(red.site.category), red.topology);
}

SiteAnalysis analyze_site(const GrothendieckTopology& j) {
  const auto& cat = j.category();
  ReducedSite red = reduced_subcategory(j);
  const auto& subcat = red.site.category;

  const bool boolean_site =
      red.topology == dense_topology(subcat);
  const bool de_morgan_site =
      topology_leq(de_morgan_topology(subcat), red.topology);

  std::optional<Sieve> boolean_witness;
  std::optional<Sieve> de_morgan_witness;
  for (ObjId c = 0; c < subcat->object_count(); ++c) {
    for (const Sieve& r : enumerate_sieves(subcat, c)) {
      if (!boolean_witness &&
          !red.topology.covers_sieve(sieve_union(r, sieve_not(r))))
        boolean_witness = r;
      if (!de_morgan_witness &&
          !red.topology.covers_sieve(
              sieve_union(sieve_not(r), sieve_not_not(r))))
        de_morgan_witness = r;
    }
  }
  if (boolean_site) boolean_witness.reset();
  if (de_morgan_site) de_morgan_witness.reset();

  return SiteAnalysis{is_groupoid(*cat),
                      satisfies_right_ore(*cat),
                      boolean_site,
                      de_morgan_site,
                      is_subcanonical(j),
                      std::move(red),
                      booleanization(j),
                      demorganization(j),
                      std::move(boolean_witness),
                      std::move(de_morgan_witness)};
}

}  // namespace finsite
