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

// Acceptance gate: every check below is exact (set equality / boolean
// agreement); the fixture corpus is small enough that each quantifier is
// discharged by exhaustive enumeration. One line per criterion.

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "finsite/oracle.hpp"
#include "testutil.hpp"

namespace {

using namespace fstest;

std::vector<GrothendieckTopology> topologies_of(const CategoryPtr& cat) {
  return enumerate_topologies(cat, 16);
}

std::map<std::string, std::vector<Subpresheaf>> subobjects_of(
    const CategoryPtr& cat) {
  std::map<std::string, std::vector<Subpresheaf>> out;
  for (const auto& [name, e] : standard_presheaves(cat))
    out[name] = enumerate_subpresheaves(e, 16);
  return out;
}

// 1. Boolean ⇔ groupoid, with the expected truth table.
std::optional<std::string> criterion_boolean_groupoid() {
  const std::map<std::string, bool> expected = {
      {"WALK", false}, {"SPAN", false}, {"COSPAN", false}, {"Z2", true},
      {"M2", false},   {"TERM", true},  {"DISC2", true},   {"PAIR", false}};
  for (auto name : fixture_names()) {
    const CategoryPtr cat = fixture_category(name);
    const bool boolean = is_boolean(trivial_topology(cat));
    if (boolean != is_groupoid(*cat))
      return "verdicts disagree on " + std::string(name);
    if (boolean != expected.at(std::string(name)))
      return "unexpected verdict on " + std::string(name);
  }
  return std::nullopt;
}

// 2. De Morgan ⇔ right Ore, COSPAN negative, WALK/M2/SPAN positive.
std::optional<std::string> criterion_de_morgan_ore() {
  for (auto name : fixture_names()) {
    const CategoryPtr cat = fixture_category(name);
    if (is_de_morgan(trivial_topology(cat)) != satisfies_right_ore(*cat))
      return "verdicts disagree on " + std::string(name);
  }
  if (is_de_morgan(trivial_topology(fixture_category("COSPAN"))))
    return "COSPAN should fail De Morgan";
  for (auto name : {"WALK", "M2", "SPAN"})
    if (!is_de_morgan(trivial_topology(fixture_category(name))))
      return std::string(name) + " should satisfy De Morgan";
  return std::nullopt;
}

// 3. Heyting laws for sieves and subpresheaves, by exhaustive enumeration.
std::optional<std::string> criterion_heyting() {
  for (auto name : fixture_names()) {
    const CategoryPtr cat = fixture_category(name);
    for (ObjId c = 0; c < cat->object_count(); ++c) {
      const auto sieves = enumerate_sieves(cat, c);
      for (const Sieve& s : sieves) {
        const Sieve ns = sieve_not(s);
        if (!sieve_intersection(s, ns).is_empty())
          return std::string(name) + ": S ∩ ¬S ≠ ∅";
        for (const Sieve& u : sieves)
          if (sieve_intersection(s, u).is_empty() && !u.subset_of(ns))
            return std::string(name) + ": ¬S not the largest disjoint sieve";
        if (!(sieve_not(sieve_not(ns)) == ns))
          return std::string(name) + ": ¬¬¬S ≠ ¬S";
        for (const Sieve& t : sieves) {
          const Sieve imp = sieve_implies(s, t);
          for (const Sieve& u : sieves)
            if (sieve_intersection(u, s).subset_of(t) != u.subset_of(imp))
              return std::string(name) + ": sieve adjunction fails";
        }
      }
    }
    for (const auto& [pname, subs] : subobjects_of(cat)) {
      const PresheafPtr e = subs.front().parent();
      for (const Subpresheaf& a : subs) {
        const Subpresheaf na = sub_not(a);
        if (!sub_meet(a, na).is_empty())
          return std::string(name) + "/" + pname + ": A ∩ ¬A ≠ ∅";
        for (const Subpresheaf& u : subs)
          if (sub_meet(a, u).is_empty() && !u.subset_of(na))
            return std::string(name) + "/" + pname + ": ¬A not largest";
        if (!(sub_not(sub_not(na)) == na))
          return std::string(name) + "/" + pname + ": ¬¬¬A ≠ ¬A";
        for (const Subpresheaf& b : subs) {
          const Subpresheaf imp = sub_implies(a, b);
          for (const Subpresheaf& u : subs)
            if (sub_meet(u, a).subset_of(b) != u.subset_of(imp))
              return std::string(name) + "/" + pname + ": adjunction fails";
        }
      }
    }
  }
  return std::nullopt;
}

// 4. generate_topology(F) is the meet of all enumerated topologies ⊇ F.
std::optional<std::string> criterion_generation_minimality() {
  for (auto name : fixture_names()) {
    const CategoryPtr cat = fixture_category(name);
    const auto all = topologies_of(cat);
    for (ObjId c = 0; c < cat->object_count(); ++c)
      for (const Sieve& s : enumerate_sieves(cat, c)) {
        const Sieve family[] = {s};
        const GrothendieckTopology generated = generate_topology(cat, family);
        std::optional<GrothendieckTopology> meet;
        for (const auto& j : all) {
          if (!j.covers_sieve(s)) continue;
          meet = meet ? topology_meet(*meet, j) : j;
        }
        if (!meet) return std::string(name) + ": no topology contains a sieve";
        if (!(generated == *meet))
          return std::string(name) + ": generation is not minimal";
      }
  }
  return std::nullopt;
}

// 5. dense = generated by R ∪ ¬R; De Morgan ≤ dense; pinned values.
std::optional<std::string> criterion_dense_de_morgan() {
  for (auto name : fixture_names()) {
    const CategoryPtr cat = fixture_category(name);
    std::vector<Sieve> family;
    for (ObjId c = 0; c < cat->object_count(); ++c)
      for (const Sieve& r : enumerate_sieves(cat, c))
        family.push_back(sieve_union(r, sieve_not(r)));
    if (!(generate_topology(cat, family) == dense_topology(cat)))
      return std::string(name) + ": dense ≠ generated excluded middle";
    if (!topology_leq(de_morgan_topology(cat), dense_topology(cat)))
      return std::string(name) + ": De Morgan ≰ dense";
  }
  const CategoryPtr walk = fixture_category("WALK");
  if (!(de_morgan_topology(walk) == trivial_topology(walk)))
    return "De Morgan topology of WALK is not trivial";
  const CategoryPtr cospan = fixture_category("COSPAN");
  if (!de_morgan_topology(cospan).covers_sieve(
          sieve(cospan, "c", {"f", "g"})))
    return "De Morgan topology of COSPAN misses {f,g}";
  return std::nullopt;
}

// 6. Closure operators: extensive, idempotent, monotone, meet-preserving;
//    covering ⇔ maximal closure.
std::optional<std::string> criterion_closure_laws() {
  for (auto name : fixture_names()) {
    const CategoryPtr cat = fixture_category(name);
    const auto subs = subobjects_of(cat);
    for (const auto& j : topologies_of(cat)) {
      for (ObjId c = 0; c < cat->object_count(); ++c) {
        const auto sieves = enumerate_sieves(cat, c);
        for (const Sieve& s : sieves) {
          const Sieve closed = close_sieve(j, s);
          if (!s.subset_of(closed) || !(close_sieve(j, closed) == closed))
            return std::string(name) + ": sieve closure laws fail";
          if (j.covers_sieve(s) != closed.is_maximal())
            return std::string(name) + ": covering ⇔ maximal closure fails";
          for (const Sieve& t : sieves) {
            if (s.subset_of(t) && !closed.subset_of(close_sieve(j, t)))
              return std::string(name) + ": sieve closure not monotone";
            if (!(sieve_intersection(closed, close_sieve(j, t)) ==
                  close_sieve(j, sieve_intersection(s, t))))
              return std::string(name) + ": sieve closure not ∩-preserving";
          }
        }
      }
      for (const auto& [pname, list] : subs)
        for (const Subpresheaf& a : list) {
          const Subpresheaf closed = close_subobject(j, a);
          if (!a.subset_of(closed) ||
              !(close_subobject(j, closed) == closed))
            return std::string(name) + "/" + pname + ": closure laws fail";
          for (const Subpresheaf& b : list) {
            if (a.subset_of(b) &&
                !closed.subset_of(close_subobject(j, b)))
              return std::string(name) + "/" + pname + ": not monotone";
            if (!(sub_meet(closed, close_subobject(j, b)) ==
                  close_subobject(j, sub_meet(a, b))))
              return std::string(name) + "/" + pname + ": not ∩-preserving";
          }
        }
    }
  }
  return std::nullopt;
}

// 7. restrict/extend are mutually inverse over the reduced site.
std::optional<std::string> criterion_reduction_bijection() {
  const CategoryPtr walk = fixture_category("WALK");
  const GrothendieckTopology bases[] = {jcov(walk), trivial_topology(walk)};
  for (const auto& base : bases) {
    const ReducedSite red = reduced_subcategory(base);
    for (const auto& j2 : topologies_of(walk)) {
      if (!topology_leq(base, j2)) continue;
      if (!(extend_topology(restrict_topology(j2, red.site), red.site, base) ==
            j2))
        return "extend∘restrict is not the identity";
    }
    for (const auto& z : topologies_of(red.site.category)) {
      if (!topology_leq(red.topology, z)) continue;
      if (!(restrict_topology(extend_topology(z, red.site, base), red.site) ==
            z))
        return "restrict∘extend is not the identity";
    }
  }
  return std::nullopt;
}

// 8. Completion routes agree; idempotence; completed sites have the property;
//    booleanization(WALK, trivial) = dense topology exactly.
std::optional<std::string> criterion_completions() {
  for (auto name : fixture_names()) {
    const CategoryPtr cat = fixture_category(name);
    for (const auto& j : topologies_of(cat)) {
      const GrothendieckTopology jb = booleanization(j);
      const GrothendieckTopology jm = demorganization(j);
      if (!(jb == booleanization_by_densification(j)))
        return std::string(name) + ": booleanization routes disagree";
      if (!(jm == demorganization_by_densification(j)))
        return std::string(name) + ": demorganization routes disagree";
      if (!(booleanization(jb) == jb) || !(demorganization(jm) == jm))
        return std::string(name) + ": completion not idempotent";
      if (!is_boolean(jb) || !is_de_morgan(jm))
        return std::string(name) + ": completion misses its property";
    }
  }
  const CategoryPtr walk = fixture_category("WALK");
  if (!(booleanization(trivial_topology(walk)) == dense_topology(walk)))
    return "booleanization of (WALK, trivial) is not the dense topology";
  return std::nullopt;
}

// 9. Below the dense topology, pseudocomplements are closed subobjects.
std::optional<std::string> criterion_complement_closure() {
  for (auto name : fixture_names()) {
    const CategoryPtr cat = fixture_category(name);
    const auto dense = dense_topology(cat);
    const auto subs = subobjects_of(cat);
    for (const auto& j : topologies_of(cat)) {
      if (!topology_leq(j, dense)) continue;
      for (const auto& [pname, list] : subs)
        for (const Subpresheaf& a : list)
          if (!(close_subobject(j, sub_not(a)) == sub_not(a)))
            return std::string(name) + "/" + pname + ": ¬A not closed";
    }
  }
  return std::nullopt;
}

// 10. Subcanonicity: trivial everywhere; dense on WALK fails with witness
//     {u}; dense on Z2 holds.
std::optional<std::string> criterion_subcanonical() {
  for (auto name : fixture_names())
    if (!is_subcanonical(trivial_topology(fixture_category(name))))
      return std::string(name) + ": trivial topology not subcanonical";
  const CategoryPtr walk = fixture_category("WALK");
  if (is_subcanonical(dense_topology(walk)))
    return "dense topology on WALK should not be subcanonical";
  if (effective_epimorphic(sieve(walk, "b", {"u"})))
    return "{u} should not be effective-epimorphic";
  if (!is_subcanonical(dense_topology(fixture_category("Z2"))))
    return "dense topology on Z2 should be subcanonical";
  return std::nullopt;
}

// 11. The densifying topology of the one-arrow subobject over WALK is the
//     dense topology, and it is minimal among enumerated densifiers.
std::optional<std::string> criterion_densifying_minimality() {
  const CategoryPtr walk = fixture_category("WALK");
  const PresheafPtr yb = Presheaf::yoneda(walk, obj(walk, "b"));
  const Subpresheaf a = subpresheaf_from_sieve(yb, sieve(walk, "b", {"u"}));
  const GrothendieckTopology jd =
      densifying_topology(trivial_topology(walk), a);
  if (!(jd == dense_topology(walk)))
    return "densifying topology is not the dense topology";
  for (const auto& j : topologies_of(walk))
    if (is_dense_mono(j, a) && !topology_leq(jd, j))
      return "densifying topology is not minimal";
  return std::nullopt;
}

}  // namespace

int main() {
  const std::pair<std::string,
                  std::function<std::optional<std::string>()>>
      criteria[] = {
          {"boolean iff groupoid over the corpus", criterion_boolean_groupoid},
          {"De Morgan iff right Ore over the corpus",
           criterion_de_morgan_ore},
          {"Heyting algebra laws by exhaustive enumeration",
           criterion_heyting},
          {"generated topologies are minimal", criterion_generation_minimality},
          {"dense and De Morgan topology identities",
           criterion_dense_de_morgan},
          {"closure operator laws", criterion_closure_laws},
          {"restriction/extension bijection", criterion_reduction_bijection},
          {"booleanization and demorganization", criterion_completions},
          {"pseudocomplements are closed below dense",
           criterion_complement_closure},
          {"subcanonicity verdicts", criterion_subcanonical},
          {"densifying topology minimality", criterion_densifying_minimality},
      };

  int failures = 0;
  int number = 1;
  for (const auto& [name, run] : criteria) {
    std::optional<std::string> failure;
    try {
      failure = run();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      ++failures;
      std::cout << "FAIL criterion " << number << ": " << name << " — "
                << *failure << "\n";
    } else {
      std::cout << "PASS criterion " << number << ": " << name << "\n";
    }
    ++number;
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed\n"
                              : "acceptance: " + std::to_string(failures) +
                                    " criterion(s) failed\n");
  return failures == 0 ? 0 : 1;
}
