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

#include "finsite/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace finsite {

namespace {

std::string label(const Sieve& s) {
  std::string out = "{";
  bool first = true;
  for (ArrId a : s.arrows()) {
    if (!first) out += ",";
    out += s.category()->arrow_name(a);
    first = false;
  }
  return out + "}@" + s.category()->object_name(s.cod());
}

struct Ctx {
  CategoryPtr cat;
  std::vector<std::vector<Sieve>> sieves;             // per object
  std::vector<GrothendieckTopology> topologies;       // all of them
  std::vector<std::pair<std::string, PresheafPtr>> presheaves;
  std::map<std::string, std::vector<Subpresheaf>> subs;  // per presheaf
  GrothendieckTopology trivial;
  GrothendieckTopology dense;
  GrothendieckTopology de_morgan;
  int bound;
};

using CheckFn = std::function<std::string(const Ctx&)>;  // "" means pass

OracleCheck run_one(const Ctx& ctx, const std::string& name,
                    const CheckFn& fn) {
  OracleCheck check;
  check.name = name;
  check.detail = fn(ctx);
  check.passed = check.detail.empty() ||
                 check.detail.rfind("ok", 0) == 0;  // "ok: ..." summaries pass
  return check;
}

// ---------------------------------------------------------------------------
// fincat

std::string check_groupoid_ore(const Ctx& ctx) {
  const bool grp = is_groupoid(*ctx.cat);
  const bool ore = satisfies_right_ore(*ctx.cat);
  if (grp && !ore) return "groupoid without the right Ore property";
  std::ostringstream os;
  os << "ok: groupoid=" << grp << " right_ore=" << ore;
  return os.str();
}

std::string check_opposite_involution(const Ctx& ctx) {
  if (!(*opposite(*opposite(*ctx.cat)) == *ctx.cat))
    return "opposite(opposite(C)) differs from C";
  return "";
}

// ---------------------------------------------------------------------------
// sieve algebra

std::string check_heyting_complement(const Ctx& ctx) {
  for (ObjId c = 0; c < ctx.cat->object_count(); ++c)
    for (const Sieve& s : ctx.sieves[c]) {
      const Sieve ns = sieve_not(s);
      if (!sieve_intersection(s, ns).is_empty())
        return "S ∩ ¬S nonempty for S=" + label(s);
      // largest disjoint sieve, found by scan
      for (const Sieve& u : ctx.sieves[c])
        if (sieve_intersection(s, u).is_empty() && !u.subset_of(ns))
          return "¬S not maximal among disjoint sieves at S=" + label(s) +
                 ", U=" + label(u);
      const Sieve nns = sieve_not_not(s);
      if (!s.subset_of(nns)) return "S ⊄ ¬¬S for S=" + label(s);
      if (!(sieve_not(nns) == ns)) return "¬¬¬S ≠ ¬S for S=" + label(s);
      if (!(sieve_implies(s, Sieve::empty(ctx.cat, c)) == ns))
        return "S ⇒ ∅ differs from ¬S for S=" + label(s);
      if (!(sieve_not(ns) == nns))
        return "¬(¬S) differs from the stable-nonemptiness form at S=" +
               label(s);
      if (s.contains(ctx.cat->identity(c)) && !s.is_maximal())
        return "sieve containing the identity is not maximal: " + label(s);
    }
  return "";
}

std::string check_implication_adjunction(const Ctx& ctx) {
  for (ObjId c = 0; c < ctx.cat->object_count(); ++c)
    for (const Sieve& s : ctx.sieves[c])
      for (const Sieve& t : ctx.sieves[c]) {
        const Sieve imp = sieve_implies(s, t);
        for (const Sieve& u : ctx.sieves[c]) {
          const bool left = sieve_intersection(u, s).subset_of(t);
          const bool right = u.subset_of(imp);
          if (left != right)
            return "adjunction fails at S=" + label(s) + " T=" + label(t) +
                   " U=" + label(u);
        }
      }
  return "";
}

std::string check_pullback_hom(const Ctx& ctx) {
  for (ObjId c = 0; c < ctx.cat->object_count(); ++c) {
    for (const Sieve& s : ctx.sieves[c]) {
      if (!(pullback_sieve(s, ctx.cat->identity(c)) == s))
        return "identity pullback moves " + label(s);
      for (ArrId f : ctx.cat->arrows_into(c))
        for (const Sieve& t : ctx.sieves[c]) {
          if (!(pullback_sieve(sieve_intersection(s, t), f) ==
                sieve_intersection(pullback_sieve(s, f),
                                   pullback_sieve(t, f))))
            return "pullback does not preserve ∩ at " + label(s) + ", " +
                   label(t);
          if (!(pullback_sieve(sieve_union(s, t), f) ==
                sieve_union(pullback_sieve(s, f), pullback_sieve(t, f))))
            return "pullback does not preserve ∪ at " + label(s) + ", " +
                   label(t);
        }
    }
    for (ArrId f : ctx.cat->arrows_into(c)) {
      if (!pullback_sieve(Sieve::maximal(ctx.cat, c), f).is_maximal())
        return "pullback of the maximal sieve is not maximal";
      if (!pullback_sieve(Sieve::empty(ctx.cat, c), f).is_empty())
        return "pullback of the empty sieve is not empty";
    }
  }
  return "";
}

std::string check_ore_complement(const Ctx& ctx) {
  if (!satisfies_right_ore(*ctx.cat)) return "ok: vacuous (no right Ore)";
  for (ObjId c = 0; c < ctx.cat->object_count(); ++c)
    for (const Sieve& r : ctx.sieves[c])
      if (!r.is_empty() && !sieve_not(r).is_empty())
        return "¬R nonempty for nonempty R=" + label(r) +
               " despite right Ore";
  return "";
}

// ---------------------------------------------------------------------------
// topologies

std::string check_constructor_axioms(const Ctx& ctx) {
  auto verify = [&](const GrothendieckTopology& j, const char* what) {
    auto bad = check_topology_axioms(ctx.cat, j.cover_sets());
    if (bad) return std::string(what) + ": " + bad->describe(*ctx.cat);
    return std::string();
  };
  if (auto s = verify(ctx.trivial, "trivial"); !s.empty()) return s;
  if (auto s = verify(ctx.dense, "dense"); !s.empty()) return s;
  if (auto s = verify(ctx.de_morgan, "de_morgan"); !s.empty()) return s;
  for (ObjId c = 0; c < ctx.cat->object_count(); ++c)
    for (const Sieve& s : ctx.sieves[c]) {
      const Sieve family[] = {s};
      if (auto msg = verify(generate_topology(ctx.cat, family), "generated");
          !msg.empty())
        return msg + " (generator " + label(s) + ")";
    }
  return "";
}

std::string check_dense_generation(const Ctx& ctx) {
  std::vector<Sieve> family;
  for (ObjId c = 0; c < ctx.cat->object_count(); ++c)
    for (const Sieve& r : ctx.sieves[c])
      family.push_back(sieve_union(r, sieve_not(r)));
  if (!(generate_topology(ctx.cat, family) == ctx.dense))
    return "dense topology differs from the one generated by R ∪ ¬R";
  return "";
}

std::string check_de_morgan_leq_dense(const Ctx& ctx) {
  if (!topology_leq(ctx.de_morgan, ctx.dense))
    return "De Morgan topology not below the dense topology";
  return "";
}

std::string check_generate_minimality(const Ctx& ctx) {
  for (ObjId c = 0; c < ctx.cat->object_count(); ++c)
    for (const Sieve& s : ctx.sieves[c]) {
      const Sieve family[] = {s};
      const GrothendieckTopology generated =
          generate_topology(ctx.cat, family);
      if (!generated.covers_sieve(s))
        return "generated topology misses its generator " + label(s);
      // meet of every enumerated topology containing the generator
      std::optional<GrothendieckTopology> meet;
      for (const auto& j : ctx.topologies) {
        if (!j.covers_sieve(s)) continue;
        meet = meet ? topology_meet(*meet, j) : j;
      }
      if (!meet || !(generated == *meet))
        return "generated topology is not the meet of those containing " +
               label(s);
    }
  // monotone in the family
  for (ObjId c = 0; c < ctx.cat->object_count(); ++c)
    for (const Sieve& s : ctx.sieves[c])
      for (const Sieve& t : ctx.sieves[c]) {
        const Sieve small_family[] = {s};
        const Sieve large_family[] = {s, t};
        if (!topology_leq(generate_topology(ctx.cat, small_family),
                          generate_topology(ctx.cat, large_family)))
          return "generation is not monotone in the family";
      }
  // idempotence: generating from a topology's covers returns it
  for (const auto& j : ctx.topologies) {
    std::vector<Sieve> family;
    for (ObjId c = 0; c < ctx.cat->object_count(); ++c)
      family.insert(family.end(), j.covers(c).begin(), j.covers(c).end());
    if (!(generate_topology(ctx.cat, family) == j))
      return "generation is not idempotent on an enumerated topology";
  }
  return "";
}

std::string check_enumerated_above_trivial(const Ctx& ctx) {
  for (const auto& j : ctx.topologies)
    if (!topology_leq(ctx.trivial, j))
      return "an enumerated topology is below the trivial one";
  return "ok: " + std::to_string(ctx.topologies.size()) + " topologies";
}

std::string check_leq_dense_iff_stably_nonempty(const Ctx& ctx) {
  for (const auto& j : ctx.topologies) {
    bool all_stable = true;
    for (ObjId c = 0; c < ctx.cat->object_count() && all_stable; ++c)
      for (const Sieve& s : j.covers(c))
        if (!stably_nonempty(s)) {
          all_stable = false;
          break;
        }
    if (all_stable != topology_leq(j, ctx.dense))
      return "J ≤ dense disagrees with stable nonemptiness of covers";
  }
  return "";
}

std::string check_close_sieve_operator(const Ctx& ctx) {
  for (const auto& j : ctx.topologies)
    for (ObjId c = 0; c < ctx.cat->object_count(); ++c)
      for (const Sieve& s : ctx.sieves[c]) {
        const Sieve closed = close_sieve(j, s);
        if (!s.subset_of(closed)) return "closure not extensive";
        if (!(close_sieve(j, closed) == closed))
          return "closure not idempotent at " + label(s);
        if (j.covers_sieve(s) != closed.is_maximal())
          return "covering ⇔ maximal closure fails at " + label(s);
        if (is_closed(j, s) != (closed == s))
          return "is_closed inconsistent at " + label(s);
        for (const Sieve& t : ctx.sieves[c]) {
          if (s.subset_of(t) && !closed.subset_of(close_sieve(j, t)))
            return "closure not monotone";
          if (!(sieve_intersection(closed, close_sieve(j, t)) ==
                close_sieve(j, sieve_intersection(s, t))))
            return "closure does not preserve ∩";
        }
      }
  return "";
}

std::string check_subcanonical_universal(const Ctx& ctx) {
  for (const auto& j : ctx.topologies) {
    bool plain = true;
    bool universal = true;
    for (ObjId c = 0; c < ctx.cat->object_count(); ++c)
      for (const Sieve& s : j.covers(c)) {
        plain = plain && effective_epimorphic(s);
        universal = universal && universally_effective_epimorphic(s);
      }
    if (plain != universal)
      return "plain and universal effective-epimorphicity disagree over a "
             "pullback-closed cover set";
    if (is_subcanonical(j) != plain) return "is_subcanonical inconsistent";
  }
  return "";
}

// ---------------------------------------------------------------------------
// presheaves

std::string check_yoneda_bijection(const Ctx& ctx) {
  for (ObjId c = 0; c < ctx.cat->object_count(); ++c) {
    const PresheafPtr yc = Presheaf::yoneda(ctx.cat, c);
    const auto subs = enumerate_subpresheaves(yc, 30);
    if (subs.size() != ctx.sieves[c].size())
      return "subpresheaf and sieve counts differ at '" +
             ctx.cat->object_name(c) + "'";
    for (const Sieve& s : ctx.sieves[c]) {
      const Subpresheaf a = subpresheaf_from_sieve(yc, s);
      if (!(sieve_from_subpresheaf(a, c) == s))
        return "bijection does not round trip at " + label(s);
      if (!(subpresheaf_from_sieve(yc, sieve_not(s)) == sub_not(a)))
        return "bijection does not intertwine ¬ at " + label(s);
      for (const Sieve& t : ctx.sieves[c]) {
        const Subpresheaf b = subpresheaf_from_sieve(yc, t);
        if (!(subpresheaf_from_sieve(yc, sieve_implies(s, t)) ==
              sub_implies(a, b)))
          return "bijection does not intertwine ⇒";
        if (!(subpresheaf_from_sieve(yc, sieve_union(s, t)) == sub_join(a, b)))
          return "bijection does not intertwine ∪";
        if (!(subpresheaf_from_sieve(yc, sieve_intersection(s, t)) ==
              sub_meet(a, b)))
          return "bijection does not intertwine ∩";
      }
      for (const auto& j : ctx.topologies)
        if (!(subpresheaf_from_sieve(yc, close_sieve(j, s)) ==
              close_subobject(j, a)))
          return "bijection does not intertwine closure at " + label(s);
      // element sieves of a representable subobject are sieve pullbacks
      for (ObjId d = 0; d < ctx.cat->object_count(); ++d)
        for (ArrId f : ctx.cat->hom(d, c)) {
          const int e = *yc->find_element(d, ctx.cat->arrow_name(f));
          if (!(element_sieve(a, d, e) == pullback_sieve(s, f)))
            return "element sieve differs from pullback at " + label(s);
        }
    }
  }
  return "";
}

std::string check_sub_heyting(const Ctx& ctx) {
  for (const auto& [name, e] : ctx.presheaves) {
    const auto& subs = ctx.subs.at(name);
    for (const Subpresheaf& a : subs) {
      const Subpresheaf na = sub_not(a);
      if (!sub_meet(a, na).is_empty())
        return name + ": A ∩ ¬A nonempty";
      for (const Subpresheaf& u : subs)
        if (sub_meet(a, u).is_empty() && !u.subset_of(na))
          return name + ": ¬A not maximal among disjoint subpresheaves";
      const Subpresheaf nna = sub_not(na);
      if (!a.subset_of(nna)) return name + ": A ⊄ ¬¬A";
      if (!(sub_not(nna) == na)) return name + ": ¬¬¬A ≠ ¬A";
      if (!(sub_implies(a, Subpresheaf::empty(e)) == na))
        return name + ": A ⇒ ∅ differs from ¬A";
      for (const Subpresheaf& b : subs) {
        const Subpresheaf imp = sub_implies(a, b);
        for (const Subpresheaf& u : subs) {
          const bool left = sub_meet(u, a).subset_of(b);
          const bool right = u.subset_of(imp);
          if (left != right) return name + ": implication adjunction fails";
        }
      }
    }
  }
  return "";
}

std::string check_element_sieves(const Ctx& ctx) {
  for (const auto& [name, e] : ctx.presheaves) {
    const Subpresheaf none = Subpresheaf::empty(e);
    for (const Subpresheaf& a : ctx.subs.at(name))
      for (ObjId c = 0; c < ctx.cat->object_count(); ++c)
        for (int x = 0; x < e->value_count(c); ++x) {
          const Sieve s = element_sieve(a, c, x);
          if (s.is_maximal() != a.contains(c, x))
            return name + ": element sieve maximal ⇔ membership fails";
          if (!element_sieve(none, c, x).is_empty())
            return name + ": element sieve of the empty subpresheaf nonempty";
        }
  }
  return "";
}

std::string check_subobject_closure(const Ctx& ctx) {
  for (const auto& [name, e] : ctx.presheaves) {
    const auto& subs = ctx.subs.at(name);
    for (const auto& j : ctx.topologies)
      for (const Subpresheaf& a : subs) {
        const Subpresheaf closed = close_subobject(j, a);
        if (!a.subset_of(closed)) return name + ": closure not extensive";
        if (!(close_subobject(j, closed) == closed))
          return name + ": closure not idempotent";
        if (is_dense_mono(j, a) != closed.is_full())
          return name + ": density ⇔ full closure fails";
        for (const Subpresheaf& b : subs) {
          if (a.subset_of(b) && !closed.subset_of(close_subobject(j, b)))
            return name + ": closure not monotone";
          if (!(sub_meet(closed, close_subobject(j, b)) ==
                close_subobject(j, sub_meet(a, b))))
            return name + ": closure does not preserve ∩";
        }
      }
    for (const Subpresheaf& a : subs)
      if (!(close_subobject(ctx.trivial, a) == a))
        return name + ": trivial closure is not the identity";
  }
  return "";
}

std::string check_densifying_minimality(const Ctx& ctx) {
  for (const auto& [name, e] : ctx.presheaves)
    for (const auto& base : ctx.topologies)
      for (const Subpresheaf& a : ctx.subs.at(name)) {
        const GrothendieckTopology jd = densifying_topology(base, a);
        if (!topology_leq(base, jd))
          return name + ": densifying topology not above its base";
        if (!is_dense_mono(jd, a))
          return name + ": subobject not dense for its densifying topology";
        for (const auto& j : ctx.topologies)
          if (topology_leq(base, j) && is_dense_mono(j, a) &&
              !topology_leq(jd, j))
            return name + ": densifying topology not minimal";
      }
  return "";
}

std::string check_closed_complement_stability(const Ctx& ctx) {
  for (const auto& j : ctx.topologies) {
    if (!topology_leq(j, ctx.dense)) continue;
    for (const auto& [name, e] : ctx.presheaves)
      for (const Subpresheaf& a : ctx.subs.at(name))
        if (!(close_subobject(j, sub_not(a)) == sub_not(a)))
          return name + ": ¬A not closed for a topology below dense";
  }
  return "";
}

std::string check_closed_sub_not(const Ctx& ctx) {
  for (const auto& j : ctx.topologies)
    for (const auto& [name, e] : ctx.presheaves) {
      const auto& subs = ctx.subs.at(name);
      const Subpresheaf zero = close_subobject(j, Subpresheaf::empty(e));
      for (const Subpresheaf& a : subs) {
        if (!(close_subobject(j, a) == a)) continue;  // only closed inputs
        const Subpresheaf r = closed_sub_not(j, a);
        if (!(close_subobject(j, r) == r))
          return name + ": closed pseudocomplement is not closed";
        if (!sub_meet(a, r).subset_of(zero))
          return name + ": closed pseudocomplement not disjoint over closure";
        for (const Subpresheaf& u : subs)
          if (close_subobject(j, u) == u && sub_meet(a, u).subset_of(zero) &&
              !u.subset_of(r))
            return name + ": closed pseudocomplement not the largest";
        if (topology_leq(j, ctx.dense) && !(r == sub_not(a)))
          return name + ": closed pseudocomplement ≠ ¬A below dense";
      }
    }
  return "";
}

std::string check_representables_generate(const Ctx& ctx) {
  const GrothendieckTopology bases[] = {ctx.trivial, ctx.de_morgan, ctx.dense};
  for (const auto& base : bases) {
    GrothendieckTopology full = base;
    GrothendieckTopology representables_only = base;
    for (const auto& [name, e] : ctx.presheaves) {
      const bool representable = name.rfind("yoneda", 0) == 0;
      for (const Subpresheaf& a : ctx.subs.at(name)) {
        const Subpresheaf mono = sub_join(a, sub_not(a));
        full = densifying_topology(full, mono);
        if (representable)
          representables_only = densifying_topology(representables_only, mono);
      }
    }
    if (!(representables_only == full))
      return "representables do not suffice to generate the densification";
    if (base == ctx.trivial && !(full == ctx.dense))
      return "A ∪ ¬A densification over the trivial topology is not dense";
  }
  return "";
}

// ---------------------------------------------------------------------------
// reduced sites and completions

std::string check_boolean_iff_groupoid(const Ctx& ctx) {
  const bool b = is_boolean(ctx.trivial);
  const bool g = is_groupoid(*ctx.cat);
  if (b != g) return "Boolean verdict disagrees with the groupoid check";
  std::ostringstream os;
  os << "ok: boolean=" << b << " groupoid=" << g;
  return os.str();
}

std::string check_de_morgan_iff_ore(const Ctx& ctx) {
  const bool m = is_de_morgan(ctx.trivial);
  const bool o = satisfies_right_ore(*ctx.cat);
  if (m != o) return "De Morgan verdict disagrees with the right Ore check";
  std::ostringstream os;
  os << "ok: de_morgan=" << m << " right_ore=" << o;
  return os.str();
}

std::string check_boolean_implies_de_morgan(const Ctx& ctx) {
  for (const auto& j : ctx.topologies)
    if (is_boolean(j) && !is_de_morgan(j))
      return "a Boolean site is not De Morgan";
  return "";
}

std::string check_completion_routes(const Ctx& ctx) {
  for (const auto& j : ctx.topologies) {
    if (!(booleanization(j) == booleanization_by_densification(j)))
      return "booleanization routes disagree";
    if (!(demorganization(j) == demorganization_by_densification(j)))
      return "demorganization routes disagree";
  }
  return "";
}

std::string check_completion_laws(const Ctx& ctx) {
  for (const auto& j : ctx.topologies) {
    const GrothendieckTopology jb = booleanization(j);
    const GrothendieckTopology jm = demorganization(j);
    if (!topology_leq(j, jm) || !topology_leq(jm, jb))
      return "J ≤ J_m ≤ J_b fails";
    if (!(booleanization(jb) == jb)) return "booleanization not idempotent";
    if (!(demorganization(jm) == jm)) return "demorganization not idempotent";
    if (!is_boolean(jb)) return "booleanization is not Boolean";
    if (!is_de_morgan(jm)) return "demorganization is not De Morgan";
  }
  return "";
}

std::string check_reduction_bijection(const Ctx& ctx) {
  for (const auto& j : ctx.topologies) {
    const ReducedSite red = reduced_subcategory(j);
    for (ObjId c = 0; c < ctx.cat->object_count(); ++c) {
      const bool kept = red.site.keeps_object(c);
      const bool empty_covers =
          j.covers(c).count(Sieve::empty(ctx.cat, c)) > 0;
      if (kept == empty_covers) return "kept objects mismatch the definition";
    }
    if (!topology_leq(red.topology, dense_topology(red.site.category)))
      return "restricted topology not below the dense topology";

    for (const auto& j2 : ctx.topologies) {
      if (!topology_leq(j, j2)) continue;
      const GrothendieckTopology back = extend_topology(
          restrict_topology(j2, red.site), red.site, j);
      if (!(back == j2)) return "extend(restrict(J')) ≠ J' over the base";
    }
    for (const auto& z : enumerate_topologies(red.site.category, ctx.bound)) {
      if (!topology_leq(red.topology, z)) continue;
      const GrothendieckTopology back =
          restrict_topology(extend_topology(z, red.site, j), red.site);
      if (!(back == z)) return "restrict(extend(Z)) ≠ Z over the base";
    }
  }
  return "";
}

}  // namespace

std::vector<std::pair<std::string, PresheafPtr>> standard_presheaves(
    const CategoryPtr& cat) {
  std::vector<std::pair<std::string, PresheafPtr>> out;
  for (ObjId c = 0; c < cat->object_count(); ++c)
    out.emplace_back("yoneda(" + cat->object_name(c) + ")",
                     Presheaf::yoneda(cat, c));
  out.emplace_back("const2", Presheaf::constant(cat, {"p", "q"}));
  return out;
}

std::vector<OracleCheck> run_oracle(const CategoryPtr& cat,
                                    const OracleOptions& options) {
  std::vector<std::vector<Sieve>> sieves;
  for (ObjId c = 0; c < cat->object_count(); ++c)
    sieves.push_back(enumerate_sieves(cat, c));
  auto presheaves = standard_presheaves(cat);
  std::map<std::string, std::vector<Subpresheaf>> subs;
  for (const auto& [name, e] : presheaves)
    subs[name] = enumerate_subpresheaves(e, options.bound);

  Ctx ctx{cat,
          std::move(sieves),
          enumerate_topologies(cat, options.bound),
          std::move(presheaves),
          std::move(subs),
          trivial_topology(cat),
          dense_topology(cat),
          de_morgan_topology(cat),
          options.bound};

  const std::pair<std::string, CheckFn> checks[] = {
      {"fincat.groupoid_implies_right_ore", check_groupoid_ore},
      {"fincat.opposite_involution", check_opposite_involution},
      {"sieve.heyting_complement", check_heyting_complement},
      {"sieve.implication_adjunction", check_implication_adjunction},
      {"sieve.pullback_lattice_hom", check_pullback_hom},
      {"sieve.right_ore_complement", check_ore_complement},
      {"topology.constructor_axioms", check_constructor_axioms},
      {"topology.dense_matches_excluded_middle_generation",
       check_dense_generation},
      {"topology.de_morgan_leq_dense", check_de_morgan_leq_dense},
      {"topology.generate_minimality", check_generate_minimality},
      {"topology.enumerated_above_trivial", check_enumerated_above_trivial},
      {"topology.leq_dense_iff_stably_nonempty",
       check_leq_dense_iff_stably_nonempty},
      {"topology.close_sieve_closure_operator", check_close_sieve_operator},
      {"topology.subcanonical_matches_universal",
       check_subcanonical_universal},
      {"presheaf.yoneda_bijection", check_yoneda_bijection},
      {"presheaf.sub_heyting", check_sub_heyting},
      {"presheaf.element_sieves", check_element_sieves},
      {"presheaf.subobject_closure", check_subobject_closure},
      {"presheaf.densifying_minimality", check_densifying_minimality},
      {"presheaf.closed_complement_stability",
       check_closed_complement_stability},
      {"presheaf.closed_sub_not", check_closed_sub_not},
      {"presheaf.representables_generate", check_representables_generate},
      {"reduct.boolean_iff_groupoid", check_boolean_iff_groupoid},
      {"reduct.de_morgan_iff_right_ore", check_de_morgan_iff_ore},
      {"reduct.boolean_implies_de_morgan", check_boolean_implies_de_morgan},
      {"reduct.completion_routes_agree", check_completion_routes},
      {"reduct.completion_laws", check_completion_laws},
      {"reduct.restriction_extension_bijection", check_reduction_bijection},
  };

  std::vector<OracleCheck> out;
  for (const auto& [name, fn] : checks) out.push_back(run_one(ctx, name, fn));
  return out;
}

}  // namespace finsite
