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

#include "finsite/topology.hpp"

#include <algorithm>
#include <map>

namespace finsite {

namespace {

std::string sieve_label(const Sieve& s) {
  std::string out = "{";
  bool first = true;
  for (ArrId a : s.arrows()) {
    if (!first) out += ", ";
    out += s.category()->arrow_name(a);
    first = false;
  }
  return out + "} on " + s.category()->object_name(s.cod());
}

std::vector<std::vector<Sieve>> sieves_by_object(const CategoryPtr& cat) {
  std::vector<std::vector<Sieve>> all(cat->object_count());
  for (ObjId c = 0; c < cat->object_count(); ++c)
    all[c] = enumerate_sieves(cat, c);
  return all;
}

bool in_covers(const CoverSets& covers, const Sieve& s) {
  return covers[s.cod()].count(s) > 0;
}

std::optional<TopologyViolation> check_with(
    const CategoryPtr& cat, const CoverSets& covers,
    const std::vector<std::vector<Sieve>>& all) {
  for (ObjId c = 0; c < cat->object_count(); ++c)
    if (!covers[c].count(Sieve::maximal(cat, c)))
      return TopologyViolation{TopologyViolation::Kind::kMaximality, c,
                               std::nullopt, std::nullopt, std::nullopt};
  for (ObjId c = 0; c < cat->object_count(); ++c)
    for (const Sieve& s : covers[c])
      for (ArrId f : cat->arrows_into(c))
        if (!in_covers(covers, pullback_sieve(s, f)))
          return TopologyViolation{TopologyViolation::Kind::kStability, c, s,
                                   std::nullopt, f};
  for (ObjId c = 0; c < cat->object_count(); ++c)
    for (const Sieve& s : covers[c])
      for (const Sieve& t : all[c])
        if (s.subset_of(t) && !covers[c].count(t))
          return TopologyViolation{TopologyViolation::Kind::kUpwardClosure, c,
                                   s, t, std::nullopt};
  for (ObjId c = 0; c < cat->object_count(); ++c)
    for (const Sieve& r : all[c]) {
      if (covers[c].count(r)) continue;
      for (const Sieve& s : covers[c]) {
        bool locally_covering = true;
        for (ArrId f : s.arrows())
          if (!in_covers(covers, pullback_sieve(r, f))) {
            locally_covering = false;
            break;
          }
        if (locally_covering)
          return TopologyViolation{TopologyViolation::Kind::kTransitivity, c,
                                   s, r, std::nullopt};
      }
    }
  return std::nullopt;
}

}  // namespace

std::string TopologyViolation::describe(const FiniteCategory& cat) const {
  switch (kind) {
    case Kind::kMaximality:
      return "maximality: the maximal sieve on '" + cat.object_name(object) +
             "' is not covering";
    case Kind::kStability:
      return "stability: pullback of " + sieve_label(*sieve) + " along '" +
             cat.arrow_name(*arrow) + "' is not covering";
    case Kind::kTransitivity:
      return "transitivity: " + sieve_label(*other) +
             " is locally covering over " + sieve_label(*sieve) +
             " but not covering";
    case Kind::kUpwardClosure:
      return "upward closure: " + sieve_label(*other) + " contains covering " +
             sieve_label(*sieve) + " but is not covering";
  }
  return "axiom violation";
}

std::optional<TopologyViolation> check_topology_axioms(
    const CategoryPtr& cat, const CoverSets& covers) {
  return check_with(cat, covers, sieves_by_object(cat));
}

GrothendieckTopology::GrothendieckTopology(CategoryPtr cat, CoverSets covers)
    : cat_(std::move(cat)), covers_(std::move(covers)) {}

GrothendieckTopology make_topology_unchecked(CategoryPtr cat,
                                             CoverSets covers) {
  return GrothendieckTopology(std::move(cat), std::move(covers));
}

namespace {

/// Constructors funnel through here so an internal inconsistency cannot
/// produce a value violating the axioms.
GrothendieckTopology finish(CategoryPtr cat, CoverSets covers) {
  if (auto bad = check_topology_axioms(cat, covers))
    throw Error(Errc::kAxiomViolation, bad->describe(*cat));
  return make_topology_unchecked(std::move(cat), std::move(covers));
}

}  // namespace

GrothendieckTopology GrothendieckTopology::checked(CategoryPtr cat,
                                                   CoverSets covers) {
  return finish(std::move(cat), std::move(covers));
}

bool GrothendieckTopology::covers_sieve(const Sieve& s) const {
  if (s.category().get() != cat_.get())
    throw Error(Errc::kCategoryMismatch,
                "sieve belongs to a different category");
  return covers_[s.cod()].count(s) > 0;
}

int GrothendieckTopology::total_covers() const {
  int n = 0;
  for (const auto& set : covers_) n += static_cast<int>(set.size());
  return n;
}

GrothendieckTopology trivial_topology(CategoryPtr cat) {
  CoverSets covers(cat->object_count());
  for (ObjId c = 0; c < cat->object_count(); ++c)
    covers[c].insert(Sieve::maximal(cat, c));
  return make_topology_unchecked(std::move(cat), std::move(covers));
}

GrothendieckTopology generate_topology(CategoryPtr cat,
                                       std::span<const Sieve> family) {
  CoverSets covers(cat->object_count());
  for (ObjId c = 0; c < cat->object_count(); ++c)
    covers[c].insert(Sieve::maximal(cat, c));
  for (const Sieve& s : family) {
    if (s.category().get() != cat.get())
      throw Error(Errc::kCategoryMismatch,
                  "family sieve belongs to a different category");
    covers[s.cod()].insert(s);
  }

  const auto all = sieves_by_object(cat);
  bool changed = true;
  while (changed) {
    changed = false;
    // stability pass
    for (ObjId c = 0; c < cat->object_count(); ++c) {
      const std::vector<Sieve> snapshot(covers[c].begin(), covers[c].end());
      for (const Sieve& s : snapshot)
        for (ArrId f : cat->arrows_into(c)) {
          Sieve pulled = pullback_sieve(s, f);
          if (covers[pulled.cod()].insert(pulled).second) changed = true;
        }
    }
    // transitivity pass
    for (ObjId c = 0; c < cat->object_count(); ++c)
      for (const Sieve& r : all[c]) {
        if (covers[c].count(r)) continue;
        for (const Sieve& s : covers[c]) {
          bool locally_covering = true;
          for (ArrId f : s.arrows())
            if (!in_covers(covers, pullback_sieve(r, f))) {
              locally_covering = false;
              break;
            }
          if (locally_covering) {
            covers[c].insert(r);
            changed = true;
            break;
          }
        }
      }
    // upward-closure pass
    for (ObjId c = 0; c < cat->object_count(); ++c) {
      const std::vector<Sieve> snapshot(covers[c].begin(), covers[c].end());
      for (const Sieve& s : snapshot)
        for (const Sieve& t : all[c])
          if (s.subset_of(t) && covers[c].insert(t).second) changed = true;
    }
  }
  return finish(std::move(cat), std::move(covers));
}

GrothendieckTopology dense_topology(CategoryPtr cat) {
  CoverSets covers(cat->object_count());
  for (ObjId c = 0; c < cat->object_count(); ++c)
    for (const Sieve& s : enumerate_sieves(cat, c))
      if (stably_nonempty(s)) covers[c].insert(s);
  return finish(std::move(cat), std::move(covers));
}

GrothendieckTopology de_morgan_topology(CategoryPtr cat) {
  std::vector<Sieve> family;
  for (ObjId c = 0; c < cat->object_count(); ++c)
    for (const Sieve& r : enumerate_sieves(cat, c))
      family.push_back(sieve_union(sieve_not(r), sieve_not_not(r)));
  return generate_topology(std::move(cat), family);
}

namespace {

void require_same_category(const GrothendieckTopology& a,
                           const GrothendieckTopology& b) {
  if (a.category().get() != b.category().get())
    throw Error(Errc::kCategoryMismatch,
                "topologies on different categories");
}

}  // namespace

bool topology_leq(const GrothendieckTopology& a,
                  const GrothendieckTopology& b) {
  require_same_category(a, b);
  for (ObjId c = 0; c < a.category()->object_count(); ++c)
    for (const Sieve& s : a.covers(c))
      if (!b.covers(c).count(s)) return false;
  return true;
}

GrothendieckTopology topology_join(const GrothendieckTopology& a,
                                   const GrothendieckTopology& b) {
  require_same_category(a, b);
  std::vector<Sieve> family;
  for (ObjId c = 0; c < a.category()->object_count(); ++c) {
    family.insert(family.end(), a.covers(c).begin(), a.covers(c).end());
    family.insert(family.end(), b.covers(c).begin(), b.covers(c).end());
  }
  return generate_topology(a.category(), family);
}

GrothendieckTopology topology_meet(const GrothendieckTopology& a,
                                   const GrothendieckTopology& b) {
  require_same_category(a, b);
  CoverSets covers(a.category()->object_count());
  for (ObjId c = 0; c < a.category()->object_count(); ++c)
    for (const Sieve& s : a.covers(c))
      if (b.covers(c).count(s)) covers[c].insert(s);
  return finish(a.category(), std::move(covers));
}

Sieve close_sieve(const GrothendieckTopology& j, const Sieve& s) {
  const auto& cat = j.category();
  if (s.category().get() != cat.get())
    throw Error(Errc::kCategoryMismatch,
                "sieve belongs to a different category");
  std::vector<ArrId> out;
  for (ArrId f : cat->arrows_into(s.cod()))
    if (j.covers_sieve(pullback_sieve(s, f))) out.push_back(f);
  return Sieve(cat, s.cod(), std::move(out));
}

bool is_closed(const GrothendieckTopology& j, const Sieve& s) {
  return close_sieve(j, s) == s;
}

bool effective_epimorphic(const Sieve& s) {
  const auto& cat = s.category();
  const auto fs = s.arrows();
  const int m = static_cast<int>(fs.size());

  auto index_in_s = [&](ArrId a) {
    return static_cast<int>(
        std::lower_bound(fs.begin(), fs.end(), a) - fs.begin());
  };

  for (ObjId e = 0; e < cat->object_count(); ++e) {
    // All compatible families (x_f)_{f in S}, x_f: dom f → e, brute force.
    std::set<std::vector<ArrId>> families;
    std::vector<std::span<const ArrId>> choices(m);
    bool any = true;
    for (int i = 0; i < m; ++i) {
      choices[i] = cat->hom(cat->dom(fs[i]), e);
      if (choices[i].empty()) any = false;
    }
    if (any || m == 0) {
      std::vector<int> pick(m, 0);
      while (true) {
        std::vector<ArrId> family(m);
        for (int i = 0; i < m; ++i) family[i] = choices[i][pick[i]];
        bool compatible = true;
        for (int i = 0; i < m && compatible; ++i)
          for (ArrId g : cat->arrows_into(cat->dom(fs[i]))) {
            const int j = index_in_s(cat->compose(g, fs[i]));
            if (family[j] != cat->compose(g, family[i])) {
              compatible = false;
              break;
            }
          }
        if (compatible) families.insert(std::move(family));
        int i = 0;
        for (; i < m; ++i) {
          if (++pick[i] < static_cast<int>(choices[i].size())) break;
          pick[i] = 0;
        }
        if (i == m) break;
        if (m == 0) break;
      }
    }

    // The canonical map h ↦ (h∘f)_f must hit every family exactly once.
    std::set<std::vector<ArrId>> image;
    const auto hom_ce = cat->hom(s.cod(), e);
    for (ArrId h : hom_ce) {
      std::vector<ArrId> family(m);
      for (int i = 0; i < m; ++i) family[i] = cat->compose(fs[i], h);
      image.insert(std::move(family));
    }
    if (image.size() != hom_ce.size()) return false;  // not injective
    if (image != families) return false;              // not onto
  }
  return true;
}

bool universally_effective_epimorphic(const Sieve& s) {
  for (ArrId f : s.category()->arrows_into(s.cod()))
    if (!effective_epimorphic(pullback_sieve(s, f))) return false;
  return true;
}

bool is_subcanonical(const GrothendieckTopology& j) {
  for (ObjId c = 0; c < j.category()->object_count(); ++c)
    for (const Sieve& s : j.covers(c))
      if (!effective_epimorphic(s)) return false;
  return true;
}

int total_sieve_count(const CategoryPtr& cat) {
  int total = 0;
  for (ObjId c = 0; c < cat->object_count(); ++c)
    total += static_cast<int>(enumerate_sieves(cat, c).size());
  return total;
}

std::vector<GrothendieckTopology> enumerate_topologies(CategoryPtr cat,
                                                       int max_total_sieves) {
  const auto all = sieves_by_object(cat);
  int total = 0;
  for (const auto& v : all) total += static_cast<int>(v.size());
  if (total > max_total_sieves)
    throw Error(Errc::kTooLarge,
                std::to_string(total) + " sieves exceed the bound of " +
                    std::to_string(max_total_sieves));

  std::vector<GrothendieckTopology> out;
  CoverSets covers(cat->object_count());
  auto recurse = [&](auto&& self, ObjId c) -> void {
    if (c == cat->object_count()) {
      if (!check_with(cat, covers, all))
        out.push_back(make_topology_unchecked(cat, covers));
      return;
    }
    const int n = static_cast<int>(all[c].size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      // The maximal sieve is last in canonical order and must be covering.
      if (n > 0 && !(mask & (1u << (n - 1)))) continue;
      covers[c].clear();
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) covers[c].insert(all[c][i]);
      self(self, c + 1);
    }
    covers[c].clear();
  };
  recurse(recurse, 0);

  std::sort(out.begin(), out.end(),
            [](const GrothendieckTopology& a, const GrothendieckTopology& b) {
              const int na = a.total_covers();
              const int nb = b.total_covers();
              if (na != nb) return na < nb;
              return a.cover_sets() < b.cover_sets();
            });
  return out;
}

}  // namespace finsite
