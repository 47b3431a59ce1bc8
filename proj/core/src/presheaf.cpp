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

#include "finsite/presheaf.hpp"

#include <algorithm>

namespace finsite {

std::shared_ptr<const Presheaf> Presheaf::validate(CategoryPtr cat,
                                                   const Description& raw) {
  auto e = std::shared_ptr<Presheaf>(new Presheaf());
  e->cat_ = cat;
  e->values_.assign(cat->object_count(), {});

  for (const auto& [obj, elems] : raw.values) {
    const auto o = cat->find_object(obj);
    if (!o)
      throw Error(Errc::kParseError, "unknown object '" + obj + "' in values");
    auto sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i].empty())
        throw Error(Errc::kParseError, "empty element name at '" + obj + "'");
      if (i > 0 && sorted[i] == sorted[i - 1])
        throw Error(Errc::kParseError,
                    "duplicate element '" + sorted[i] + "' at '" + obj + "'");
    }
    e->values_[*o] = std::move(sorted);
  }

  e->restriction_.assign(cat->arrow_count(), {});
  for (ArrId f = 0; f < cat->arrow_count(); ++f) {
    const ObjId src = cat->cod(f);  // restriction goes E(cod f) → E(dom f)
    const ObjId dst = cat->dom(f);
    auto& map = e->restriction_[f];
    map.assign(e->values_[src].size(), -1);
    auto it = raw.restriction.find(cat->arrow_name(f));
    if (it != raw.restriction.end()) {
      for (const auto& [from, to] : it->second) {
        const auto fi = e->find_element(src, from);
        const auto ti = e->find_element(dst, to);
        if (!fi || !ti)
          throw Error(Errc::kParseError,
                      "restriction along '" + cat->arrow_name(f) +
                          "' mentions unknown element '" +
                          (fi ? to : from) + "'");
        map[*fi] = *ti;
      }
    }
    for (size_t i = 0; i < map.size(); ++i)
      if (map[i] < 0)
        throw Error(Errc::kAxiomViolation,
                    "restriction along '" + cat->arrow_name(f) +
                        "' is not total: no image for '" +
                        e->values_[src][i] + "'");
  }

  // E(id) = id and E(g∘f) = E(f)∘E(g), exhaustively.
  for (ObjId o = 0; o < cat->object_count(); ++o) {
    const ArrId id = cat->identity(o);
    for (int x = 0; x < e->value_count(o); ++x)
      if (e->restrict_along(id, x) != x)
        throw Error(Errc::kAxiomViolation,
                    "restriction along identity of '" + cat->object_name(o) +
                        "' moves '" + e->values_[o][x] + "'");
  }
  for (ArrId f = 0; f < cat->arrow_count(); ++f)
    for (ArrId g = 0; g < cat->arrow_count(); ++g) {
      if (!cat->composable(f, g)) continue;
      const ArrId gf = cat->compose(f, g);
      for (int x = 0; x < e->value_count(cat->cod(g)); ++x)
        if (e->restrict_along(gf, x) !=
            e->restrict_along(f, e->restrict_along(g, x)))
          throw Error(Errc::kAxiomViolation,
                      "functoriality fails along " + cat->arrow_name(g) + "∘" +
                          cat->arrow_name(f) + " at element '" +
                          e->values_[cat->cod(g)][x] + "'");
    }

  return e;
}

std::shared_ptr<const Presheaf> Presheaf::yoneda(CategoryPtr cat, ObjId c) {
  Description d;
  for (ObjId o = 0; o < cat->object_count(); ++o) {
    auto& elems = d.values[cat->object_name(o)];
    for (ArrId h : cat->hom(o, c)) elems.push_back(cat->arrow_name(h));
  }
  for (ArrId f = 0; f < cat->arrow_count(); ++f) {
    auto& map = d.restriction[cat->arrow_name(f)];
    for (ArrId h : cat->hom(cat->cod(f), c))
      map[cat->arrow_name(h)] = cat->arrow_name(cat->compose(f, h));
  }
  return validate(std::move(cat), d);
}

std::shared_ptr<const Presheaf> Presheaf::constant(
    CategoryPtr cat, std::vector<std::string> elements) {
  Description d;
  for (ObjId o = 0; o < cat->object_count(); ++o)
    d.values[cat->object_name(o)] = elements;
  for (ArrId f = 0; f < cat->arrow_count(); ++f) {
    auto& map = d.restriction[cat->arrow_name(f)];
    for (const auto& e : elements) map[e] = e;
  }
  return validate(std::move(cat), d);
}

std::optional<int> Presheaf::find_element(ObjId o,
                                          std::string_view name) const {
  const auto& v = values_[o];
  auto it = std::lower_bound(v.begin(), v.end(), name);
  if (it == v.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - v.begin());
}

int Presheaf::total_elements() const {
  int n = 0;
  for (const auto& v : values_) n += static_cast<int>(v.size());
  return n;
}

Presheaf::Description Presheaf::description() const {
  Description d;
  for (ObjId o = 0; o < cat_->object_count(); ++o)
    d.values[cat_->object_name(o)] = values_[o];
  for (ArrId f = 0; f < cat_->arrow_count(); ++f) {
    auto& map = d.restriction[cat_->arrow_name(f)];
    for (size_t i = 0; i < restriction_[f].size(); ++i)
      map[values_[cat_->cod(f)][i]] = values_[cat_->dom(f)][restriction_[f][i]];
  }
  return d;
}

Subpresheaf::Subpresheaf(PresheafPtr parent,
                         std::vector<std::vector<bool>> chosen)
    : parent_(std::move(parent)), chosen_(std::move(chosen)) {
  const auto& cat = parent_->category();
  if (static_cast<int>(chosen_.size()) != cat->object_count())
    throw Error(Errc::kParseError, "chosen sets do not match the objects");
  for (ObjId o = 0; o < cat->object_count(); ++o)
    if (static_cast<int>(chosen_[o].size()) != parent_->value_count(o))
      throw Error(Errc::kParseError,
                  "chosen set at '" + cat->object_name(o) +
                      "' does not match the value set");
  for (ArrId f = 0; f < cat->arrow_count(); ++f)
    for (int x = 0; x < parent_->value_count(cat->cod(f)); ++x)
      if (chosen_[cat->cod(f)][x] &&
          !chosen_[cat->dom(f)][parent_->restrict_along(f, x)])
        throw Error(Errc::kAxiomViolation,
                    "not closed under restriction: '" +
                        parent_->element_name(cat->cod(f), x) +
                        "' restricts outside along '" + cat->arrow_name(f) +
                        "'");
}

Subpresheaf Subpresheaf::empty(PresheafPtr parent) {
  std::vector<std::vector<bool>> chosen;
  const auto& cat = parent->category();
  for (ObjId o = 0; o < cat->object_count(); ++o)
    chosen.emplace_back(parent->value_count(o), false);
  return Subpresheaf(std::move(parent), std::move(chosen));
}

Subpresheaf Subpresheaf::full(PresheafPtr parent) {
  std::vector<std::vector<bool>> chosen;
  const auto& cat = parent->category();
  for (ObjId o = 0; o < cat->object_count(); ++o)
    chosen.emplace_back(parent->value_count(o), true);
  return Subpresheaf(std::move(parent), std::move(chosen));
}

int Subpresheaf::size(ObjId o) const {
  return static_cast<int>(std::count(chosen_[o].begin(), chosen_[o].end(), true));
}

int Subpresheaf::total_size() const {
  int n = 0;
  for (ObjId o = 0; o < static_cast<ObjId>(chosen_.size()); ++o) n += size(o);
  return n;
}

bool Subpresheaf::is_full() const {
  return total_size() == parent_->total_elements();
}

bool Subpresheaf::is_empty() const { return total_size() == 0; }

bool Subpresheaf::subset_of(const Subpresheaf& other) const {
  for (size_t o = 0; o < chosen_.size(); ++o)
    for (size_t x = 0; x < chosen_[o].size(); ++x)
      if (chosen_[o][x] && !other.chosen_[o][x]) return false;
  return true;
}

namespace {

void require_same_parent(const Subpresheaf& a, const Subpresheaf& b) {
  if (a.parent().get() != b.parent().get())
    throw Error(Errc::kParentMismatch,
                "subpresheaves of different presheaves");
}

std::vector<std::vector<bool>> blank(const PresheafPtr& e) {
  std::vector<std::vector<bool>> chosen;
  for (ObjId o = 0; o < e->category()->object_count(); ++o)
    chosen.emplace_back(e->value_count(o), false);
  return chosen;
}

}  // namespace

Subpresheaf sub_meet(const Subpresheaf& a, const Subpresheaf& b) {
  require_same_parent(a, b);
  auto chosen = blank(a.parent());
  for (ObjId o = 0; o < static_cast<ObjId>(chosen.size()); ++o)
    for (size_t x = 0; x < chosen[o].size(); ++x)
      chosen[o][x] = a.contains(o, static_cast<int>(x)) &&
                     b.contains(o, static_cast<int>(x));
  return Subpresheaf(a.parent(), std::move(chosen));
}

Subpresheaf sub_join(const Subpresheaf& a, const Subpresheaf& b) {
  require_same_parent(a, b);
  auto chosen = blank(a.parent());
  for (ObjId o = 0; o < static_cast<ObjId>(chosen.size()); ++o)
    for (size_t x = 0; x < chosen[o].size(); ++x)
      chosen[o][x] = a.contains(o, static_cast<int>(x)) ||
                     b.contains(o, static_cast<int>(x));
  return Subpresheaf(a.parent(), std::move(chosen));
}

Subpresheaf sub_implies(const Subpresheaf& a, const Subpresheaf& b) {
  require_same_parent(a, b);
  const auto& e = a.parent();
  const auto& cat = e->category();
  auto chosen = blank(e);
  for (ObjId c = 0; c < cat->object_count(); ++c)
    for (int x = 0; x < e->value_count(c); ++x) {
      bool ok = true;
      for (ArrId f : cat->arrows_into(c)) {
        const int y = e->restrict_along(f, x);
        if (a.contains(cat->dom(f), y) && !b.contains(cat->dom(f), y)) {
          ok = false;
          break;
        }
      }
      chosen[c][x] = ok;
    }
  return Subpresheaf(e, std::move(chosen));
}

Subpresheaf sub_not(const Subpresheaf& a) {
  const auto& e = a.parent();
  const auto& cat = e->category();
  auto chosen = blank(e);
  for (ObjId c = 0; c < cat->object_count(); ++c)
    for (int x = 0; x < e->value_count(c); ++x) {
      bool outside = true;
      for (ArrId f : cat->arrows_into(c))
        if (a.contains(cat->dom(f), e->restrict_along(f, x))) {
          outside = false;
          break;
        }
      chosen[c][x] = outside;
    }
  return Subpresheaf(e, std::move(chosen));
}

Sieve element_sieve(const Subpresheaf& a, ObjId c, int element) {
  const auto& e = a.parent();
  const auto& cat = e->category();
  if (element < 0 || element >= e->value_count(c))
    throw Error(Errc::kElementNotFound,
                "no such element at '" + cat->object_name(c) + "'");
  std::vector<ArrId> arrows;
  for (ArrId f : cat->arrows_into(c))
    if (a.contains(cat->dom(f), e->restrict_along(f, element)))
      arrows.push_back(f);
  return Sieve(cat, c, std::move(arrows));
}

Subpresheaf close_subobject(const GrothendieckTopology& j,
                            const Subpresheaf& a) {
  const auto& e = a.parent();
  const auto& cat = e->category();
  if (j.category().get() != cat.get())
    throw Error(Errc::kCategoryMismatch,
                "topology and subpresheaf live on different categories");
  auto chosen = blank(e);
  for (ObjId c = 0; c < cat->object_count(); ++c)
    for (int x = 0; x < e->value_count(c); ++x)
      chosen[c][x] = j.covers_sieve(element_sieve(a, c, x));
  return Subpresheaf(e, std::move(chosen));
}

bool is_dense_mono(const GrothendieckTopology& j, const Subpresheaf& a) {
  return close_subobject(j, a).is_full();
}

GrothendieckTopology densifying_topology(const GrothendieckTopology& j,
                                         const Subpresheaf& a) {
  const auto& e = a.parent();
  const auto& cat = e->category();
  if (j.category().get() != cat.get())
    throw Error(Errc::kCategoryMismatch,
                "topology and subpresheaf live on different categories");
  std::vector<Sieve> family;
  for (ObjId c = 0; c < cat->object_count(); ++c) {
    for (const Sieve& s : j.covers(c)) family.push_back(s);
    for (int x = 0; x < e->value_count(c); ++x)
      family.push_back(element_sieve(a, c, x));
  }
  return generate_topology(cat, family);
}

Subpresheaf closed_sub_not(const GrothendieckTopology& j,
                           const Subpresheaf& a) {
  const Subpresheaf closure = close_subobject(j, a);
  if (!(closure == a))
    throw Error(Errc::kNotClosed, "subpresheaf is not closed");
  return sub_implies(a, close_subobject(j, Subpresheaf::empty(a.parent())));
}

std::vector<Subpresheaf> enumerate_subpresheaves(const PresheafPtr& parent,
                                                 int max_total_elements) {
  const auto& cat = parent->category();
  const int total = parent->total_elements();
  if (total > max_total_elements || total > 30)
    throw Error(Errc::kTooLarge,
                std::to_string(total) + " elements exceed the bound of " +
                    std::to_string(std::min(max_total_elements, 30)));

  // Flat index over all (object, element) pairs.
  std::vector<std::pair<ObjId, int>> slots;
  for (ObjId o = 0; o < cat->object_count(); ++o)
    for (int x = 0; x < parent->value_count(o); ++x) slots.emplace_back(o, x);

  std::vector<Subpresheaf> out;
  for (unsigned mask = 0; mask < (1u << total); ++mask) {
    auto chosen = blank(parent);
    for (int i = 0; i < total; ++i)
      if (mask & (1u << i)) chosen[slots[i].first][slots[i].second] = true;
    bool closed = true;
    for (ArrId f = 0; f < cat->arrow_count() && closed; ++f)
      for (int x = 0; x < parent->value_count(cat->cod(f)); ++x)
        if (chosen[cat->cod(f)][x] &&
            !chosen[cat->dom(f)][parent->restrict_along(f, x)]) {
          closed = false;
          break;
        }
    if (closed) out.emplace_back(parent, std::move(chosen));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subpresheaf subpresheaf_from_sieve(const PresheafPtr& yc, const Sieve& s) {
  const auto& cat = yc->category();
  if (s.category().get() != cat.get())
    throw Error(Errc::kCategoryMismatch,
                "sieve belongs to a different category");
  auto chosen = blank(yc);
  for (ArrId f : s.arrows()) {
    const auto x = yc->find_element(cat->dom(f), cat->arrow_name(f));
    if (!x)
      throw Error(Errc::kElementNotFound,
                  "presheaf is not the representable at '" +
                      cat->object_name(s.cod()) + "'");
    chosen[cat->dom(f)][*x] = true;
  }
  return Subpresheaf(yc, std::move(chosen));
}

Sieve sieve_from_subpresheaf(const Subpresheaf& sub_of_yc, ObjId c) {
  const auto& e = sub_of_yc.parent();
  const auto& cat = e->category();
  std::vector<ArrId> arrows;
  for (ObjId d = 0; d < cat->object_count(); ++d)
    for (int x = 0; x < e->value_count(d); ++x) {
      if (!sub_of_yc.contains(d, x)) continue;
      const auto f = cat->find_arrow(e->element_name(d, x));
      if (!f || cat->cod(*f) != c || cat->dom(*f) != d)
        throw Error(Errc::kElementNotFound,
                    "presheaf is not the representable at '" +
                        cat->object_name(c) + "'");
      arrows.push_back(*f);
    }
  return Sieve(cat, c, std::move(arrows));
}

}  // namespace finsite
