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

#include "finsite/category.hpp"

#include <algorithm>
#include <set>

#include "finsite/error.hpp"

namespace finsite {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::kMissingComposite: return "MissingComposite";
    case Errc::kDomCodMismatch: return "DomCodMismatch";
    case Errc::kIdentityViolation: return "IdentityViolation";
    case Errc::kAssociativityViolation: return "AssociativityViolation";
    case Errc::kWrongCodomain: return "WrongCodomain";
    case Errc::kCodomainMismatch: return "CodomainMismatch";
    case Errc::kCategoryMismatch: return "CategoryMismatch";
    case Errc::kNotASieve: return "NotASieve";
    case Errc::kAxiomViolation: return "AxiomViolation";
    case Errc::kParentMismatch: return "ParentMismatch";
    case Errc::kElementNotFound: return "ElementNotFound";
    case Errc::kNotClosed: return "NotClosed";
    case Errc::kNotDense: return "NotDense";
    case Errc::kObjectNotInSubcategory: return "ObjectNotInSubcategory";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kParseError: return "ParseError";
  }
  return "Error";
}

namespace {

[[noreturn]] void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace

std::shared_ptr<const FiniteCategory> FiniteCategory::validate(
    const CategoryDescription& raw) {
  auto cat = std::shared_ptr<FiniteCategory>(new FiniteCategory());

  cat->objects_ = raw.objects;
  std::sort(cat->objects_.begin(), cat->objects_.end());
  for (size_t i = 0; i < cat->objects_.size(); ++i) {
    if (cat->objects_[i].empty())
      fail(Errc::kParseError, "empty object name");
    if (i > 0 && cat->objects_[i] == cat->objects_[i - 1])
      fail(Errc::kParseError, "duplicate object '" + cat->objects_[i] + "'");
  }
  const int n_obj = static_cast<int>(cat->objects_.size());

  auto obj_id = [&](const std::string& name, const char* where) -> ObjId {
    auto it = std::lower_bound(cat->objects_.begin(), cat->objects_.end(), name);
    if (it == cat->objects_.end() || *it != name)
      fail(Errc::kParseError,
           std::string("unknown object '") + name + "' in " + where);
    return static_cast<ObjId>(it - cat->objects_.begin());
  };

  std::vector<CategoryDescription::Arrow> arrows = raw.arrows;
  std::sort(arrows.begin(), arrows.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  for (size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i].name.empty()) fail(Errc::kParseError, "empty arrow name");
    if (i > 0 && arrows[i].name == arrows[i - 1].name)
      fail(Errc::kParseError, "duplicate arrow '" + arrows[i].name + "'");
    cat->arrows_.push_back({arrows[i].name, obj_id(arrows[i].dom, "arrow dom"),
                            obj_id(arrows[i].cod, "arrow cod")});
  }
  const int n_arr = static_cast<int>(cat->arrows_.size());

  auto arr_id = [&](const std::string& name, const char* where) -> ArrId {
    auto it = std::lower_bound(
        cat->arrows_.begin(), cat->arrows_.end(), name,
        [](const ArrowRec& a, const std::string& s) { return a.name < s; });
    if (it == cat->arrows_.end() || it->name != name)
      fail(Errc::kParseError,
           std::string("unknown arrow '") + name + "' in " + where);
    return static_cast<ArrId>(it - cat->arrows_.begin());
  };

  cat->identities_.assign(n_obj, kNoArrow);
  for (const auto& [obj, arr] : raw.identities) {
    const ObjId o = obj_id(obj, "identities");
    const ArrId a = arr_id(arr, "identities");
    if (cat->arrows_[a].dom != o || cat->arrows_[a].cod != o)
      fail(Errc::kIdentityViolation,
           "identity '" + arr + "' of '" + obj + "' is not an endo-arrow of it");
    cat->identities_[o] = a;
  }
  for (ObjId o = 0; o < n_obj; ++o)
    if (cat->identities_[o] == kNoArrow)
      fail(Errc::kIdentityViolation,
           "object '" + cat->objects_[o] + "' has no identity arrow");

  cat->table_.assign(static_cast<size_t>(n_arr) * n_arr, kNoArrow);
  for (const auto& entry : raw.compose) {
    const ArrId first = arr_id(entry.first, "compose");
    const ArrId then = arr_id(entry.then, "compose");
    const ArrId result = arr_id(entry.result, "compose");
    if (cat->arrows_[first].cod != cat->arrows_[then].dom)
      fail(Errc::kDomCodMismatch,
           "pair (first=" + entry.first + ", then=" + entry.then +
               ") is not composable");
    if (cat->arrows_[result].dom != cat->arrows_[first].dom ||
        cat->arrows_[result].cod != cat->arrows_[then].cod)
      fail(Errc::kDomCodMismatch,
           "composite " + entry.then + "∘" + entry.first +
               " = " + entry.result + " has wrong endpoints");
    ArrId& slot = cat->table_[static_cast<size_t>(first) * n_arr + then];
    if (slot != kNoArrow && slot != result)
      fail(Errc::kDomCodMismatch,
           "conflicting entries for " + entry.then + "∘" + entry.first);
    slot = result;
  }

  // Totality over composable pairs.
  for (ArrId f = 0; f < n_arr; ++f)
    for (ArrId g = 0; g < n_arr; ++g)
      if (cat->arrows_[f].cod == cat->arrows_[g].dom &&
          cat->compose(f, g) == kNoArrow)
        fail(Errc::kMissingComposite,
             "no entry for " + cat->arrows_[g].name + "∘" +
                 cat->arrows_[f].name + " (first=" + cat->arrows_[f].name +
                 ", then=" + cat->arrows_[g].name + ")");

  // Identity laws: id_cod(f)∘f = f = f∘id_dom(f).
  for (ArrId f = 0; f < n_arr; ++f) {
    const ArrId left = cat->compose(f, cat->identities_[cat->arrows_[f].cod]);
    const ArrId right = cat->compose(cat->identities_[cat->arrows_[f].dom], f);
    if (left != f || right != f)
      fail(Errc::kIdentityViolation,
           "identity laws fail at arrow " + cat->arrows_[f].name);
  }

  // Associativity over all composable triples.
  for (ArrId f = 0; f < n_arr; ++f)
    for (ArrId g = 0; g < n_arr; ++g) {
      if (cat->arrows_[f].cod != cat->arrows_[g].dom) continue;
      for (ArrId h = 0; h < n_arr; ++h) {
        if (cat->arrows_[g].cod != cat->arrows_[h].dom) continue;
        const ArrId a = cat->compose(cat->compose(f, g), h);
        const ArrId b = cat->compose(f, cat->compose(g, h));
        if (a != b)
          fail(Errc::kAssociativityViolation,
               "h∘(g∘f) ≠ (h∘g)∘f for (f=" + cat->arrows_[f].name +
                   ", g=" + cat->arrows_[g].name +
                   ", h=" + cat->arrows_[h].name + ")");
      }
    }

  cat->into_.assign(n_obj, {});
  cat->hom_.assign(static_cast<size_t>(n_obj) * n_obj, {});
  for (ArrId f = 0; f < n_arr; ++f) {
    cat->into_[cat->arrows_[f].cod].push_back(f);
    cat->hom_[static_cast<size_t>(cat->arrows_[f].dom) * n_obj +
              cat->arrows_[f].cod]
        .push_back(f);
  }

  return cat;
}

std::optional<ObjId> FiniteCategory::find_object(std::string_view name) const {
  auto it = std::lower_bound(objects_.begin(), objects_.end(), name);
  if (it == objects_.end() || *it != name) return std::nullopt;
  return static_cast<ObjId>(it - objects_.begin());
}

std::optional<ArrId> FiniteCategory::find_arrow(std::string_view name) const {
  auto it = std::lower_bound(
      arrows_.begin(), arrows_.end(), name,
      [](const ArrowRec& a, std::string_view s) { return a.name < s; });
  if (it == arrows_.end() || it->name != name) return std::nullopt;
  return static_cast<ArrId>(it - arrows_.begin());
}

bool FiniteCategory::is_identity(ArrId a) const {
  return identities_[arrows_[a].dom] == a && arrows_[a].dom == arrows_[a].cod;
}

CategoryDescription FiniteCategory::description() const {
  CategoryDescription d;
  d.objects = objects_;
  for (const auto& a : arrows_)
    d.arrows.push_back({a.name, objects_[a.dom], objects_[a.cod]});
  for (ObjId o = 0; o < object_count(); ++o)
    d.identities[objects_[o]] = arrows_[identities_[o]].name;
  for (ArrId f = 0; f < arrow_count(); ++f)
    for (ArrId g = 0; g < arrow_count(); ++g)
      if (composable(f, g))
        d.compose.push_back(
            {arrows_[f].name, arrows_[g].name, arrows_[compose(f, g)].name});
  return d;
}

bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
  if (&a == &b) return true;
  const auto da = a.description();
  const auto db = b.description();
  auto arrows_equal = [](const CategoryDescription& x,
                         const CategoryDescription& y) {
    if (x.arrows.size() != y.arrows.size()) return false;
    for (size_t i = 0; i < x.arrows.size(); ++i)
      if (x.arrows[i].name != y.arrows[i].name ||
          x.arrows[i].dom != y.arrows[i].dom ||
          x.arrows[i].cod != y.arrows[i].cod)
        return false;
    return true;
  };
  auto compose_equal = [](const CategoryDescription& x,
                          const CategoryDescription& y) {
    if (x.compose.size() != y.compose.size()) return false;
    for (size_t i = 0; i < x.compose.size(); ++i)
      if (x.compose[i].first != y.compose[i].first ||
          x.compose[i].then != y.compose[i].then ||
          x.compose[i].result != y.compose[i].result)
        return false;
    return true;
  };
  return da.objects == db.objects && arrows_equal(da, db) &&
         da.identities == db.identities && compose_equal(da, db);
}

CategoryPtr opposite(const FiniteCategory& cat) {
  CategoryDescription d = cat.description();
  for (auto& a : d.arrows) std::swap(a.dom, a.cod);
  for (auto& entry : d.compose) std::swap(entry.first, entry.then);
  return FiniteCategory::validate(d);
}

bool is_groupoid(const FiniteCategory& cat) {
  for (ArrId f = 0; f < cat.arrow_count(); ++f) {
    const ArrId want_left = cat.identity(cat.dom(f));
    const ArrId want_right = cat.identity(cat.cod(f));
    bool invertible = false;
    for (ArrId g : cat.hom(cat.cod(f), cat.dom(f))) {
      if (cat.compose(f, g) == want_left && cat.compose(g, f) == want_right) {
        invertible = true;
        break;
      }
    }
    if (!invertible) return false;
  }
  return true;
}

bool satisfies_right_ore(const FiniteCategory& cat) {
  for (ArrId f = 0; f < cat.arrow_count(); ++f)
    for (ArrId g = 0; g < cat.arrow_count(); ++g) {
      if (cat.cod(f) != cat.cod(g)) continue;
      bool completed = false;
      for (ArrId h = 0; h < cat.arrow_count() && !completed; ++h) {
        if (cat.cod(h) != cat.dom(f)) continue;
        for (ArrId k : cat.hom(cat.dom(h), cat.dom(g))) {
          if (cat.compose(h, f) == cat.compose(k, g)) {
            completed = true;
            break;
          }
        }
      }
      if (!completed) return false;
    }
  return true;
}

}  // namespace finsite
