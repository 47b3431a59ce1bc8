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

#include "finsite/io.hpp"

#include <json.hpp>

namespace finsite {

namespace {

using json = nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded())
    throw Error(Errc::kParseError, "malformed JSON");
  return j;
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw Error(Errc::kParseError, std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string())
    throw Error(Errc::kParseError, std::string("field '") + key +
                                       "' must be a string");
  return v.get<std::string>();
}

std::vector<std::string> string_array(const json& v, const char* what) {
  if (!v.is_array())
    throw Error(Errc::kParseError, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string())
      throw Error(Errc::kParseError,
                  std::string(what) + " must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ObjId object_of(const FiniteCategory& cat, const std::string& name) {
  const auto o = cat.find_object(name);
  if (!o) throw Error(Errc::kParseError, "unknown object '" + name + "'");
  return *o;
}

ArrId arrow_of(const FiniteCategory& cat, const std::string& name) {
  const auto a = cat.find_arrow(name);
  if (!a) throw Error(Errc::kParseError, "unknown arrow '" + name + "'");
  return *a;
}

Sieve sieve_from_json(const json& j, const CategoryPtr& cat) {
  const ObjId cod = object_of(*cat, string_field(j, "cod"));
  std::vector<ArrId> arrows;
  for (const auto& name : string_array(field(j, "arrows"), "sieve arrows"))
    arrows.push_back(arrow_of(*cat, name));
  return Sieve(cat, cod, std::move(arrows));
}

json sieve_to_json(const Sieve& s) {
  json arr = json::array();
  for (ArrId a : s.arrows()) arr.push_back(s.category()->arrow_name(a));
  return json{{"arrows", std::move(arr)},
              {"cod", s.category()->object_name(s.cod())}};
}

json covers_to_json(const GrothendieckTopology& j) {
  const auto& cat = *j.category();
  json covers = json::object();
  for (ObjId c = 0; c < cat.object_count(); ++c) {
    json list = json::array();
    for (const Sieve& s : j.covers(c)) {  // std::set: canonical order
      json arr = json::array();
      for (ArrId a : s.arrows()) arr.push_back(cat.arrow_name(a));
      list.push_back(std::move(arr));
    }
    covers[cat.object_name(c)] = std::move(list);
  }
  return covers;
}

json topology_to_json(const GrothendieckTopology& j,
                      std::string_view category_name) {
  return json{{"category", std::string(category_name)},
              {"covers", covers_to_json(j)}};
}

}  // namespace

FileKind classify_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object())
    throw Error(Errc::kParseError, "expected a JSON object");
  if (j.contains("objects")) return FileKind::kCategory;
  if (j.contains("covers")) return FileKind::kTopology;
  if (j.contains("values")) return FileKind::kPresheaf;
  if (j.contains("chosen")) return FileKind::kSubpresheaf;
  if (j.contains("cod")) return FileKind::kSieve;
  throw Error(Errc::kParseError, "unrecognized file kind");
}

CategoryDescription read_category_description(const std::string& text) {
  const json j = parse(text);
  CategoryDescription d;
  d.objects = string_array(field(j, "objects"), "objects");
  for (const auto& a : field(j, "arrows")) {
    d.arrows.push_back({string_field(a, "name"), string_field(a, "dom"),
                        string_field(a, "cod")});
  }
  const json& ids = field(j, "identities");
  if (!ids.is_object())
    throw Error(Errc::kParseError, "identities must be an object");
  for (auto it = ids.begin(); it != ids.end(); ++it) {
    if (!it.value().is_string())
      throw Error(Errc::kParseError, "identities must map to arrow names");
    d.identities[it.key()] = it.value().get<std::string>();
  }
  for (const auto& e : field(j, "compose"))
    d.compose.push_back({string_field(e, "first"), string_field(e, "then"),
                         string_field(e, "result")});
  return d;
}

std::string write_category(const FiniteCategory& cat) {
  const CategoryDescription d = cat.description();
  json arrows = json::array();
  for (const auto& a : d.arrows)
    arrows.push_back(json{{"cod", a.cod}, {"dom", a.dom}, {"name", a.name}});
  json compose = json::array();
  for (const auto& e : d.compose)
    compose.push_back(
        json{{"first", e.first}, {"result", e.result}, {"then", e.then}});
  json identities = json::object();
  for (const auto& [o, a] : d.identities) identities[o] = a;
  return dump(json{{"arrows", std::move(arrows)},
                   {"compose", std::move(compose)},
                   {"identities", std::move(identities)},
                   {"objects", d.objects}});
}

std::string referenced_category(const std::string& text) {
  return string_field(parse(text), "category");
}

std::string referenced_presheaf(const std::string& text) {
  return string_field(parse(text), "presheaf");
}

GrothendieckTopology read_topology(const std::string& text, CategoryPtr cat,
                                   LoadMode mode) {
  const json j = parse(text);
  const json& covers_json = field(j, "covers");
  if (!covers_json.is_object())
    throw Error(Errc::kParseError, "covers must be an object");

  CoverSets covers(cat->object_count());
  for (auto it = covers_json.begin(); it != covers_json.end(); ++it) {
    const ObjId c = object_of(*cat, it.key());
    if (!it.value().is_array())
      throw Error(Errc::kParseError, "covers entries must be arrays");
    for (const auto& arr : it.value()) {
      std::vector<ArrId> arrows;
      for (const auto& name : string_array(arr, "covering sieve"))
        arrows.push_back(arrow_of(*cat, name));
      covers[c].insert(Sieve(cat, c, std::move(arrows)));
    }
  }

  if (mode == LoadMode::kSaturate) {
    std::vector<Sieve> family;
    for (const auto& set : covers)
      family.insert(family.end(), set.begin(), set.end());
    return generate_topology(std::move(cat), family);
  }
  return GrothendieckTopology::checked(std::move(cat), std::move(covers));
}

std::string write_topology(const GrothendieckTopology& j,
                           std::string_view category_name) {
  return dump(topology_to_json(j, category_name));
}

Sieve read_sieve(const std::string& text, CategoryPtr cat) {
  return sieve_from_json(parse(text), cat);
}

std::string write_sieve(const Sieve& s) { return dump(sieve_to_json(s)); }

PresheafPtr read_presheaf(const std::string& text, CategoryPtr cat) {
  const json j = parse(text);
  Presheaf::Description d;
  const json& values = field(j, "values");
  if (!values.is_object())
    throw Error(Errc::kParseError, "values must be an object");
  for (auto it = values.begin(); it != values.end(); ++it)
    d.values[it.key()] = string_array(it.value(), "values");
  const json& restriction = field(j, "restriction");
  if (!restriction.is_object())
    throw Error(Errc::kParseError, "restriction must be an object");
  for (auto it = restriction.begin(); it != restriction.end(); ++it) {
    if (!it.value().is_object())
      throw Error(Errc::kParseError, "restriction entries must be objects");
    auto& map = d.restriction[it.key()];
    for (auto e = it.value().begin(); e != it.value().end(); ++e) {
      if (!e.value().is_string())
        throw Error(Errc::kParseError, "restriction must map element names");
      map[e.key()] = e.value().get<std::string>();
    }
  }
  return Presheaf::validate(std::move(cat), d);
}

std::string write_presheaf(const Presheaf& e, std::string_view category_name) {
  const auto d = e.description();
  json values = json::object();
  for (const auto& [o, elems] : d.values) values[o] = elems;
  json restriction = json::object();
  for (const auto& [arrow, map] : d.restriction) {
    json entry = json::object();
    for (const auto& [from, to] : map) entry[from] = to;
    restriction[arrow] = std::move(entry);
  }
  return dump(json{{"category", std::string(category_name)},
                   {"restriction", std::move(restriction)},
                   {"values", std::move(values)}});
}

Subpresheaf read_subpresheaf(const std::string& text, PresheafPtr parent,
                             std::string_view presheaf_name) {
  const json j = parse(text);
  const std::string named = string_field(j, "presheaf");
  if (named != presheaf_name)
    throw Error(Errc::kParseError, "subpresheaf references presheaf '" +
                                       named + "', expected '" +
                                       std::string(presheaf_name) + "'");
  const json& chosen_json = field(j, "chosen");
  if (!chosen_json.is_object())
    throw Error(Errc::kParseError, "chosen must be an object");
  const auto& cat = parent->category();
  std::vector<std::vector<bool>> chosen;
  for (ObjId o = 0; o < cat->object_count(); ++o)
    chosen.emplace_back(parent->value_count(o), false);
  for (auto it = chosen_json.begin(); it != chosen_json.end(); ++it) {
    const ObjId o = object_of(*cat, it.key());
    for (const auto& name : string_array(it.value(), "chosen elements")) {
      const auto x = parent->find_element(o, name);
      if (!x)
        throw Error(Errc::kElementNotFound,
                    "no element '" + name + "' at '" + it.key() + "'");
      chosen[o][*x] = true;
    }
  }
  return Subpresheaf(std::move(parent), std::move(chosen));
}

std::string write_subpresheaf(const Subpresheaf& a,
                              std::string_view presheaf_name) {
  const auto& e = a.parent();
  const auto& cat = e->category();
  json chosen = json::object();
  for (ObjId o = 0; o < cat->object_count(); ++o) {
    json elems = json::array();
    for (int x = 0; x < e->value_count(o); ++x)
      if (a.contains(o, x)) elems.push_back(e->element_name(o, x));
    chosen[cat->object_name(o)] = std::move(elems);
  }
  return dump(json{{"chosen", std::move(chosen)},
                   {"presheaf", std::string(presheaf_name)}});
}

std::string write_analysis(const SiteAnalysis& analysis,
                           std::string_view category_name,
                           std::string_view topology_name) {
  json out{
      {"category", std::string(category_name)},
      {"topology", std::string(topology_name)},
      {"boolean", analysis.boolean_site},
      {"de_morgan", analysis.de_morgan_site},
      {"groupoid", analysis.groupoid},
      {"right_ore", analysis.right_ore},
      {"subcanonical", analysis.subcanonical},
      {"booleanization",
       topology_to_json(analysis.booleanized, category_name)},
      {"demorganization",
       topology_to_json(analysis.demorganized, category_name)},
  };
  json kept = json::array();
  for (ObjId o : analysis.reduced.site.kept)
    kept.push_back(analysis.reduced.site.ambient->object_name(o));
  out["kept_objects"] = std::move(kept);
  if (analysis.boolean_witness || analysis.de_morgan_witness) {
    json witness = json::object();
    if (analysis.boolean_witness)
      witness["boolean"] = sieve_to_json(*analysis.boolean_witness);
    if (analysis.de_morgan_witness)
      witness["de_morgan"] = sieve_to_json(*analysis.de_morgan_witness);
    out["witness"] = std::move(witness);
  }
  return dump(out);
}

std::string write_reduced_site(const ReducedSite& site,
                               std::string_view category_name) {
  json kept = json::array();
  for (ObjId o : site.site.kept)
    kept.push_back(site.site.ambient->object_name(o));
  const std::string reduced_name = std::string(category_name) + ".reduced";
  return dump(json{
      {"ambient", std::string(category_name)},
      {"category",
       json::parse(write_category(*site.site.category))},
      {"kept_objects", std::move(kept)},
      {"topology", topology_to_json(site.topology, reduced_name)},
  });
}

}  // namespace finsite
