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

#include "finsite/sieve.hpp"

#include <algorithm>

namespace finsite {

namespace {

void require_same(const Sieve& a, const Sieve& b) {
  if (a.category().get() != b.category().get())
    throw Error(Errc::kCategoryMismatch,
                "sieves belong to different categories");
  if (a.cod() != b.cod())
    throw Error(Errc::kCodomainMismatch,
                "sieves on '" + a.category()->object_name(a.cod()) +
                    "' and '" + b.category()->object_name(b.cod()) + "'");
}

}  // namespace

Sieve::Sieve(CategoryPtr cat, ObjId cod, std::vector<ArrId> arrows)
    : cat_(std::move(cat)), cod_(cod), arrows_(std::move(arrows)) {
  std::sort(arrows_.begin(), arrows_.end());
  arrows_.erase(std::unique(arrows_.begin(), arrows_.end()), arrows_.end());
  for (ArrId f : arrows_)
    if (cat_->cod(f) != cod_)
      throw Error(Errc::kWrongCodomain,
                  "arrow '" + cat_->arrow_name(f) + "' does not end at '" +
                      cat_->object_name(cod_) + "'");
  for (ArrId f : arrows_)
    for (ArrId g : cat_->arrows_into(cat_->dom(f)))
      if (!contains(cat_->compose(g, f)))
        throw Error(Errc::kNotASieve,
                    "not closed under precomposition: " +
                        cat_->arrow_name(f) + "∘" + cat_->arrow_name(g) +
                        " is missing");
}

Sieve Sieve::empty(CategoryPtr cat, ObjId cod) {
  return Sieve(std::move(cat), cod, {});
}

Sieve Sieve::maximal(CategoryPtr cat, ObjId cod) {
  auto into = cat->arrows_into(cod);
  return Sieve(std::move(cat), cod,
               std::vector<ArrId>(into.begin(), into.end()));
}

bool Sieve::contains(ArrId a) const {
  return std::binary_search(arrows_.begin(), arrows_.end(), a);
}

bool Sieve::is_maximal() const {
  return size() == static_cast<int>(cat_->arrows_into(cod_).size());
}

bool Sieve::subset_of(const Sieve& other) const {
  return std::includes(other.arrows_.begin(), other.arrows_.end(),
                       arrows_.begin(), arrows_.end());
}

Sieve generate_sieve(CategoryPtr cat, ObjId cod,
                     std::span<const ArrId> generators) {
  std::vector<ArrId> out;
  for (ArrId f : generators) {
    if (cat->cod(f) != cod)
      throw Error(Errc::kWrongCodomain,
                  "generator '" + cat->arrow_name(f) + "' does not end at '" +
                      cat->object_name(cod) + "'");
    // f∘g for every g into dom f covers the whole closure (g runs over
    // identities too), so one pass per generator suffices.
    for (ArrId g : cat->arrows_into(cat->dom(f)))
      out.push_back(cat->compose(g, f));
  }
  return Sieve(std::move(cat), cod, std::move(out));
}

Sieve pullback_sieve(const Sieve& s, ArrId along) {
  const auto& cat = s.category();
  if (cat->cod(along) != s.cod())
    throw Error(Errc::kCodomainMismatch,
                "cannot pull back a sieve on '" +
                    cat->object_name(s.cod()) + "' along '" +
                    cat->arrow_name(along) + "'");
  std::vector<ArrId> out;
  for (ArrId g : cat->arrows_into(cat->dom(along)))
    if (s.contains(cat->compose(g, along))) out.push_back(g);
  return Sieve(cat, cat->dom(along), std::move(out));
}

Sieve sieve_union(const Sieve& a, const Sieve& b) {
  require_same(a, b);
  std::vector<ArrId> out;
  std::set_union(a.arrows().begin(), a.arrows().end(), b.arrows().begin(),
                 b.arrows().end(), std::back_inserter(out));
  return Sieve(a.category(), a.cod(), std::move(out));
}

Sieve sieve_intersection(const Sieve& a, const Sieve& b) {
  require_same(a, b);
  std::vector<ArrId> out;
  std::set_intersection(a.arrows().begin(), a.arrows().end(),
                        b.arrows().begin(), b.arrows().end(),
                        std::back_inserter(out));
  return Sieve(a.category(), a.cod(), std::move(out));
}

Sieve sieve_not(const Sieve& r) {
  const auto& cat = r.category();
  std::vector<ArrId> out;
  for (ArrId f : cat->arrows_into(r.cod()))
    if (pullback_sieve(r, f).is_empty()) out.push_back(f);
  return Sieve(cat, r.cod(), std::move(out));
}

Sieve sieve_not_not(const Sieve& r) {
  const auto& cat = r.category();
  std::vector<ArrId> out;
  for (ArrId f : cat->arrows_into(r.cod()))
    if (stably_nonempty(pullback_sieve(r, f))) out.push_back(f);
  return Sieve(cat, r.cod(), std::move(out));
}

Sieve sieve_implies(const Sieve& s, const Sieve& t) {
  require_same(s, t);
  const auto& cat = s.category();
  std::vector<ArrId> out;
  for (ArrId f : cat->arrows_into(s.cod()))
    if (pullback_sieve(s, f).subset_of(pullback_sieve(t, f)))
      out.push_back(f);
  return Sieve(cat, s.cod(), std::move(out));
}

bool stably_nonempty(const Sieve& s) {
  for (ArrId f : s.category()->arrows_into(s.cod()))
    if (pullback_sieve(s, f).is_empty()) return false;
  return true;
}

std::vector<Sieve> enumerate_sieves(CategoryPtr cat, ObjId cod) {
  const auto into = cat->arrows_into(cod);
  const int n = static_cast<int>(into.size());
  if (n > 20)
    throw Error(Errc::kTooLarge,
                "exhaustive sieve enumeration over " + std::to_string(n) +
                    " arrows into '" + cat->object_name(cod) + "'");
  std::vector<Sieve> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<ArrId> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(into[i]);
    bool closed = true;
    auto member = [&](ArrId a) {
      return std::binary_search(subset.begin(), subset.end(), a);
    };
    for (ArrId f : subset) {
      for (ArrId g : cat->arrows_into(cat->dom(f)))
        if (!member(cat->compose(g, f))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.emplace_back(cat, cod, std::move(subset));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace finsite
