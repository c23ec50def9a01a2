/*
 * Copyright 2026 The galmon Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "galmon/subfunctor.hpp"

#include <algorithm>

namespace galmon {

Subfunctor::Subfunctor(Site site, std::vector<std::vector<Index>> subsets)
    : site_(std::move(site)), subsets_(std::move(subsets)) {
  if (subsets_.size() != site_.size()) {
    throw StructureError("subfunctor needs one subset per site object");
  }
  for (Index o = 0; o < subsets_.size(); ++o) {
    auto& s = subsets_[o];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty() && s.back() >= site_.object(o).size()) {
      throw StructureError("subfunctor component for '" + site_.object(o).name()
                           + "' leaves the carrier");
    }
  }
}

Subfunctor Subfunctor::whole(const Site& site) {
  std::vector<std::vector<Index>> subsets(site.size());
  for (Index o = 0; o < site.size(); ++o) {
    for (Index x = 0; x < site.object(o).size(); ++x) {
      subsets[o].push_back(x);
    }
  }
  return Subfunctor(site, std::move(subsets));
}

Subfunctor Subfunctor::empty(const Site& site) {
  return Subfunctor(site, std::vector<std::vector<Index>>(site.size()));
}

bool Subfunctor::contains(Index object, Index x) const {
  const auto& s = subsets_.at(object);
  return std::binary_search(s.begin(), s.end(), x);
}

std::size_t Subfunctor::total_size() const {
  std::size_t n = 0;
  for (const auto& s : subsets_) {
    n += s.size();
  }
  return n;
}

Subobject Subfunctor::component(Index object) const {
  return subset(site_.object(object).carrier(), subsets_.at(object));
}

std::optional<Violation> Subfunctor::naturality_violation() const {
  for (Index i = 0; i < site_.size(); ++i) {
    for (Index j = 0; j < site_.size(); ++j) {
      for (const auto& f : site_.morphisms(i, j)) {
        for (Index x : subsets_[i]) {
          if (!contains(j, f(x))) {
            const auto& src = site_.object(i);
            const auto& dst = site_.object(j);
            return Violation{
                "naturality",
                {src.name(), src.carrier()[x], dst.name(), dst.carrier()[f(x)]},
                "a morphism " + src.name() + " -> " + dst.name() + " sends '"
                    + src.carrier()[x] + "' to '" + dst.carrier()[f(x)]
                    + "', which is outside the subfunctor"};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool Subfunctor::included_in(const Subfunctor& other) const {
  if (other.subsets_.size() != subsets_.size()) {
    throw StructureError("subfunctors live on different sites");
  }
  for (Index o = 0; o < subsets_.size(); ++o) {
    if (!std::includes(other.subsets_[o].begin(), other.subsets_[o].end(),
                       subsets_[o].begin(), subsets_[o].end())) {
      return false;
    }
  }
  return true;
}

Subfunctor Subfunctor::restricted_to(const Site& subsite,
                                     const std::vector<Index>& indices) const {
  std::vector<std::vector<Index>> parts;
  for (Index i : indices) {
    parts.push_back(subsets_.at(i));
  }
  return Subfunctor(subsite, std::move(parts));
}

Subfunctor generated_subfunctor(const Site& site,
                                const std::vector<std::pair<Index, Index>>& seeds) {
  std::vector<std::vector<char>> in(site.size());
  for (Index o = 0; o < site.size(); ++o) {
    in[o].assign(site.object(o).size(), 0);
  }
  std::vector<std::pair<Index, Index>> stack;
  for (auto [o, x] : seeds) {
    if (!in.at(o).at(x)) {
      in[o][x] = 1;
      stack.emplace_back(o, x);
    }
  }
  while (!stack.empty()) {
    auto [o, x] = stack.back();
    stack.pop_back();
    for (Index j = 0; j < site.size(); ++j) {
      for (const auto& f : site.morphisms(o, j)) {
        if (!in[j][f(x)]) {
          in[j][f(x)] = 1;
          stack.emplace_back(j, f(x));
        }
      }
    }
  }
  std::vector<std::vector<Index>> subsets(site.size());
  for (Index o = 0; o < site.size(); ++o) {
    for (Index x = 0; x < in[o].size(); ++x) {
      if (in[o][x]) {
        subsets[o].push_back(x);
      }
    }
  }
  return Subfunctor(site, std::move(subsets));
}

}  // namespace galmon
