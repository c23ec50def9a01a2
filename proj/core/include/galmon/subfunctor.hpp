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

/**
 * @file
 *
 * Extensional subfunctors of the forgetful functor U restricted to a site:
 * one subset V(M) ⊆ U(M) per site object. A subfunctor is natural when every
 * site morphism f: M → N maps V(M) into V(N); the componentwise inclusions
 * then form the natural transformation α: V → U.
 */

#ifndef GALMON_SUBFUNCTOR_HPP
#define GALMON_SUBFUNCTOR_HPP

#include <optional>
#include <vector>

#include "galmon/actions.hpp"

namespace galmon {

class Subfunctor {
 public:
  /// One sorted index list per site object. Shape is checked, naturality is
  /// not (see naturality_violation()).
  Subfunctor(Site site, std::vector<std::vector<Index>> subsets);

  static Subfunctor whole(const Site& site);
  static Subfunctor empty(const Site& site);

  const Site&                            site() const noexcept { return site_; }
  const std::vector<Index>&              at(Index object) const { return subsets_.at(object); }
  const std::vector<std::vector<Index>>& subsets() const noexcept { return subsets_; }
  bool                                   contains(Index object, Index x) const;
  std::size_t                            total_size() const;

  /// V(M) as a finite set (symbols of U(M)) and α_M: V(M) → U(M).
  Subobject component(Index object) const;

  std::optional<Violation> naturality_violation() const;
  bool                     is_natural() const { return !naturality_violation(); }

  /// Componentwise inclusion; both must live on the same site.
  bool included_in(const Subfunctor& other) const;

  /// Components on a full subsite given by the original object indices.
  Subfunctor restricted_to(const Site& subsite, const std::vector<Index>& indices) const;

  friend bool operator==(const Subfunctor& a, const Subfunctor& b) {
    return a.subsets_ == b.subsets_;
  }

 private:
  Site                            site_;
  std::vector<std::vector<Index>> subsets_;
};

/// The smallest natural subfunctor containing the given (object, element)
/// seeds: closure under every site morphism.
Subfunctor generated_subfunctor(const Site& site,
                                const std::vector<std::pair<Index, Index>>& seeds);

}  // namespace galmon

#endif  // GALMON_SUBFUNCTOR_HPP
