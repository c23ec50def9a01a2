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
 * Functorial relations between finite preorders and their representants.
 * R*x is the greatest y related to x; R_*y is the greatest x related to y.
 * When no greatest element exists the representant is reported as absent.
 */

#ifndef GALMON_RELATION_HPP
#define GALMON_RELATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "galmon/error.hpp"
#include "galmon/finset.hpp"
#include "galmon/monoid.hpp"

namespace galmon {

struct Preorder {
  std::vector<std::string>       labels;
  std::vector<std::vector<bool>> leq;  // leq[i][j] iff i ≤ j

  std::size_t size() const noexcept { return labels.size(); }
  /// Reflexivity, transitivity and shape.
  std::optional<Violation> violation() const;
};

struct FiniteRelation {
  Preorder                       left;
  Preorder                       right;
  std::vector<std::vector<bool>> holds;  // holds[x][y]
};

/// x' ≤ x, y' ≤ y and R(x, y) must imply R(x', y').
std::optional<Violation> functoriality_violation(const FiniteRelation& r);

struct Representants {
  std::vector<std::optional<Index>> upper;  // R* on the left objects
  std::vector<std::optional<Index>> lower;  // R_* on the right objects
  std::vector<Index>                missing_upper;
  std::vector<Index>                missing_lower;
};

/// Throws StructureError on malformed or non-functorial input.
Representants representants(const FiniteRelation& r);

/// Subgroups ordered by inclusion.
Preorder subgroup_preorder(const Monoid& m);
/// H R K iff hk = kh for all h ∈ H, k ∈ K, on the subgroup preorder.
FiniteRelation commuting_relation(const Monoid& m);

}  // namespace galmon

#endif  // GALMON_RELATION_HPP
