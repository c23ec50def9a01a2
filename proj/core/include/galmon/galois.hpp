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
 * The fix relation between monoid homomorphisms h: B → A and subfunctors of
 * U over a site, the invariants and stabilizer maps it induces, and the
 * resulting Galois connection.
 *
 * Invariants are computed as the equalizer of X ⇉ [A, X] → [B, X], the two
 * parallel maps being the curried action and the curried augmentation.
 * Stabilizers have a direct pointwise form and a second form that equalizes
 * A ⇉ End[U] → [V, U] through the ends module; the two must agree.
 */

#ifndef GALMON_GALOIS_HPP
#define GALMON_GALOIS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "galmon/actions.hpp"
#include "galmon/ends.hpp"
#include "galmon/monoid.hpp"
#include "galmon/subfunctor.hpp"

namespace galmon {

/// True iff h(b)·v = v for every b, every object M and every v ∈ V(M).
/// Throws StructureError when h does not land in the site's monoid.
bool fixes(const MonoidHom& h, const Subfunctor& v);

/// Inv along h, computed per object as the equalizer of
/// [h, X] ∘ curry(r ∘ swap) and [h, X] ∘ curry((ε × X) ∘ swap).
Subfunctor invariants(const MonoidHom& h, const Site& site,
                      const SearchLimits& limits = {});
Subfunctor invariants(const Submonoid& s, const Site& site,
                      const SearchLimits& limits = {});

/// {x : h(b)·x = x for all b}, filtered directly.
Subfunctor invariants_oracle(const MonoidHom& h, const Site& site);

/// {a : a·v = v for all M, v ∈ V(M)} as a submonoid. Throws StructureError
/// when V is not natural.
Submonoid stabilizer(const Subfunctor& v);

/// End[U] with ρ and the trivial path; reusable across stabilizer queries
/// on one site.
struct TannakianData {
  EndObject end_u;
  MonoidHom rho;
  FinMap    trivial;
};

TannakianData tannakian_data(const Site& site, const SearchLimits& limits = {});

/// The equalizer of [α, U] ∘ ρ and [α, U] ∘ (|U) η ε, as a submonoid.
Submonoid stabilizer_via_end(const Subfunctor& v, const SearchLimits& limits = {});
Submonoid stabilizer_via_end(const Subfunctor& v, const TannakianData& data,
                             const SearchLimits& limits = {});

struct SubmonoidEntry {
  Submonoid submonoid;
  Index     invariants;  // position in CorrespondenceReport::subfunctors
  Submonoid closure;     // Stab(Inv S)
  bool      closed = false;
};

struct SubfunctorEntry {
  Subfunctor subfunctor;
  Submonoid  stabilizer;
  Subfunctor closure;  // Inv(Stab V)
  bool       closed = false;
};

struct CorrespondenceReport {
  Site                         site;
  std::vector<SubmonoidEntry>  submonoids;
  std::vector<SubfunctorEntry> subfunctors;  // the distinct Inv-images
  /// (submonoid, subfunctor) for every closed submonoid.
  std::vector<std::pair<Index, Index>> pairs;
  bool                                 order_reversing = false;
  bool                                 bijective       = false;
};

/// Runs Inv and Stab over every submonoid and every Inv-image subfunctor.
CorrespondenceReport galois_correspondence(const Site& site, const SearchLimits& limits = {});

struct LawsReport {
  bool unit_submonoid    = true;  // S ⊆ Stab Inv S
  bool unit_subfunctor   = true;  // V ⊆ Inv Stab V
  bool inv_idempotent    = true;  // Inv Stab Inv S = Inv S
  bool stab_idempotent   = true;  // Stab Inv Stab V = Stab V
  bool antitone          = true;  // both maps reverse inclusion

  std::size_t            submonoids_checked  = 0;
  std::size_t            subfunctors_checked = 0;
  std::vector<Violation> violations;  // at most a few, for reporting

  bool ok() const {
    return unit_submonoid && unit_subfunctor && inv_idempotent && stab_idempotent && antitone;
  }
};

/// The natural subfunctors the laws are checked against: the Inv-images,
/// those generated by one or two elements, the empty and the whole one.
std::vector<Subfunctor> tested_subfunctors(const Site& site, const SearchLimits& limits = {});

LawsReport connection_laws(const Site& site, const SearchLimits& limits = {});
/// Also checks `extra`, which must be natural subfunctors on `site`.
LawsReport connection_laws(const Site& site, const std::vector<Subfunctor>& extra,
                           const SearchLimits& limits = {});

}  // namespace galmon

#endif  // GALMON_GALOIS_HPP
