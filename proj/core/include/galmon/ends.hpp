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
 * Ends of hom-bifunctors over finite diagrams of finite sets.
 *
 * A Diagram is functor data W: D → FinSet given by one set per object and
 * one map per listed arrow. The internal Nat [V, W] of two diagrams of the
 * same shape is the set of families (φ_D: V D → W D) satisfying the wedge
 * condition W f ∘ φ_D = φ_D' ∘ V f for every arrow f: D → D'. With V = W it
 * is a monoid under componentwise composition, the internal End.
 *
 * Families are found by backtracking with arc-consistency propagation over
 * the wedge constraints; the result is exactly the set of wedge families,
 * in canonical order.
 */

#ifndef GALMON_ENDS_HPP
#define GALMON_ENDS_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galmon/actions.hpp"
#include "galmon/finset.hpp"
#include "galmon/monoid.hpp"
#include "galmon/subfunctor.hpp"

namespace galmon {

struct Arrow {
  Index              src = 0;
  Index              dst = 0;
  std::vector<Index> table;
};

struct Diagram {
  std::vector<FinSet>      objects;
  std::vector<std::string> labels;
  std::vector<Arrow>       arrows;

  friend bool operator==(const Diagram& a, const Diagram& b);
};

/// U restricted to a site: carriers and all equivariant maps.
Diagram forgetful_diagram(const Site& site);
/// V as a diagram with the same arrows as U, restricted to the components.
Diagram subfunctor_diagram(const Subfunctor& v);
/// The full subcategory of finite sets on `sets`, with every map as an arrow.
Diagram set_diagram(const std::vector<FinSet>& sets, const SearchLimits& limits = {});

std::optional<Violation> diagram_violation(const Diagram& d);

using Family = std::vector<std::vector<Index>>;  // one table per object

class EndObject {
 public:
  const Diagram& source() const noexcept { return *source_; }
  const Diagram& target() const noexcept { return *target_; }
  const FinSet&  carrier() const noexcept { return carrier_; }
  std::size_t    size() const noexcept { return families_.size(); }

  const Family&             family(Index element) const { return families_.at(element); }
  const std::vector<Index>& component(Index element, Index object) const {
    return families_.at(element).at(object);
  }
  std::optional<Index> find(const Family& family) const;

  /// λ_D: [V, W] → [V D, W D].
  FinMap projection(Index object, const SearchLimits& limits = {}) const;

  bool        is_wedge(const Family& family) const;
  std::size_t nodes_visited() const noexcept { return nodes_; }

 private:
  friend EndObject internal_nat(const Diagram&, const Diagram&, const SearchLimits&);

  std::shared_ptr<const Diagram> source_;
  std::shared_ptr<const Diagram> target_;
  FinSet                         carrier_;
  std::vector<Family>            families_;
  std::map<Family, Index>        lookup_;
  std::size_t                    nodes_ = 0;
};

/// [V, W]. Throws StructureError on mismatched shapes, SizingError when the
/// search exceeds `limits.max_nodes`.
EndObject internal_nat(const Diagram& v, const Diagram& w, const SearchLimits& limits = {});

/// The composition monoid on [W, W]; λ_D(φψ) = λ_D(φ) ∘ λ_D(ψ).
Monoid end_monoid(const EndObject& end);

/// |G: End[W] → End[W G] for a functor G: D' → D given on objects by
/// `object_map` and acting as the identity on underlying maps. Throws
/// StructureError when G does not send the arrows of D' to arrows of D.
MonoidHom restrict_end(const EndObject& source, const EndObject& target,
                       const std::vector<Index>& object_map);

/// ρ: A → End[U], a ↦ (x ↦ a·x)_M, the factorization of the curried actions.
MonoidHom rho(const Monoid& m, const Site& site, const EndObject& end_u);
MonoidHom rho(const Monoid& m, const Site& site, const SearchLimits& limits = {});

/// ∫ curry(ε ⊗ UM): A → End[U], every a sent to the identity family.
FinMap trivial_path(const Monoid& m, const Site& site, const EndObject& end_u);

/// The lift of W to End[W]-actions on object D: φ·x = λ_D(φ)(x).
MAction universal_action(const EndObject& end, Index object);

struct Precomposition {
  EndObject target;           // [V, U]
  FinMap    map;              // [α, U]: End[U] → [V, U]
  bool      square_commutes;  // λ^V_M ∘ [α, U] = [α_M, UM] ∘ λ_M for all M
};

Precomposition precompose(const EndObject& end_u, const Subfunctor& v,
                          const SearchLimits& limits = {});

struct AugmentationReport {
  Site        extended_site;  // site ∪ {E X : X in base}
  std::size_t action_end_size   = 0;
  std::size_t base_end_size     = 0;
  bool        section_identity  = false;  // (|E)(|U) = id
  bool        trivial_path_ok   = false;  // (|U) η ε = ∫ curry(ε ⊗ UM)
  bool        square_commutes   = false;  // (|E) ρ = η ε

  bool ok() const { return section_identity && trivial_path_ok && square_commutes; }
};

/// Checks the augmentation diagram relating End[U] and End[C]. Trivial
/// actions on the base sets are added to the site so that E lands in it.
AugmentationReport augmentation_diagram_check(const Monoid& m, const Site& site,
                                              const std::vector<FinSet>& base_site,
                                              const SearchLimits& limits = {});

/// Underlying sets of the site objects, without repeats.
std::vector<FinSet> underlying_sets(const Site& site);

}  // namespace galmon

#endif  // GALMON_ENDS_HPP
