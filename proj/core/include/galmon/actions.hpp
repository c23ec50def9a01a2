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
 * The Eilenberg–Moore category of A × − at desk scale: finite A-actions,
 * equivariant maps, the functors F (free), E (trivial), H (restriction along
 * a homomorphism), Γ (fixed points) and K (coinduction), and sites, i.e.
 * finite full subcategories over which functorial computations run.
 */

#ifndef GALMON_ACTIONS_HPP
#define GALMON_ACTIONS_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galmon/finset.hpp"
#include "galmon/monoid.hpp"

namespace galmon {

class MAction {
 public:
  /// `table[a * |X| + x]` is the index of a·x. Shape only; see validate_action().
  MAction(Monoid monoid, FinSet carrier, std::vector<Index> table, std::string name = {});

  const Monoid&             monoid() const noexcept { return monoid_; }
  const FinSet&             carrier() const noexcept { return carrier_; }
  const std::vector<Index>& table() const noexcept { return table_; }
  const std::string&        name() const noexcept { return name_; }
  std::size_t               size() const noexcept { return carrier_.size(); }

  Index act(Index a, Index x) const { return table_[a * carrier_.size() + x]; }
  /// Row of the table for `a`, i.e. the map x ↦ a·x.
  const Index* row(Index a) const { return table_.data() + a * carrier_.size(); }

  /// r: A × X → X.
  FinMap action_map() const;

  MAction renamed(std::string name) const;

  /// Same monoid, carrier and table; names are ignored.
  friend bool operator==(const MAction& a, const MAction& b);

 private:
  Monoid             monoid_;
  FinSet             carrier_;
  std::vector<Index> table_;
  std::string        name_;
};

/// Checks a·(b·x) = (ab)·x and e·x = x.
std::optional<Violation> validate_action(const MAction& m);

struct EquivariantMap {
  MAction src;
  MAction dst;
  FinMap  map;
};

bool is_equivariant(const MAction& src, const MAction& dst, const FinMap& f);

/// F X = (A × X, a·(b, x) = (ab, x)).
MAction free_action(const Monoid& m, const FinSet& x, std::string name = {});
/// A acting on itself by left multiplication.
MAction regular_action(const Monoid& m, std::string name = {});
/// E X = (X, a·x = x).
MAction trivial_action(const Monoid& m, const FinSet& x, std::string name = {});
/// H M over B with b·x = h(b)·x.
MAction restrict_action(const MonoidHom& h, const MAction& m);

/// Every equivariant map M → N, ordered by assignment table.
std::vector<EquivariantMap> equivariant_maps(const MAction& src, const MAction& dst,
                                             const SearchLimits& limits = {});

/// Γ M = {x : a·x = x for all a} with its inclusion.
Subobject fixed_points(const MAction& m);

struct AdjunctionReport {
  std::size_t left_count  = 0;  // |Hom(L X, Y)|
  std::size_t right_count = 0;  // |Hom(X, R Y)|
  bool        bijective   = false;
  bool        natural     = false;

  bool ok() const { return bijective && natural && left_count == right_count; }
};

/// Verifies Hom(E X, M) ≅ Hom(X, Γ M) by transporting every map both ways
/// and spot-checking naturality against endomorphisms of X and of M.
AdjunctionReport adjunction_check_E_Gamma(const Monoid& m, const FinSet& x,
                                          const MAction& target);

/// K N: B-equivariant maps φ: A → N (A acted on through h), with
/// (a·φ)(a') = φ(a'a). Elements are encoded as assignment tables.
MAction coinduct(const MonoidHom& h, const MAction& n, const SearchLimits& limits = {});

/// Verifies Hom_B(H M, N) ≅ Hom_A(M, K N), with naturality spot checks.
AdjunctionReport adjunction_check_restrict_coinduct(const MonoidHom& h, const MAction& m,
                                                    const MAction& n);

/// The counit H K N → N, φ ↦ φ(e). B-equivariant; bijective when h is an
/// isomorphism.
FinMap coinduction_counit(const MonoidHom& h, const MAction& n);

/// Left cosets gH with left translation. Requires a group.
MAction coset_action(const Monoid& group, const Submonoid& subgroup);

/// Builders for canonical_site(). Parsed from strings such as "free",
/// "cosets", "trivial", "free+cosets" or "free+trivial".
struct SiteSpec {
  bool                 free    = false;
  bool                 cosets  = false;
  bool                 trivial = false;
  std::vector<MAction> custom;

  static SiteSpec parse(std::string_view text);
  std::string     describe() const;
};

/// A finite full subcategory of actions. Morphisms are always derived by
/// exhaustive enumeration; they are never supplied by the caller.
class Site {
 public:
  Site(Monoid monoid, std::vector<MAction> objects, std::string description,
       const SearchLimits& limits = {});

  const Monoid&               monoid() const noexcept;
  const std::vector<MAction>& objects() const noexcept;
  const MAction&              object(Index i) const;
  std::size_t                 size() const noexcept;
  const std::string&          description() const noexcept;

  /// Underlying maps of all equivariant maps objects[i] → objects[j].
  const std::vector<FinMap>& morphisms(Index i, Index j) const;
  std::size_t                morphism_count() const;

  std::optional<Index> find(std::string_view name) const;

  /// The full subcategory on the listed objects, in the given order.
  Site subsite(const std::vector<Index>& indices, std::string description) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

Site canonical_site(const Monoid& m, const SiteSpec& spec, const SearchLimits& limits = {});
/// free+cosets for groups, free+trivial otherwise.
Site default_site(const Monoid& m, const SearchLimits& limits = {});
SiteSpec default_site_spec(const Monoid& m);

/// Display name of a subset of a monoid, e.g. "{e,(12)}".
std::string subset_label(const Monoid& m, const std::vector<Index>& members);

}  // namespace galmon

#endif  // GALMON_ACTIONS_HPP
