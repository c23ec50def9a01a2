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
 * Finite monoids given by Cayley tables, their homomorphisms and
 * submonoids. A monoid A stands for the augmented monad A × − on finite
 * sets: multiplication and unit of the monad are m × − and u × −, and the
 * augmentation is induced by the unique map A → 1.
 */

#ifndef GALMON_MONOID_HPP
#define GALMON_MONOID_HPP

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "galmon/error.hpp"
#include "galmon/finset.hpp"

namespace galmon {

class Monoid {
 public:
  /// `table[a * n + b]` is the index of a·b. Only the shape is checked here;
  /// use validate_monoid() for the axioms.
  Monoid(FinSet carrier, std::vector<Index> table, Index unit);

  /// Builds the table by calling `multiply` on every pair of symbols.
  static Monoid from_function(
      std::vector<Symbol> elements, const Symbol& unit,
      const std::function<Symbol(const Symbol&, const Symbol&)>& multiply);
  static Monoid trivial(const Symbol& unit = "e");

  const FinSet&             carrier() const noexcept;
  std::size_t               size() const noexcept { return carrier().size(); }
  Index                     unit() const noexcept;
  const std::vector<Index>& table() const noexcept;
  Index                     multiply(Index a, Index b) const;
  const Symbol&             operator[](Index a) const { return carrier()[a]; }

  /// m: A × A → A.
  FinMap multiplication() const;

  friend bool operator==(const Monoid& a, const Monoid& b);

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Checks associativity and both unit laws; the report names a witness.
std::optional<Violation> validate_monoid(const Monoid& m);
/// Throws ValidationError when validate_monoid() reports a violation.
const Monoid& checked(const Monoid& m);

class MonoidHom {
 public:
  MonoidHom(Monoid src, Monoid dst, FinMap map);

  static MonoidHom identity(const Monoid& m);

  const Monoid& src() const noexcept { return src_; }
  const Monoid& dst() const noexcept { return dst_; }
  const FinMap& map() const noexcept { return map_; }
  Index         operator()(Index b) const { return map_(b); }

  friend bool operator==(const MonoidHom& a, const MonoidHom& b);

 private:
  Monoid src_;
  Monoid dst_;
  FinMap map_;
};

std::optional<Violation> validate_hom(const MonoidHom& h);
/// g ∘ f.
MonoidHom compose(const MonoidHom& g, const MonoidHom& f);
/// Pairs (a, b), a < b, identified by h.
std::vector<std::pair<Index, Index>> kernel_pairs(const MonoidHom& h);

/// A submonoid together with its inclusion. `members` are sorted indices in
/// the ambient monoid.
struct Submonoid {
  Monoid             monoid;
  MonoidHom          inclusion;
  std::vector<Index> members;

  bool contains(Index a) const;
  bool subset_of(const Submonoid& other) const;
  friend bool operator==(const Submonoid& a, const Submonoid& b) {
    return a.members == b.members;
  }
};

/// Throws StructureError unless `members` contains the unit and is closed.
Submonoid make_submonoid(const Monoid& m, std::vector<Index> members);

/// Every submonoid, ordered by (size, element list). Exhaustive over subsets
/// containing the unit; documented for |A| ≤ 12, refused above 20.
std::vector<Submonoid> enumerate_submonoids(const Monoid& m);
/// The submonoids in which every element is invertible.
std::vector<Submonoid> enumerate_subgroups(const Monoid& m);

std::optional<Index> inverse_of(const Monoid& m, Index a);

/// (a, b) ↦ (a, ab) on A × A.
FinMap fusion_morphism(const Monoid& m);
bool   is_hopf(const Monoid& m);
/// First element whose fusion row collides, i.e. a non-invertible element.
std::optional<Symbol> hopf_witness(const Monoid& m);
/// a ↦ a⁻¹. Throws NotHopfError on a non-group.
FinMap antipode(const Monoid& m);

struct Augmentation {
  Monoid owner;
  FinMap counit;  // A → 1
};

Augmentation canonical_augmentation(const Monoid& m);

}  // namespace galmon

#endif  // GALMON_MONOID_HPP
