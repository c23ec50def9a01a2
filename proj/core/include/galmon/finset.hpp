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
 * Finite sets with canonically ordered symbolic elements and total maps
 * between them. This is the ambient cartesian closed category: products,
 * exponentials (sets of all maps), currying and equalizers.
 *
 * Every FinSet keeps its elements in byte-lexicographic order. Products and
 * exponentials remember their factors, so a pair `(x,y)` or a function
 * element `{x↦z,...}` can be decoded without reparsing strings.
 */

#ifndef GALMON_FINSET_HPP
#define GALMON_FINSET_HPP

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galmon/error.hpp"

namespace galmon {

using Index = std::size_t;

/// Element of the terminal set.
inline constexpr std::string_view kPoint = "•";
/// Separator used in function-element encodings.
inline constexpr std::string_view kMapsTo = "↦";

/// Bounds for exhaustive enumerations. Exceeding a bound raises SizingError.
struct SearchLimits {
  /// Search nodes (or candidate families) visited by a single enumeration.
  std::size_t max_nodes = 10'000'000;
  /// Elements materialized by a single exponential or hom-set.
  std::size_t max_elements = 2'000'000;
};

class FinSet {
 public:
  /// The empty set.
  FinSet();
  /// Sorts the symbols; throws StructureError on duplicates.
  explicit FinSet(std::vector<Symbol> elements);
  FinSet(std::initializer_list<Symbol> elements);

  static FinSet singleton();
  /// `{0, 1, ..., n-1}` as decimal symbols (lexicographic, so "10" < "2").
  static FinSet range(std::size_t n);

  std::size_t size() const noexcept;
  bool        empty() const noexcept { return size() == 0; }

  const Symbol&              operator[](Index i) const;
  const std::vector<Symbol>& elements() const noexcept;

  std::optional<Index> find(std::string_view symbol) const;
  /// Like find(), but throws StructureError naming the missing symbol.
  Index index_of(std::string_view symbol) const;
  bool  contains(std::string_view symbol) const { return find(symbol).has_value(); }

  // Product structure (valid when is_product()).
  bool                      is_product() const noexcept;
  const FinSet&             left_factor() const;
  const FinSet&             right_factor() const;
  Index                     pair_index(Index left, Index right) const;
  std::pair<Index, Index>   components(Index element) const;

  // Exponential structure (valid when is_exponential()).
  bool                   is_exponential() const noexcept;
  const FinSet&          exp_domain() const;
  const FinSet&          exp_codomain() const;
  Index                  function_index(std::span<const Index> table) const;
  std::span<const Index> function_table(Index element) const;

  friend bool operator==(const FinSet& a, const FinSet& b);

 private:
  struct Impl;
  explicit FinSet(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;

  friend FinSet product(const FinSet&, const FinSet&);
  friend FinSet exponential(const FinSet&, const FinSet&, const SearchLimits&);
};

/// A total map between finite sets stored as an index table.
class FinMap {
 public:
  /// Throws StructureError if the table is not total into `cod`.
  FinMap(FinSet dom, FinSet cod, std::vector<Index> table);

  static FinMap identity(const FinSet& set);
  /// Builds a map from symbol pairs; every domain symbol must be present.
  static FinMap from_pairs(FinSet dom, FinSet cod,
                           const std::vector<std::pair<Symbol, Symbol>>& pairs);

  const FinSet&             dom() const noexcept { return dom_; }
  const FinSet&             cod() const noexcept { return cod_; }
  const std::vector<Index>& table() const noexcept { return table_; }

  Index         operator()(Index x) const { return table_[x]; }
  const Symbol& apply(std::string_view x) const;

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  friend bool operator==(const FinMap& a, const FinMap& b);

 private:
  FinSet             dom_;
  FinSet             cod_;
  std::vector<Index> table_;
};

/// A subset presented by its carrier and the inclusion into the ambient set.
struct Subobject {
  FinSet carrier;
  FinMap inclusion;
};

/// g ∘ f. Throws StructureError unless f.cod() == g.dom().
FinMap compose(const FinMap& g, const FinMap& f);

FinSet product(const FinSet& x, const FinSet& y);
FinMap projection_left(const FinSet& product_set);
FinMap projection_right(const FinSet& product_set);
/// <f, g>: W → X × Y.
FinMap pairing(const FinMap& f, const FinMap& g);
/// f × g: X × Y → X' × Y'.
FinMap product_map(const FinMap& f, const FinMap& g);
/// The symmetry X × Y → Y × X.
FinMap swap_map(const FinSet& x, const FinSet& y);

/// [X, Z]: all total maps X → Z, ordered by their encodings.
FinSet exponential(const FinSet& x, const FinSet& z,
                   const SearchLimits& limits = {});
/// Canonical encoding `{x↦z,...}` of the map given by `table`.
Symbol function_symbol(const FinSet& x, const FinSet& z,
                       std::span<const Index> table);
/// ev: [X, Z] × X → Z.
FinMap evaluation(const FinSet& x, const FinSet& z);
/// [h, Z]: [Y, Z] → [X, Z], precomposition with h: X → Y.
FinMap hom_pre(const FinMap& h, const FinSet& z);
/// [X, f]: [X, Y] → [X, Z], postcomposition with f: Y → Z.
FinMap hom_post(const FinSet& x, const FinMap& f);

/// f: Y × X → Z  ↦  curry(f): Y → [X, Z].
FinMap curry(const FinMap& f);
/// g: Y → [X, Z]  ↦  ev ∘ (g × X): Y × X → Z.
FinMap uncurry(const FinMap& g);

/// {x : f(x) = g(x)} with its inclusion.
Subobject equalizer(const FinMap& f, const FinMap& g);
/// Subset of `x` on the given (not necessarily sorted) indices.
Subobject subset(const FinSet& x, std::span<const Index> members);
Subobject image(const FinMap& f);

/// All maps X → Y in lexicographic order of their index tables.
std::vector<FinMap> hom_set(const FinSet& x, const FinSet& y,
                            const SearchLimits& limits = {});

/// |base|^exponent, saturating at SIZE_MAX.
std::size_t saturating_power(std::size_t base, std::size_t exponent);

}  // namespace galmon

#endif  // GALMON_FINSET_HPP
