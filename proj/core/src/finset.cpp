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

#include "galmon/finset.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace galmon {

struct FinSet::Impl {
  std::vector<Symbol> elements;

  // Product structure.
  std::shared_ptr<const FinSet>        left;
  std::shared_ptr<const FinSet>        right;
  std::vector<Index>                   pair_table;  // i * |right| + j
  std::vector<std::pair<Index, Index>> comps;

  // Exponential structure.
  std::shared_ptr<const FinSet> dom;
  std::shared_ptr<const FinSet> cod;
  std::vector<Index>            code_to_element;  // mixed radix, first slot major
  std::vector<Index>            tables;           // element * |dom| + slot
};

namespace {

void check_sorted_unique(const std::vector<Symbol>& elements) {
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (elements[i - 1] == elements[i]) {
      throw StructureError("duplicate element '" + elements[i] + "' in finite set");
    }
  }
}

// Returns indices sorted by the byte order of `keys`.
std::vector<Index> sorted_order(const std::vector<Symbol>& keys) {
  std::vector<Index> order(keys.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(),
            [&](Index a, Index b) { return keys[a] < keys[b]; });
  return order;
}

}  // namespace

std::size_t saturating_power(std::size_t base, std::size_t exponent) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<std::size_t>::max() / base) {
      return std::numeric_limits<std::size_t>::max();
    }
    result *= base;
  }
  return result;
}

FinSet::FinSet() {
  static const auto empty = std::make_shared<const Impl>();
  impl_                   = empty;
}

FinSet::FinSet(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

FinSet::FinSet(std::vector<Symbol> elements) {
  std::sort(elements.begin(), elements.end());
  check_sorted_unique(elements);
  auto impl      = std::make_shared<Impl>();
  impl->elements = std::move(elements);
  impl_          = std::move(impl);
}

FinSet::FinSet(std::initializer_list<Symbol> elements)
    : FinSet(std::vector<Symbol>(elements)) {}

FinSet FinSet::singleton() {
  static const FinSet point{Symbol(kPoint)};
  return point;
}

FinSet FinSet::range(std::size_t n) {
  std::vector<Symbol> elements;
  elements.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    elements.push_back(std::to_string(i));
  }
  return FinSet(std::move(elements));
}

std::size_t FinSet::size() const noexcept { return impl_->elements.size(); }

const Symbol& FinSet::operator[](Index i) const { return impl_->elements.at(i); }

const std::vector<Symbol>& FinSet::elements() const noexcept {
  return impl_->elements;
}

std::optional<Index> FinSet::find(std::string_view symbol) const {
  const auto& e  = impl_->elements;
  auto        it = std::lower_bound(e.begin(), e.end(), symbol,
                                    [](const Symbol& a, std::string_view b) { return a < b; });
  if (it == e.end() || *it != symbol) {
    return std::nullopt;
  }
  return static_cast<Index>(it - e.begin());
}

Index FinSet::index_of(std::string_view symbol) const {
  if (auto i = find(symbol)) {
    return *i;
  }
  throw StructureError("element '" + std::string(symbol) + "' is not in the set");
}

bool FinSet::is_product() const noexcept { return impl_->left != nullptr; }

const FinSet& FinSet::left_factor() const {
  if (!is_product()) {
    throw StructureError("set is not a product");
  }
  return *impl_->left;
}

const FinSet& FinSet::right_factor() const {
  if (!is_product()) {
    throw StructureError("set is not a product");
  }
  return *impl_->right;
}

Index FinSet::pair_index(Index left, Index right) const {
  const auto& r = right_factor();
  if (left >= impl_->left->size() || right >= r.size()) {
    throw StructureError("pair component out of range");
  }
  return impl_->pair_table[left * r.size() + right];
}

std::pair<Index, Index> FinSet::components(Index element) const {
  if (!is_product()) {
    throw StructureError("set is not a product");
  }
  return impl_->comps.at(element);
}

bool FinSet::is_exponential() const noexcept { return impl_->dom != nullptr; }

const FinSet& FinSet::exp_domain() const {
  if (!is_exponential()) {
    throw StructureError("set is not an exponential");
  }
  return *impl_->dom;
}

const FinSet& FinSet::exp_codomain() const {
  if (!is_exponential()) {
    throw StructureError("set is not an exponential");
  }
  return *impl_->cod;
}

Index FinSet::function_index(std::span<const Index> table) const {
  const auto& d = exp_domain();
  const auto& c = exp_codomain();
  if (table.size() != d.size()) {
    throw StructureError("function table has wrong length");
  }
  Index code = 0;
  for (Index v : table) {
    if (v >= c.size()) {
      throw StructureError("function table value out of range");
    }
    code = code * c.size() + v;
  }
  return impl_->code_to_element[code];
}

std::span<const Index> FinSet::function_table(Index element) const {
  const auto n = exp_domain().size();
  if (element >= size()) {
    throw StructureError("function element out of range");
  }
  return std::span<const Index>(impl_->tables).subspan(element * n, n);
}

bool operator==(const FinSet& a, const FinSet& b) {
  return a.impl_ == b.impl_ || a.impl_->elements == b.impl_->elements;
}

// FinMap ---------------------------------------------------------------------

FinMap::FinMap(FinSet dom, FinSet cod, std::vector<Index> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_.size()) {
    throw StructureError("map table has " + std::to_string(table_.size())
                         + " entries but the domain has "
                         + std::to_string(dom_.size()) + " elements");
  }
  for (Index i = 0; i < table_.size(); ++i) {
    if (table_[i] >= cod_.size()) {
      throw StructureError("image of '" + dom_[i] + "' lies outside the codomain");
    }
  }
}

FinMap FinMap::identity(const FinSet& set) {
  std::vector<Index> table(set.size());
  std::iota(table.begin(), table.end(), Index{0});
  return FinMap(set, set, std::move(table));
}

FinMap FinMap::from_pairs(FinSet dom, FinSet cod,
                          const std::vector<std::pair<Symbol, Symbol>>& pairs) {
  constexpr Index    unset = std::numeric_limits<Index>::max();
  std::vector<Index> table(dom.size(), unset);
  for (const auto& [x, y] : pairs) {
    Index i = dom.index_of(x);
    Index j = cod.index_of(y);
    if (table[i] != unset && table[i] != j) {
      throw StructureError("conflicting images for '" + x + "'");
    }
    table[i] = j;
  }
  for (Index i = 0; i < table.size(); ++i) {
    if (table[i] == unset) {
      throw StructureError("no image given for '" + dom[i] + "'");
    }
  }
  return FinMap(std::move(dom), std::move(cod), std::move(table));
}

const Symbol& FinMap::apply(std::string_view x) const {
  return cod_[table_[dom_.index_of(x)]];
}

bool FinMap::is_injective() const {
  std::vector<char> hit(cod_.size(), 0);
  for (Index v : table_) {
    if (hit[v]) {
      return false;
    }
    hit[v] = 1;
  }
  return true;
}

bool FinMap::is_surjective() const {
  std::vector<char> hit(cod_.size(), 0);
  for (Index v : table_) {
    hit[v] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool operator==(const FinMap& a, const FinMap& b) {
  return a.table_ == b.table_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (!(f.cod() == g.dom())) {
    throw StructureError("cannot compose: codomain and domain differ");
  }
  std::vector<Index> table(f.dom().size());
  for (Index x = 0; x < table.size(); ++x) {
    table[x] = g(f(x));
  }
  return FinMap(f.dom(), g.cod(), std::move(table));
}

// Products -------------------------------------------------------------------

FinSet product(const FinSet& x, const FinSet& y) {
  const std::size_t   nx = x.size();
  const std::size_t   ny = y.size();
  std::vector<Symbol> codes;
  codes.reserve(nx * ny);
  for (Index i = 0; i < nx; ++i) {
    for (Index j = 0; j < ny; ++j) {
      codes.push_back("(" + x[i] + "," + y[j] + ")");
    }
  }
  const auto order = sorted_order(codes);

  auto impl = std::make_shared<FinSet::Impl>();
  impl->elements.reserve(codes.size());
  impl->pair_table.resize(codes.size());
  impl->comps.resize(codes.size());
  for (Index pos = 0; pos < order.size(); ++pos) {
    const Index raw = order[pos];
    impl->elements.push_back(std::move(codes[raw]));
    impl->pair_table[raw] = pos;
    impl->comps[pos]      = {raw / ny, raw % ny};
  }
  check_sorted_unique(impl->elements);
  impl->left  = std::make_shared<const FinSet>(x);
  impl->right = std::make_shared<const FinSet>(y);
  return FinSet(std::shared_ptr<const FinSet::Impl>(std::move(impl)));
}

FinMap projection_left(const FinSet& p) {
  std::vector<Index> table(p.size());
  for (Index e = 0; e < p.size(); ++e) {
    table[e] = p.components(e).first;
  }
  return FinMap(p, p.left_factor(), std::move(table));
}

FinMap projection_right(const FinSet& p) {
  std::vector<Index> table(p.size());
  for (Index e = 0; e < p.size(); ++e) {
    table[e] = p.components(e).second;
  }
  return FinMap(p, p.right_factor(), std::move(table));
}

FinMap pairing(const FinMap& f, const FinMap& g) {
  if (!(f.dom() == g.dom())) {
    throw StructureError("pairing needs maps with a common domain");
  }
  const FinSet       p = product(f.cod(), g.cod());
  std::vector<Index> table(f.dom().size());
  for (Index w = 0; w < table.size(); ++w) {
    table[w] = p.pair_index(f(w), g(w));
  }
  return FinMap(f.dom(), p, std::move(table));
}

FinMap product_map(const FinMap& f, const FinMap& g) {
  const FinSet       src = product(f.dom(), g.dom());
  const FinSet       dst = product(f.cod(), g.cod());
  std::vector<Index> table(src.size());
  for (Index e = 0; e < src.size(); ++e) {
    auto [a, b] = src.components(e);
    table[e]    = dst.pair_index(f(a), g(b));
  }
  return FinMap(src, dst, std::move(table));
}

FinMap swap_map(const FinSet& x, const FinSet& y) {
  const FinSet       src = product(x, y);
  const FinSet       dst = product(y, x);
  std::vector<Index> table(src.size());
  for (Index e = 0; e < src.size(); ++e) {
    auto [a, b] = src.components(e);
    table[e]    = dst.pair_index(b, a);
  }
  return FinMap(src, dst, std::move(table));
}

// Exponentials ---------------------------------------------------------------

Symbol function_symbol(const FinSet& x, const FinSet& z,
                       std::span<const Index> table) {
  Symbol out = "{";
  for (Index k = 0; k < table.size(); ++k) {
    if (k != 0) {
      out += ',';
    }
    out += x[k];
    out += kMapsTo;
    out += z[table[k]];
  }
  out += '}';
  return out;
}

namespace {

struct ExponentialKey {
  std::vector<Symbol> dom;
  std::vector<Symbol> cod;
  friend bool operator<(const ExponentialKey& a, const ExponentialKey& b) {
    return std::tie(a.dom, a.cod) < std::tie(b.dom, b.cod);
  }
};

// Exponentials are rebuilt constantly by the invariant and end computations;
// a small process-wide cache keeps that linear in the number of distinct sets.
class ExponentialCache {
 public:
  std::optional<FinSet> get(const ExponentialKey& key) {
    std::lock_guard lock(mutex_);
    auto            it = entries_.find(key);
    if (it == entries_.end()) {
      return std::nullopt;
    }
    return it->second;
  }
  void put(ExponentialKey key, const FinSet& value) {
    std::lock_guard lock(mutex_);
    if (entries_.size() >= kCapacity) {
      entries_.clear();
    }
    entries_.emplace(std::move(key), value);
  }

 private:
  static constexpr std::size_t     kCapacity = 128;
  std::mutex                       mutex_;
  std::map<ExponentialKey, FinSet> entries_;
};

ExponentialCache& exponential_cache() {
  static ExponentialCache cache;
  return cache;
}

}  // namespace

FinSet exponential(const FinSet& x, const FinSet& z, const SearchLimits& limits) {
  const std::size_t n     = x.size();
  const std::size_t base  = z.size();
  const std::size_t count = saturating_power(base, n);
  if (count > limits.max_elements) {
    throw SizingError("exponential with " + std::to_string(base) + "^"
                      + std::to_string(n) + " elements exceeds the limit of "
                      + std::to_string(limits.max_elements));
  }
  ExponentialKey key{x.elements(), z.elements()};
  if (auto cached = exponential_cache().get(key)) {
    return *cached;
  }

  std::vector<Index>  raw_tables(count * n);
  std::vector<Symbol> codes(count);
  std::vector<Index>  digits(n, 0);
  for (Index code = 0; code < count; ++code) {
    std::copy(digits.begin(), digits.end(),
              raw_tables.begin() + static_cast<std::ptrdiff_t>(code * n));
    codes[code] = function_symbol(x, z, digits);
    for (std::size_t k = n; k-- > 0;) {
      if (++digits[k] < base) {
        break;
      }
      digits[k] = 0;
    }
  }
  const auto order = sorted_order(codes);

  auto impl = std::make_shared<FinSet::Impl>();
  impl->elements.reserve(count);
  impl->code_to_element.resize(count);
  impl->tables.resize(count * n);
  for (Index pos = 0; pos < count; ++pos) {
    const Index raw = order[pos];
    impl->elements.push_back(std::move(codes[raw]));
    impl->code_to_element[raw] = pos;
    std::copy_n(raw_tables.begin() + static_cast<std::ptrdiff_t>(raw * n), n,
                impl->tables.begin() + static_cast<std::ptrdiff_t>(pos * n));
  }
  check_sorted_unique(impl->elements);
  impl->dom = std::make_shared<const FinSet>(x);
  impl->cod = std::make_shared<const FinSet>(z);
  FinSet result(std::shared_ptr<const FinSet::Impl>(std::move(impl)));
  exponential_cache().put(std::move(key), result);
  return result;
}

FinMap evaluation(const FinSet& x, const FinSet& z) {
  const FinSet       fx = exponential(x, z);
  const FinSet       p  = product(fx, x);
  std::vector<Index> table(p.size());
  for (Index e = 0; e < p.size(); ++e) {
    auto [f, a] = p.components(e);
    table[e]    = fx.function_table(f)[a];
  }
  return FinMap(p, z, std::move(table));
}

FinMap hom_pre(const FinMap& h, const FinSet& z) {
  const FinSet       src = exponential(h.cod(), z);
  const FinSet       dst = exponential(h.dom(), z);
  std::vector<Index> table(src.size());
  std::vector<Index> buffer(h.dom().size());
  for (Index f = 0; f < src.size(); ++f) {
    auto ft = src.function_table(f);
    for (Index a = 0; a < buffer.size(); ++a) {
      buffer[a] = ft[h(a)];
    }
    table[f] = dst.function_index(buffer);
  }
  return FinMap(src, dst, std::move(table));
}

FinMap hom_post(const FinSet& x, const FinMap& f) {
  const FinSet       src = exponential(x, f.dom());
  const FinSet       dst = exponential(x, f.cod());
  std::vector<Index> table(src.size());
  std::vector<Index> buffer(x.size());
  for (Index g = 0; g < src.size(); ++g) {
    auto gt = src.function_table(g);
    for (Index a = 0; a < buffer.size(); ++a) {
      buffer[a] = f(gt[a]);
    }
    table[g] = dst.function_index(buffer);
  }
  return FinMap(src, dst, std::move(table));
}

FinMap curry(const FinMap& f) {
  const FinSet& p = f.dom();
  if (!p.is_product()) {
    throw StructureError("curry: domain is not a product carrier");
  }
  const FinSet&      y  = p.left_factor();
  const FinSet&      x  = p.right_factor();
  const FinSet       fx = exponential(x, f.cod());
  std::vector<Index> table(y.size());
  std::vector<Index> buffer(x.size());
  for (Index b = 0; b < y.size(); ++b) {
    for (Index a = 0; a < x.size(); ++a) {
      buffer[a] = f(p.pair_index(b, a));
    }
    table[b] = fx.function_index(buffer);
  }
  return FinMap(y, fx, std::move(table));
}

FinMap uncurry(const FinMap& g) {
  const FinSet& fx = g.cod();
  if (!fx.is_exponential()) {
    throw StructureError("uncurry: codomain is not an exponential carrier");
  }
  const FinSet& x = fx.exp_domain();
  return compose(evaluation(x, fx.exp_codomain()),
                 product_map(g, FinMap::identity(x)));
}

// Limits and subsets ---------------------------------------------------------

Subobject subset(const FinSet& x, std::span<const Index> members) {
  std::vector<Index> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Symbol> symbols;
  symbols.reserve(sorted.size());
  for (Index i : sorted) {
    symbols.push_back(x[i]);
  }
  FinSet carrier(std::move(symbols));
  FinMap inclusion(carrier, x, std::move(sorted));
  return Subobject{std::move(carrier), std::move(inclusion)};
}

Subobject equalizer(const FinMap& f, const FinMap& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    throw StructureError("equalizer: maps must share domain and codomain");
  }
  std::vector<Index> members;
  for (Index x = 0; x < f.dom().size(); ++x) {
    if (f(x) == g(x)) {
      members.push_back(x);
    }
  }
  return subset(f.dom(), members);
}

Subobject image(const FinMap& f) { return subset(f.cod(), f.table()); }

std::vector<FinMap> hom_set(const FinSet& x, const FinSet& y, const SearchLimits& limits) {
  const std::size_t n     = x.size();
  const std::size_t base  = y.size();
  const std::size_t count = saturating_power(base, n);
  if (count > limits.max_elements) {
    throw SizingError("hom-set with " + std::to_string(base) + "^" + std::to_string(n)
                      + " maps exceeds the limit of "
                      + std::to_string(limits.max_elements));
  }
  std::vector<FinMap> maps;
  maps.reserve(count);
  std::vector<Index> digits(n, 0);
  for (Index code = 0; code < count; ++code) {
    maps.emplace_back(x, y, digits);
    for (std::size_t k = n; k-- > 0;) {
      if (++digits[k] < base) {
        break;
      }
      digits[k] = 0;
    }
  }
  return maps;
}

}  // namespace galmon
