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

#include "galmon/monoid.hpp"

#include <algorithm>
#include <cstdint>

namespace galmon {

struct Monoid::Impl {
  FinSet             carrier;
  std::vector<Index> table;
  Index              unit = 0;
};

Monoid::Monoid(FinSet carrier, std::vector<Index> table, Index unit) {
  const std::size_t n = carrier.size();
  if (n == 0) {
    throw StructureError("a monoid needs a non-empty carrier");
  }
  if (table.size() != n * n) {
    throw StructureError("Cayley table must have " + std::to_string(n * n) + " cells");
  }
  if (unit >= n) {
    throw StructureError("unit index out of range");
  }
  for (Index v : table) {
    if (v >= n) {
      throw StructureError("Cayley table value out of range");
    }
  }
  impl_ = std::make_shared<const Impl>(Impl{std::move(carrier), std::move(table), unit});
}

Monoid Monoid::from_function(
    std::vector<Symbol> elements, const Symbol& unit,
    const std::function<Symbol(const Symbol&, const Symbol&)>& multiply) {
  FinSet             carrier(std::move(elements));
  const std::size_t  n = carrier.size();
  std::vector<Index> table(n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      table[a * n + b] = carrier.index_of(multiply(carrier[a], carrier[b]));
    }
  }
  const Index u = carrier.index_of(unit);
  return Monoid(std::move(carrier), std::move(table), u);
}

Monoid Monoid::trivial(const Symbol& unit) {
  return Monoid(FinSet{unit}, {0}, 0);
}

const FinSet&             Monoid::carrier() const noexcept { return impl_->carrier; }
Index                     Monoid::unit() const noexcept { return impl_->unit; }
const std::vector<Index>& Monoid::table() const noexcept { return impl_->table; }

Index Monoid::multiply(Index a, Index b) const {
  return impl_->table[a * size() + b];
}

FinMap Monoid::multiplication() const {
  const FinSet       p = product(carrier(), carrier());
  std::vector<Index> t(p.size());
  for (Index e = 0; e < p.size(); ++e) {
    auto [a, b] = p.components(e);
    t[e]        = multiply(a, b);
  }
  return FinMap(p, carrier(), std::move(t));
}

bool operator==(const Monoid& a, const Monoid& b) {
  return a.impl_ == b.impl_
         || (a.unit() == b.unit() && a.table() == b.table() && a.carrier() == b.carrier());
}

std::optional<Violation> validate_monoid(const Monoid& m) {
  const std::size_t n = m.size();
  const Index       e = m.unit();
  for (Index a = 0; a < n; ++a) {
    if (m.multiply(e, a) != a || m.multiply(a, e) != a) {
      return Violation{"unit", {m[e], m[a]},
                       "unit law fails: '" + m[e] + "' does not act as identity on '"
                           + m[a] + "'"};
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Index ab = m.multiply(a, b);
      for (Index c = 0; c < n; ++c) {
        if (m.multiply(ab, c) != m.multiply(a, m.multiply(b, c))) {
          return Violation{"associativity", {m[a], m[b], m[c]},
                           "associativity fails on (" + m[a] + ", " + m[b] + ", "
                               + m[c] + ")"};
        }
      }
    }
  }
  return std::nullopt;
}

const Monoid& checked(const Monoid& m) {
  if (auto v = validate_monoid(m)) {
    throw ValidationError(std::move(*v));
  }
  return m;
}

// Homomorphisms --------------------------------------------------------------

MonoidHom::MonoidHom(Monoid src, Monoid dst, FinMap map)
    : src_(std::move(src)), dst_(std::move(dst)), map_(std::move(map)) {
  if (!(map_.dom() == src_.carrier()) || !(map_.cod() == dst_.carrier())) {
    throw StructureError("homomorphism map does not match the monoid carriers");
  }
}

MonoidHom MonoidHom::identity(const Monoid& m) {
  return MonoidHom(m, m, FinMap::identity(m.carrier()));
}

bool operator==(const MonoidHom& a, const MonoidHom& b) {
  return a.src_ == b.src_ && a.dst_ == b.dst_ && a.map_ == b.map_;
}

std::optional<Violation> validate_hom(const MonoidHom& h) {
  const Monoid& s = h.src();
  const Monoid& d = h.dst();
  if (h(s.unit()) != d.unit()) {
    return Violation{"unit", {s[s.unit()]}, "homomorphism does not preserve the unit"};
  }
  for (Index a = 0; a < s.size(); ++a) {
    for (Index b = 0; b < s.size(); ++b) {
      if (h(s.multiply(a, b)) != d.multiply(h(a), h(b))) {
        return Violation{"multiplicativity", {s[a], s[b]},
                         "h(" + s[a] + "·" + s[b] + ") differs from h(" + s[a]
                             + ")·h(" + s[b] + ")"};
      }
    }
  }
  return std::nullopt;
}

MonoidHom compose(const MonoidHom& g, const MonoidHom& f) {
  if (!(f.dst() == g.src())) {
    throw StructureError("cannot compose homomorphisms: monoids differ");
  }
  return MonoidHom(f.src(), g.dst(), compose(g.map(), f.map()));
}

std::vector<std::pair<Index, Index>> kernel_pairs(const MonoidHom& h) {
  std::vector<std::pair<Index, Index>> pairs;
  const std::size_t                    n = h.src().size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (h(a) == h(b)) {
        pairs.emplace_back(a, b);
      }
    }
  }
  return pairs;
}

// Submonoids -----------------------------------------------------------------

bool Submonoid::contains(Index a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

bool Submonoid::subset_of(const Submonoid& other) const {
  return std::includes(other.members.begin(), other.members.end(), members.begin(),
                       members.end());
}

Submonoid make_submonoid(const Monoid& m, std::vector<Index> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!std::binary_search(members.begin(), members.end(), m.unit())) {
    throw StructureError("submonoid must contain the unit '" + m[m.unit()] + "'");
  }
  const std::size_t  k = members.size();
  std::vector<Index> position(m.size(), k);
  for (Index i = 0; i < k; ++i) {
    if (members[i] >= m.size()) {
      throw StructureError("submonoid member out of range");
    }
    position[members[i]] = i;
  }
  std::vector<Index> table(k * k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      const Index p = position[m.multiply(members[i], members[j])];
      if (p == k) {
        throw StructureError("subset is not closed: " + m[members[i]] + "·"
                             + m[members[j]] + " falls outside");
      }
      table[i * k + j] = p;
    }
  }
  Subobject sub = subset(m.carrier(), members);
  Monoid    monoid(sub.carrier, std::move(table), position[m.unit()]);
  MonoidHom inclusion(monoid, m, sub.inclusion);
  return Submonoid{std::move(monoid), std::move(inclusion), std::move(members)};
}

std::vector<Submonoid> enumerate_submonoids(const Monoid& m) {
  const std::size_t n = m.size();
  if (n > 20) {
    throw SizingError("submonoid enumeration is limited to monoids of order 20");
  }
  std::vector<Index> others;
  for (Index a = 0; a < n; ++a) {
    if (a != m.unit()) {
      others.push_back(a);
    }
  }
  std::vector<std::vector<Index>> found;
  std::vector<char>               in(n, 0);
  const std::uint64_t             total = std::uint64_t{1} << others.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(in.begin(), in.end(), 0);
    in[m.unit()] = 1;
    std::vector<Index> members{m.unit()};
    for (std::size_t k = 0; k < others.size(); ++k) {
      if (mask & (std::uint64_t{1} << k)) {
        in[others[k]] = 1;
        members.push_back(others[k]);
      }
    }
    bool closed = true;
    for (std::size_t i = 0; i < members.size() && closed; ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (!in[m.multiply(members[i], members[j])]) {
          closed = false;
          break;
        }
      }
    }
    if (closed) {
      std::sort(members.begin(), members.end());
      found.push_back(std::move(members));
    }
  }
  // Indices follow symbol order, so comparing index lists compares element lists.
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  });
  std::vector<Submonoid> result;
  result.reserve(found.size());
  for (auto& members : found) {
    result.push_back(make_submonoid(m, std::move(members)));
  }
  return result;
}

std::optional<Index> inverse_of(const Monoid& m, Index a) {
  for (Index b = 0; b < m.size(); ++b) {
    if (m.multiply(a, b) == m.unit() && m.multiply(b, a) == m.unit()) {
      return b;
    }
  }
  return std::nullopt;
}

std::vector<Submonoid> enumerate_subgroups(const Monoid& m) {
  std::vector<Submonoid> groups;
  for (auto& s : enumerate_submonoids(m)) {
    const bool group = std::all_of(s.members.begin(), s.members.end(), [&](Index a) {
      auto inv = inverse_of(m, a);
      return inv && s.contains(*inv);
    });
    if (group) {
      groups.push_back(std::move(s));
    }
  }
  return groups;
}

// Hopf structure -------------------------------------------------------------

FinMap fusion_morphism(const Monoid& m) {
  // Cartesian fusion (A × m)(δ × A): the diagonal copies a, then multiplies.
  const FinSet       p = product(m.carrier(), m.carrier());
  std::vector<Index> t(p.size());
  for (Index e = 0; e < p.size(); ++e) {
    auto [a, b] = p.components(e);
    t[e]        = p.pair_index(a, m.multiply(a, b));
  }
  return FinMap(p, p, std::move(t));
}

bool is_hopf(const Monoid& m) { return fusion_morphism(m).is_bijective(); }

std::optional<Symbol> hopf_witness(const Monoid& m) {
  const FinMap       fusion = fusion_morphism(m);
  const FinSet&      p      = fusion.dom();
  std::vector<Index> seen(p.size(), p.size());
  for (Index a = 0; a < m.size(); ++a) {
    for (Index b = 0; b < m.size(); ++b) {
      const Index e     = p.pair_index(a, b);
      const Index image = fusion(e);
      if (seen[image] != p.size()) {
        return m[a];
      }
      seen[image] = e;
    }
  }
  return std::nullopt;
}

FinMap antipode(const Monoid& m) {
  std::vector<Index> t(m.size());
  for (Index a = 0; a < m.size(); ++a) {
    auto inv = inverse_of(m, a);
    if (!inv) {
      throw NotHopfError(m[a]);
    }
    t[a] = *inv;
  }
  return FinMap(m.carrier(), m.carrier(), std::move(t));
}

Augmentation canonical_augmentation(const Monoid& m) {
  const FinSet& point = FinSet::singleton();
  return Augmentation{m, FinMap(m.carrier(), point, std::vector<Index>(m.size(), 0))};
}

}  // namespace galmon
