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

#include "galmon/ends.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "detail/functional_csp.hpp"

namespace galmon {

bool operator==(const Diagram& a, const Diagram& b) {
  if (a.objects != b.objects || a.arrows.size() != b.arrows.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.arrows.size(); ++i) {
    const auto& x = a.arrows[i];
    const auto& y = b.arrows[i];
    if (x.src != y.src || x.dst != y.dst || x.table != y.table) {
      return false;
    }
  }
  return true;
}

Diagram forgetful_diagram(const Site& site) {
  Diagram d;
  for (const auto& obj : site.objects()) {
    d.objects.push_back(obj.carrier());
    d.labels.push_back(obj.name());
  }
  for (Index i = 0; i < site.size(); ++i) {
    for (Index j = 0; j < site.size(); ++j) {
      for (const auto& f : site.morphisms(i, j)) {
        d.arrows.push_back(Arrow{i, j, f.table()});
      }
    }
  }
  return d;
}

Diagram subfunctor_diagram(const Subfunctor& v) {
  const Site& site = v.site();
  Diagram     d;
  // Position of each carrier element inside V(M).
  std::vector<std::vector<Index>> slot(site.size());
  for (Index o = 0; o < site.size(); ++o) {
    d.objects.push_back(v.component(o).carrier);
    d.labels.push_back(site.object(o).name());
    slot[o].assign(site.object(o).size(), site.object(o).size());
    const auto& members = v.at(o);
    for (Index k = 0; k < members.size(); ++k) {
      slot[o][members[k]] = k;
    }
  }
  for (Index i = 0; i < site.size(); ++i) {
    for (Index j = 0; j < site.size(); ++j) {
      for (const auto& f : site.morphisms(i, j)) {
        Arrow a{i, j, {}};
        for (Index x : v.at(i)) {
          const Index y = slot[j][f(x)];
          if (y == site.object(j).size()) {
            throw StructureError("subfunctor is not natural: "
                                 + v.naturality_violation().value_or(Violation{}).message);
          }
          a.table.push_back(y);
        }
        d.arrows.push_back(std::move(a));
      }
    }
  }
  return d;
}

Diagram set_diagram(const std::vector<FinSet>& sets, const SearchLimits& limits) {
  Diagram d;
  d.objects = sets;
  for (Index i = 0; i < sets.size(); ++i) {
    d.labels.push_back("X" + std::to_string(i));
  }
  std::size_t total = 0;
  for (Index i = 0; i < sets.size(); ++i) {
    for (Index j = 0; j < sets.size(); ++j) {
      total += saturating_power(sets[j].size(), sets[i].size());
      if (total > limits.max_elements) {
        throw SizingError("set diagram needs more than "
                          + std::to_string(limits.max_elements) + " arrows");
      }
    }
  }
  d.arrows.reserve(total);
  for (Index i = 0; i < sets.size(); ++i) {
    for (Index j = 0; j < sets.size(); ++j) {
      for (auto& f : hom_set(sets[i], sets[j], limits)) {
        d.arrows.push_back(Arrow{i, j, f.table()});
      }
    }
  }
  return d;
}

std::optional<Violation> diagram_violation(const Diagram& d) {
  for (std::size_t k = 0; k < d.arrows.size(); ++k) {
    const Arrow& a = d.arrows[k];
    if (a.src >= d.objects.size() || a.dst >= d.objects.size()) {
      return Violation{"shape", {}, "arrow " + std::to_string(k) + " has an unknown endpoint"};
    }
    if (a.table.size() != d.objects[a.src].size()) {
      return Violation{"shape", {}, "arrow " + std::to_string(k) + " is not total"};
    }
    for (Index v : a.table) {
      if (v >= d.objects[a.dst].size()) {
        return Violation{"shape", {},
                         "arrow " + std::to_string(k) + " leaves its codomain"};
      }
    }
  }
  return std::nullopt;
}

// EndObject ------------------------------------------------------------------

std::optional<Index> EndObject::find(const Family& family) const {
  auto it = lookup_.find(family);
  if (it == lookup_.end()) {
    return std::nullopt;
  }
  return it->second;
}

FinMap EndObject::projection(Index object, const SearchLimits& limits) const {
  const FinSet&      vd  = source_->objects.at(object);
  const FinSet&      wd  = target_->objects.at(object);
  const FinSet       exp = exponential(vd, wd, limits);
  std::vector<Index> t(size());
  for (Index e = 0; e < size(); ++e) {
    t[e] = exp.function_index(component(e, object));
  }
  return FinMap(carrier_, exp, std::move(t));
}

bool EndObject::is_wedge(const Family& family) const {
  if (family.size() != source_->objects.size()) {
    return false;
  }
  for (std::size_t k = 0; k < source_->arrows.size(); ++k) {
    const Arrow& vf = source_->arrows[k];
    const Arrow& wf = target_->arrows[k];
    for (Index x = 0; x < vf.table.size(); ++x) {
      if (wf.table[family[vf.src][x]] != family[vf.dst][vf.table[x]]) {
        return false;
      }
    }
  }
  return true;
}

namespace {

bool same_shape(const Diagram& v, const Diagram& w) {
  if (v.objects.size() != w.objects.size() || v.arrows.size() != w.arrows.size()) {
    return false;
  }
  for (std::size_t k = 0; k < v.arrows.size(); ++k) {
    if (v.arrows[k].src != w.arrows[k].src || v.arrows[k].dst != w.arrows[k].dst) {
      return false;
    }
  }
  return true;
}

Symbol family_symbol(const Diagram& v, const Diagram& w, const Family& family) {
  Symbol out = "[";
  for (Index o = 0; o < family.size(); ++o) {
    if (o != 0) {
      out += ',';
    }
    out += function_symbol(v.objects[o], w.objects[o], family[o]);
  }
  out += ']';
  return out;
}

}  // namespace

EndObject internal_nat(const Diagram& v, const Diagram& w, const SearchLimits& limits) {
  if (!same_shape(v, w)) {
    throw StructureError("internal_nat: diagrams have different shapes");
  }
  for (const Diagram* d : {&v, &w}) {
    if (auto bad = diagram_violation(*d)) {
      throw StructureError("internal_nat: non-functorial input: " + bad->message);
    }
  }

  auto source = std::make_shared<const Diagram>(v);
  auto target = (v == w) ? source : std::make_shared<const Diagram>(w);

  const std::size_t        n = v.objects.size();
  std::vector<Index>       offset(n + 1, 0);
  std::vector<std::size_t> sizes;
  for (Index o = 0; o < n; ++o) {
    offset[o + 1] = offset[o] + v.objects[o].size();
    for (Index x = 0; x < v.objects[o].size(); ++x) {
      sizes.push_back(w.objects[o].size());
    }
  }
  detail::FunctionalCsp csp(std::move(sizes));
  for (std::size_t k = 0; k < v.arrows.size(); ++k) {
    const Arrow& vf = source->arrows[k];
    const Arrow& wf = target->arrows[k];
    for (Index x = 0; x < vf.table.size(); ++x) {
      csp.add_link(offset[vf.src] + x, offset[vf.dst] + vf.table[x], wf.table.data());
    }
  }

  std::vector<Family> found;
  csp.solve(
      [&](const std::vector<Index>& s) {
        Family f(n);
        for (Index o = 0; o < n; ++o) {
          f[o].assign(s.begin() + static_cast<std::ptrdiff_t>(offset[o]),
                      s.begin() + static_cast<std::ptrdiff_t>(offset[o + 1]));
        }
        found.push_back(std::move(f));
      },
      limits.max_nodes, "internal Nat");

  std::vector<Symbol> symbols;
  symbols.reserve(found.size());
  for (const auto& f : found) {
    symbols.push_back(family_symbol(v, w, f));
  }

  EndObject end;
  end.source_  = std::move(source);
  end.target_  = std::move(target);
  end.carrier_ = FinSet(symbols);
  end.nodes_   = csp.nodes_visited();
  end.families_.resize(found.size());
  for (Index i = 0; i < found.size(); ++i) {
    const Index pos = end.carrier_.index_of(symbols[i]);
    end.lookup_.emplace(found[i], pos);
    end.families_[pos] = std::move(found[i]);
  }
  return end;
}

Monoid end_monoid(const EndObject& end) {
  if (!(end.source() == end.target())) {
    throw StructureError("end_monoid: internal Nat is not an internal End");
  }
  const std::size_t  n       = end.size();
  const std::size_t  objects = end.source().objects.size();
  std::vector<Index> table(n * n);
  Family             product(objects);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index o = 0; o < objects; ++o) {
        const auto& fa = end.component(a, o);
        const auto& fb = end.component(b, o);
        product[o].resize(fb.size());
        for (Index x = 0; x < fb.size(); ++x) {
          product[o][x] = fa[fb[x]];
        }
      }
      auto idx = end.find(product);
      if (!idx) {
        throw StructureError("end_monoid: composite family is not a wedge");
      }
      table[a * n + b] = *idx;
    }
  }
  Family identity(objects);
  for (Index o = 0; o < objects; ++o) {
    identity[o].resize(end.source().objects[o].size());
    std::iota(identity[o].begin(), identity[o].end(), Index{0});
  }
  auto unit = end.find(identity);
  if (!unit) {
    throw StructureError("end_monoid: identity family missing");
  }
  return Monoid(end.carrier(), std::move(table), *unit);
}

namespace {

struct ArrowKey {
  Index                     src;
  Index                     dst;
  const std::vector<Index>* table;
  friend bool operator<(const ArrowKey& a, const ArrowKey& b) {
    if (a.src != b.src) {
      return a.src < b.src;
    }
    if (a.dst != b.dst) {
      return a.dst < b.dst;
    }
    return *a.table < *b.table;
  }
};

}  // namespace

MonoidHom restrict_end(const EndObject& source, const EndObject& target,
                       const std::vector<Index>& object_map) {
  const Diagram& d  = source.target();
  const Diagram& d2 = target.target();
  if (object_map.size() != d2.objects.size()) {
    throw StructureError("restrict_end: object map has the wrong length");
  }
  for (Index k = 0; k < object_map.size(); ++k) {
    if (object_map[k] >= d.objects.size() || !(d.objects[object_map[k]] == d2.objects[k])) {
      throw StructureError("restrict_end: object '" + d2.labels.at(k)
                           + "' is not sent to an object with the same underlying set");
    }
  }
  std::set<ArrowKey> arrows;
  for (const Arrow& a : d.arrows) {
    arrows.insert(ArrowKey{a.src, a.dst, &a.table});
  }
  for (const Arrow& a : d2.arrows) {
    if (!arrows.count(ArrowKey{object_map[a.src], object_map[a.dst], &a.table})) {
      throw StructureError("restrict_end: functor does not send an arrow "
                           + d2.labels.at(a.src) + " -> " + d2.labels.at(a.dst)
                           + " to an arrow of the larger diagram");
    }
  }
  const Monoid       src_monoid = end_monoid(source);
  const Monoid       dst_monoid = end_monoid(target);
  std::vector<Index> t(source.size());
  Family             restricted(object_map.size());
  for (Index e = 0; e < source.size(); ++e) {
    for (Index k = 0; k < object_map.size(); ++k) {
      restricted[k] = source.component(e, object_map[k]);
    }
    auto idx = target.find(restricted);
    if (!idx) {
      throw StructureError("restrict_end: restricted family is not a wedge");
    }
    t[e] = *idx;
  }
  return MonoidHom(src_monoid, dst_monoid,
                   FinMap(src_monoid.carrier(), dst_monoid.carrier(), std::move(t)));
}

namespace {

void check_end_over_site(const Site& site, const EndObject& end_u) {
  if (end_u.source().objects.size() != site.size()) {
    throw StructureError("End[U] was computed over a different site");
  }
  for (Index o = 0; o < site.size(); ++o) {
    if (!(end_u.source().objects[o] == site.object(o).carrier())) {
      throw StructureError("End[U] was computed over a different site");
    }
  }
}

}  // namespace

MonoidHom rho(const Monoid& m, const Site& site, const EndObject& end_u) {
  if (!(site.monoid() == m)) {
    throw StructureError("rho: site is over a different monoid");
  }
  check_end_over_site(site, end_u);
  const Monoid       target = end_monoid(end_u);
  std::vector<Index> t(m.size());
  Family             family(site.size());
  for (Index a = 0; a < m.size(); ++a) {
    for (Index o = 0; o < site.size(); ++o) {
      const MAction& obj = site.object(o);
      family[o].assign(obj.row(a), obj.row(a) + obj.size());
    }
    auto idx = end_u.find(family);
    if (!idx) {
      throw StructureError("rho: curried action of '" + m[a] + "' is not a wedge");
    }
    t[a] = *idx;
  }
  return MonoidHom(m, target, FinMap(m.carrier(), target.carrier(), std::move(t)));
}

MonoidHom rho(const Monoid& m, const Site& site, const SearchLimits& limits) {
  const Diagram u = forgetful_diagram(site);
  return rho(m, site, internal_nat(u, u, limits));
}

FinMap trivial_path(const Monoid& m, const Site& site, const EndObject& end_u) {
  check_end_over_site(site, end_u);
  std::vector<Index> t(m.size());
  Family             family(site.size());
  for (Index a = 0; a < m.size(); ++a) {
    for (Index o = 0; o < site.size(); ++o) {
      // curry(ε ⊗ UM) at a is the row of the trivial action.
      const MAction e = trivial_action(m, site.object(o).carrier());
      family[o].assign(e.row(a), e.row(a) + e.size());
    }
    auto idx = end_u.find(family);
    if (!idx) {
      throw StructureError("trivial path family is not a wedge");
    }
    t[a] = *idx;
  }
  return FinMap(m.carrier(), end_u.carrier(), std::move(t));
}

MAction universal_action(const EndObject& end, Index object) {
  const Monoid       monoid = end_monoid(end);
  const FinSet&      x      = end.target().objects.at(object);
  std::vector<Index> t(monoid.size() * x.size());
  for (Index phi = 0; phi < monoid.size(); ++phi) {
    const auto& c = end.component(phi, object);
    std::copy(c.begin(), c.end(), t.begin() + static_cast<std::ptrdiff_t>(phi * x.size()));
  }
  return MAction(monoid, x, std::move(t), end.target().labels.at(object));
}

Precomposition precompose(const EndObject& end_u, const Subfunctor& v,
                          const SearchLimits& limits) {
  const Site& site = v.site();
  check_end_over_site(site, end_u);
  EndObject target =
      internal_nat(subfunctor_diagram(v), forgetful_diagram(site), limits);

  std::vector<Index> t(end_u.size());
  Family             restricted(site.size());
  for (Index e = 0; e < end_u.size(); ++e) {
    for (Index o = 0; o < site.size(); ++o) {
      const auto& full = end_u.component(e, o);
      restricted[o].clear();
      for (Index x : v.at(o)) {
        restricted[o].push_back(full[x]);
      }
    }
    auto idx = target.find(restricted);
    if (!idx) {
      throw StructureError("precompose: restricted family is not a wedge");
    }
    t[e] = *idx;
  }
  FinMap map(end_u.carrier(), target.carrier(), std::move(t));

  bool square = true;
  for (Index o = 0; o < site.size() && square; ++o) {
    const Subobject part = v.component(o);
    const FinSet&   um   = site.object(o).carrier();
    try {
      const FinMap lhs = compose(target.projection(o, limits), map);
      const FinMap rhs = compose(hom_pre(part.inclusion, um), end_u.projection(o, limits));
      square           = lhs == rhs;
    } catch (const SizingError&) {
      // Exponential too large to materialize: compare the tables directly.
      for (Index e = 0; e < end_u.size() && square; ++e) {
        const auto& image = target.component(map(e), o);
        for (Index k = 0; k < part.carrier.size(); ++k) {
          square = square && image[k] == end_u.component(e, o)[part.inclusion(k)];
        }
      }
    }
  }
  return Precomposition{std::move(target), std::move(map), square};
}

std::vector<FinSet> underlying_sets(const Site& site) {
  std::vector<FinSet> sets;
  for (const auto& obj : site.objects()) {
    if (std::find(sets.begin(), sets.end(), obj.carrier()) == sets.end()) {
      sets.push_back(obj.carrier());
    }
  }
  return sets;
}

AugmentationReport augmentation_diagram_check(const Monoid& m, const Site& site,
                                              const std::vector<FinSet>& base_site,
                                              const SearchLimits& limits) {
  std::vector<FinSet> base;
  for (const auto& x : base_site) {
    if (std::find(base.begin(), base.end(), x) == base.end()) {
      base.push_back(x);
    }
  }
  auto base_index = [&](const FinSet& x) -> Index {
    auto it = std::find(base.begin(), base.end(), x);
    if (it == base.end()) {
      throw StructureError("augmentation check: site carrier missing from the base site");
    }
    return static_cast<Index>(it - base.begin());
  };

  // E must land in the site: add the trivial actions that are missing.
  std::vector<MAction> objects = site.objects();
  std::vector<Index>   e_map;
  for (Index i = 0; i < base.size(); ++i) {
    const MAction ex = trivial_action(m, base[i], "E(X" + std::to_string(i) + ")");
    auto it = std::find(objects.begin(), objects.end(), ex);
    if (it == objects.end()) {
      objects.push_back(ex);
      e_map.push_back(objects.size() - 1);
    } else {
      e_map.push_back(static_cast<Index>(it - objects.begin()));
    }
  }
  Site extended(m, std::move(objects), site.description() + "+E(base)", limits);

  std::vector<Index> u_map;
  for (const auto& obj : extended.objects()) {
    u_map.push_back(base_index(obj.carrier()));
  }

  const Diagram   u     = forgetful_diagram(extended);
  const Diagram   c     = set_diagram(base, limits);
  const EndObject end_u = internal_nat(u, u, limits);
  const EndObject end_c = internal_nat(c, c, limits);

  const MonoidHom restrict_e = restrict_end(end_u, end_c, e_map);
  const MonoidHom restrict_u = restrict_end(end_c, end_u, u_map);
  const MonoidHom r          = rho(m, extended, end_u);
  const Monoid    c_monoid   = end_monoid(end_c);
  const Augmentation aug     = canonical_augmentation(m);

  // η ε: A → 1 → End[C].
  const FinMap eta(FinSet::singleton(), c_monoid.carrier(),
                   std::vector<Index>{c_monoid.unit()});
  const FinMap eta_eps = compose(eta, aug.counit);

  AugmentationReport report{extended, end_u.size(), end_c.size(), false, false, false};
  report.section_identity =
      compose(restrict_e, restrict_u).map() == FinMap::identity(c_monoid.carrier());
  report.trivial_path_ok =
      compose(restrict_u.map(), eta_eps) == trivial_path(m, extended, end_u);
  report.square_commutes = compose(restrict_e.map(), r.map()) == eta_eps;
  return report;
}

}  // namespace galmon
