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

#include "galmon/actions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "detail/functional_csp.hpp"

namespace galmon {

MAction::MAction(Monoid monoid, FinSet carrier, std::vector<Index> table, std::string name)
    : monoid_(std::move(monoid)),
      carrier_(std::move(carrier)),
      table_(std::move(table)),
      name_(std::move(name)) {
  if (table_.size() != monoid_.size() * carrier_.size()) {
    throw StructureError("action table of '" + name_ + "' has the wrong number of cells");
  }
  for (Index v : table_) {
    if (v >= carrier_.size()) {
      throw StructureError("action table of '" + name_ + "' leaves the carrier");
    }
  }
}

FinMap MAction::action_map() const {
  const FinSet       p = product(monoid_.carrier(), carrier_);
  std::vector<Index> t(p.size());
  for (Index e = 0; e < p.size(); ++e) {
    auto [a, x] = p.components(e);
    t[e]        = act(a, x);
  }
  return FinMap(p, carrier_, std::move(t));
}

MAction MAction::renamed(std::string name) const {
  MAction copy = *this;
  copy.name_   = std::move(name);
  return copy;
}

bool operator==(const MAction& a, const MAction& b) {
  return a.table_ == b.table_ && a.carrier_ == b.carrier_ && a.monoid_ == b.monoid_;
}

std::optional<Violation> validate_action(const MAction& m) {
  const Monoid& A = m.monoid();
  const FinSet& X = m.carrier();
  for (Index x = 0; x < X.size(); ++x) {
    if (m.act(A.unit(), x) != x) {
      return Violation{"unit", {A[A.unit()], X[x]},
                       "unit law fails at '" + X[x] + "'"};
    }
  }
  for (Index a = 0; a < A.size(); ++a) {
    for (Index b = 0; b < A.size(); ++b) {
      const Index ab = A.multiply(a, b);
      for (Index x = 0; x < X.size(); ++x) {
        if (m.act(a, m.act(b, x)) != m.act(ab, x)) {
          return Violation{"associativity", {A[a], A[b], X[x]},
                           "a·(b·x) differs from (ab)·x for a=" + A[a] + ", b=" + A[b]
                               + ", x=" + X[x]};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_equivariant(const MAction& src, const MAction& dst, const FinMap& f) {
  if (!(src.monoid() == dst.monoid()) || !(f.dom() == src.carrier())
      || !(f.cod() == dst.carrier())) {
    return false;
  }
  for (Index a = 0; a < src.monoid().size(); ++a) {
    for (Index x = 0; x < src.size(); ++x) {
      if (f(src.act(a, x)) != dst.act(a, f(x))) {
        return false;
      }
    }
  }
  return true;
}

MAction free_action(const Monoid& m, const FinSet& x, std::string name) {
  const FinSet       carrier = product(m.carrier(), x);
  std::vector<Index> t(m.size() * carrier.size());
  for (Index a = 0; a < m.size(); ++a) {
    for (Index e = 0; e < carrier.size(); ++e) {
      auto [b, y]                = carrier.components(e);
      t[a * carrier.size() + e] = carrier.pair_index(m.multiply(a, b), y);
    }
  }
  return MAction(m, carrier, std::move(t), std::move(name));
}

MAction regular_action(const Monoid& m, std::string name) {
  return MAction(m, m.carrier(), m.table(), std::move(name));
}

MAction trivial_action(const Monoid& m, const FinSet& x, std::string name) {
  std::vector<Index> t(m.size() * x.size());
  for (Index a = 0; a < m.size(); ++a) {
    for (Index y = 0; y < x.size(); ++y) {
      t[a * x.size() + y] = y;
    }
  }
  return MAction(m, x, std::move(t), std::move(name));
}

MAction restrict_action(const MonoidHom& h, const MAction& m) {
  if (!(h.dst() == m.monoid())) {
    throw StructureError("restrict_action: action is not over the homomorphism's target");
  }
  const Monoid&      B = h.src();
  std::vector<Index> t(B.size() * m.size());
  for (Index b = 0; b < B.size(); ++b) {
    for (Index x = 0; x < m.size(); ++x) {
      t[b * m.size() + x] = m.act(h(b), x);
    }
  }
  return MAction(B, m.carrier(), std::move(t), m.name());
}

namespace {

std::vector<std::vector<Index>> equivariant_tables(const MAction& src, const MAction& dst,
                                                   const SearchLimits& limits) {
  if (!(src.monoid() == dst.monoid())) {
    throw StructureError("equivariant_maps: actions are over different monoids");
  }
  std::vector<std::size_t> sizes(src.size(), dst.size());
  detail::FunctionalCsp    csp(std::move(sizes));
  for (Index a = 0; a < src.monoid().size(); ++a) {
    for (Index x = 0; x < src.size(); ++x) {
      csp.add_link(x, src.act(a, x), dst.row(a));
    }
  }
  std::vector<std::vector<Index>> tables;
  const std::string what = "equivariant maps " + src.name() + " -> " + dst.name();
  csp.solve([&](const std::vector<Index>& s) { tables.push_back(s); }, limits.max_nodes,
            what);
  std::sort(tables.begin(), tables.end());
  return tables;
}

}  // namespace

std::vector<EquivariantMap> equivariant_maps(const MAction& src, const MAction& dst,
                                             const SearchLimits& limits) {
  std::vector<EquivariantMap> maps;
  for (auto& t : equivariant_tables(src, dst, limits)) {
    maps.push_back(EquivariantMap{src, dst, FinMap(src.carrier(), dst.carrier(), std::move(t))});
  }
  return maps;
}

Subobject fixed_points(const MAction& m) {
  std::vector<Index> members;
  for (Index x = 0; x < m.size(); ++x) {
    bool fixed = true;
    for (Index a = 0; a < m.monoid().size() && fixed; ++a) {
      fixed = m.act(a, x) == x;
    }
    if (fixed) {
      members.push_back(x);
    }
  }
  return subset(m.carrier(), members);
}

namespace {

template <class T>
std::vector<T> first_n(std::vector<T> v, std::size_t n) {
  if (v.size() > n) {
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(n), v.end());
  }
  return v;
}

constexpr std::size_t kNaturalitySamples = 12;

}  // namespace

AdjunctionReport adjunction_check_E_Gamma(const Monoid& m, const FinSet& x,
                                          const MAction& target) {
  if (!(target.monoid() == m)) {
    throw StructureError("adjunction_check_E_Gamma: action is over a different monoid");
  }
  const MAction   ex    = trivial_action(m, x, "E(X)");
  const Subobject gamma = fixed_points(target);
  const auto      left  = equivariant_maps(ex, target);
  const auto      right = hom_set(x, gamma.carrier);

  AdjunctionReport report;
  report.left_count  = left.size();
  report.right_count = right.size();

  // Γ-position of each carrier element, or npos when it is not fixed.
  const Index        npos = target.size();
  std::vector<Index> slot(target.size(), npos);
  for (Index i = 0; i < gamma.carrier.size(); ++i) {
    slot[gamma.inclusion(i)] = i;
  }
  auto transpose = [&](const FinMap& f) -> std::optional<FinMap> {
    std::vector<Index> t(x.size());
    for (Index y = 0; y < x.size(); ++y) {
      if (slot[f(y)] == npos) {
        return std::nullopt;
      }
      t[y] = slot[f(y)];
    }
    return FinMap(x, gamma.carrier, std::move(t));
  };
  auto untranspose = [&](const FinMap& g) {
    return compose(gamma.inclusion, g);
  };

  bool bijective = left.size() == right.size();
  for (const auto& f : left) {
    auto g    = transpose(f.map);
    bijective = bijective && g && untranspose(*g) == f.map;
  }
  for (const auto& g : right) {
    const FinMap f = untranspose(g);
    auto         back = transpose(f);
    bijective = bijective && is_equivariant(ex, target, f) && back && *back == g;
  }
  report.bijective = bijective;

  bool natural = bijective;
  if (natural) {
    const auto endo_x = first_n(hom_set(x, x), kNaturalitySamples);
    const auto endo_m = first_n(equivariant_maps(target, target), kNaturalitySamples);
    for (const auto& f : first_n(left, kNaturalitySamples)) {
      const FinMap phi_f = *transpose(f.map);
      for (const auto& p : endo_x) {
        for (const auto& t : endo_m) {
          const FinMap moved = compose(t.map, compose(f.map, p));
          auto         lhs   = transpose(moved);
          // Γt restricted to fixed points.
          std::vector<Index> gt(gamma.carrier.size());
          for (Index i = 0; i < gt.size(); ++i) {
            gt[i] = slot[t.map(gamma.inclusion(i))];
          }
          const FinMap gamma_t(gamma.carrier, gamma.carrier, std::move(gt));
          natural = natural && lhs && *lhs == compose(gamma_t, compose(phi_f, p));
        }
      }
    }
  }
  report.natural = natural;
  return report;
}

namespace {

struct Coinduced {
  MAction                         action;
  std::vector<std::vector<Index>> tables;  // by element index, over A's elements
  std::map<std::vector<Index>, Index> lookup;
};

Coinduced coinduct_impl(const MonoidHom& h, const MAction& n, const SearchLimits& limits) {
  if (!(h.src() == n.monoid())) {
    throw StructureError("coinduct: action is not over the homomorphism's source");
  }
  const Monoid& A      = h.dst();
  const MAction a_on_b = restrict_action(h, regular_action(A, "A"));
  auto          raw    = equivariant_tables(a_on_b, n, limits);

  std::vector<Symbol> symbols;
  symbols.reserve(raw.size());
  for (const auto& t : raw) {
    symbols.push_back(function_symbol(A.carrier(), n.carrier(), t));
  }
  FinSet carrier(symbols);

  Coinduced out{MAction(A, FinSet(), {}), {}, {}};
  out.tables.resize(raw.size());
  for (Index i = 0; i < raw.size(); ++i) {
    const Index pos = carrier.index_of(symbols[i]);
    out.lookup.emplace(raw[i], pos);
    out.tables[pos] = std::move(raw[i]);
  }
  std::vector<Index> t(A.size() * carrier.size());
  std::vector<Index> moved(A.size());
  for (Index a = 0; a < A.size(); ++a) {
    for (Index phi = 0; phi < carrier.size(); ++phi) {
      for (Index a2 = 0; a2 < A.size(); ++a2) {
        moved[a2] = out.tables[phi][A.multiply(a2, a)];
      }
      t[a * carrier.size() + phi] = out.lookup.at(moved);
    }
  }
  out.action = MAction(A, std::move(carrier), std::move(t), "K(" + n.name() + ")");
  return out;
}

}  // namespace

MAction coinduct(const MonoidHom& h, const MAction& n, const SearchLimits& limits) {
  return coinduct_impl(h, n, limits).action;
}

FinMap coinduction_counit(const MonoidHom& h, const MAction& n) {
  const Coinduced    k = coinduct_impl(h, n, {});
  const Index        e = h.dst().unit();
  std::vector<Index> t(k.tables.size());
  for (Index phi = 0; phi < t.size(); ++phi) {
    t[phi] = k.tables[phi][e];
  }
  return FinMap(k.action.carrier(), n.carrier(), std::move(t));
}

AdjunctionReport adjunction_check_restrict_coinduct(const MonoidHom& h, const MAction& m,
                                                    const MAction& n) {
  const Monoid&   A  = h.dst();
  const MAction   hm = restrict_action(h, m);
  const Coinduced k  = coinduct_impl(h, n, {});
  const auto      left  = equivariant_maps(hm, n);
  const auto      right = equivariant_maps(m, k.action);

  AdjunctionReport report;
  report.left_count  = left.size();
  report.right_count = right.size();

  // g ↦ (x ↦ (a ↦ g(a·x)))
  auto transpose = [&](const FinMap& g) -> std::optional<FinMap> {
    std::vector<Index> t(m.size());
    std::vector<Index> phi(A.size());
    for (Index x = 0; x < m.size(); ++x) {
      for (Index a = 0; a < A.size(); ++a) {
        phi[a] = g(m.act(a, x));
      }
      auto it = k.lookup.find(phi);
      if (it == k.lookup.end()) {
        return std::nullopt;
      }
      t[x] = it->second;
    }
    return FinMap(m.carrier(), k.action.carrier(), std::move(t));
  };
  // ψ ↦ (x ↦ ψ(x)(e))
  auto untranspose = [&](const FinMap& psi) {
    std::vector<Index> t(m.size());
    for (Index x = 0; x < m.size(); ++x) {
      t[x] = k.tables[psi(x)][A.unit()];
    }
    return FinMap(m.carrier(), n.carrier(), std::move(t));
  };

  bool bijective = left.size() == right.size();
  for (const auto& g : left) {
    auto psi  = transpose(g.map);
    bijective = bijective && psi && is_equivariant(m, k.action, *psi)
                && untranspose(*psi) == g.map;
  }
  for (const auto& psi : right) {
    const FinMap g    = untranspose(psi.map);
    auto         back = transpose(g);
    bijective = bijective && is_equivariant(hm, n, g) && back && *back == psi.map;
  }
  report.bijective = bijective;

  bool natural = bijective;
  if (natural) {
    const auto endo_m = first_n(equivariant_maps(m, m), kNaturalitySamples);
    const auto endo_n = first_n(equivariant_maps(n, n), kNaturalitySamples);
    for (const auto& g : first_n(left, kNaturalitySamples)) {
      const FinMap g_hat = *transpose(g.map);
      for (const auto& t : endo_m) {
        for (const auto& s : endo_n) {
          // K s acts on tables by postcomposition.
          std::vector<Index> ks(k.tables.size());
          std::vector<Index> phi(A.size());
          for (Index i = 0; i < ks.size(); ++i) {
            for (Index a = 0; a < A.size(); ++a) {
              phi[a] = s.map(k.tables[i][a]);
            }
            ks[i] = k.lookup.at(phi);
          }
          const FinMap k_s(k.action.carrier(), k.action.carrier(), std::move(ks));
          auto lhs = transpose(compose(s.map, compose(g.map, t.map)));
          natural  = natural && lhs && *lhs == compose(k_s, compose(g_hat, t.map));
        }
      }
    }
  }
  report.natural = natural;
  return report;
}

std::string subset_label(const Monoid& m, const std::vector<Index>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += m[members[i]];
  }
  out += '}';
  return out;
}

MAction coset_action(const Monoid& group, const Submonoid& subgroup) {
  if (!is_hopf(group)) {
    throw StructureError("coset builder requires a group; '"
                         + hopf_witness(group).value_or("?") + "' is not invertible");
  }
  std::set<std::vector<Index>> cosets;
  for (Index g = 0; g < group.size(); ++g) {
    std::vector<Index> c;
    for (Index h : subgroup.members) {
      c.push_back(group.multiply(g, h));
    }
    std::sort(c.begin(), c.end());
    cosets.insert(std::move(c));
  }
  std::vector<Symbol>                 symbols;
  std::map<Index, Symbol>             coset_of;  // element -> its coset label
  for (const auto& c : cosets) {
    symbols.push_back(subset_label(group, c));
    for (Index g : c) {
      coset_of[g] = symbols.back();
    }
  }
  FinSet             carrier(symbols);
  std::vector<Index> t(group.size() * carrier.size());
  for (const auto& c : cosets) {
    const Index from = carrier.index_of(subset_label(group, c));
    for (Index g = 0; g < group.size(); ++g) {
      t[g * carrier.size() + from] = carrier.index_of(coset_of[group.multiply(g, c.front())]);
    }
  }
  return MAction(group, std::move(carrier), std::move(t),
                 "G/" + subset_label(group, subgroup.members));
}

// Sites ----------------------------------------------------------------------

SiteSpec SiteSpec::parse(std::string_view text) {
  SiteSpec spec;
  while (!text.empty()) {
    const auto        plus  = text.find('+');
    const std::string token(text.substr(0, plus));
    text = plus == std::string_view::npos ? std::string_view{} : text.substr(plus + 1);
    if (token == "free") {
      spec.free = true;
    } else if (token == "cosets") {
      spec.cosets = true;
    } else if (token == "trivial") {
      spec.trivial = true;
    } else {
      throw StructureError("unknown site builder '" + token + "'");
    }
  }
  return spec;
}

std::string SiteSpec::describe() const {
  std::vector<std::string> parts;
  if (free) {
    parts.emplace_back("free");
  }
  if (cosets) {
    parts.emplace_back("cosets");
  }
  if (trivial) {
    parts.emplace_back("trivial");
  }
  if (!custom.empty()) {
    parts.emplace_back("custom");
  }
  std::string out;
  for (const auto& p : parts) {
    out += out.empty() ? p : "+" + p;
  }
  return out.empty() ? "empty" : out;
}

struct Site::Impl {
  Monoid                                        monoid;
  std::vector<MAction>                          objects;
  std::string                                   description;
  std::vector<std::vector<FinMap>>              morphisms;  // i * n + j
};

Site::Site(Monoid monoid, std::vector<MAction> objects, std::string description,
           const SearchLimits& limits) {
  std::set<std::string> names;
  for (Index i = 0; i < objects.size(); ++i) {
    MAction& obj = objects[i];
    if (!(obj.monoid() == monoid)) {
      throw StructureError("site object '" + obj.name() + "' is over a different monoid");
    }
    if (obj.name().empty()) {
      obj = obj.renamed("M" + std::to_string(i));
    }
    if (!names.insert(obj.name()).second) {
      throw StructureError("duplicate site object name '" + obj.name() + "'");
    }
    if (auto v = validate_action(obj)) {
      v->message = obj.name() + ": " + v->message;
      throw ValidationError(std::move(*v));
    }
  }
  auto impl = std::make_shared<Impl>(Impl{std::move(monoid), {}, std::move(description), {}});
  const std::size_t n = objects.size();
  impl->morphisms.resize(n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (auto& t : equivariant_tables(objects[i], objects[j], limits)) {
        impl->morphisms[i * n + j].emplace_back(objects[i].carrier(), objects[j].carrier(),
                                                std::move(t));
      }
    }
  }
  impl->objects = std::move(objects);
  impl_         = std::move(impl);
}

const Monoid&               Site::monoid() const noexcept { return impl_->monoid; }
const std::vector<MAction>& Site::objects() const noexcept { return impl_->objects; }
const MAction&              Site::object(Index i) const { return impl_->objects.at(i); }
std::size_t                 Site::size() const noexcept { return impl_->objects.size(); }
const std::string&          Site::description() const noexcept { return impl_->description; }

const std::vector<FinMap>& Site::morphisms(Index i, Index j) const {
  return impl_->morphisms.at(i * size() + j);
}

std::size_t Site::morphism_count() const {
  std::size_t c = 0;
  for (const auto& m : impl_->morphisms) {
    c += m.size();
  }
  return c;
}

std::optional<Index> Site::find(std::string_view name) const {
  for (Index i = 0; i < size(); ++i) {
    if (impl_->objects[i].name() == name) {
      return i;
    }
  }
  return std::nullopt;
}

Site Site::subsite(const std::vector<Index>& indices, std::string description) const {
  std::vector<MAction> objs;
  for (Index i : indices) {
    objs.push_back(object(i));
  }
  return Site(monoid(), std::move(objs), std::move(description));
}

Site canonical_site(const Monoid& m, const SiteSpec& spec, const SearchLimits& limits) {
  std::vector<MAction> objects;
  if (spec.free) {
    objects.push_back(free_action(m, FinSet::singleton(), "F(1)"));
  }
  if (spec.cosets) {
    if (!is_hopf(m)) {
      throw StructureError("coset builder requires a group; '"
                           + hopf_witness(m).value_or("?") + "' is not invertible");
    }
    for (const auto& h : enumerate_subgroups(m)) {
      objects.push_back(coset_action(m, h));
    }
  }
  if (spec.trivial) {
    objects.push_back(trivial_action(m, FinSet::singleton(), "E(1)"));
  }
  for (const auto& c : spec.custom) {
    objects.push_back(c);
  }
  return Site(m, std::move(objects), spec.describe(), limits);
}

SiteSpec default_site_spec(const Monoid& m) {
  SiteSpec spec;
  spec.free = true;
  if (is_hopf(m)) {
    spec.cosets = true;
  } else {
    spec.trivial = true;
  }
  return spec;
}

Site default_site(const Monoid& m, const SearchLimits& limits) {
  return canonical_site(m, default_site_spec(m), limits);
}

}  // namespace galmon
