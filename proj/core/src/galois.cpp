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

#include "galmon/galois.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace galmon {

namespace {

void require_same_monoid(const MonoidHom& h, const Site& site, const char* what) {
  if (!(h.dst() == site.monoid())) {
    throw StructureError(std::string(what) + ": homomorphism does not land in the site's monoid");
  }
}

// Both parallel arrows X ⇉ [B, X], one row at a time, for when [A, X] is
// too large to materialize.
std::vector<Index> invariants_by_rows(const MonoidHom& h, const MAction& obj) {
  std::vector<Index> out;
  for (Index x = 0; x < obj.size(); ++x) {
    bool fixed = true;
    for (Index b = 0; b < h.src().size() && fixed; ++b) {
      fixed = obj.act(h(b), x) == x;
    }
    if (fixed) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<Index> invariants_by_equalizer(const MonoidHom& h, const MAction& obj,
                                           const Augmentation& aug) {
  const FinSet& a = obj.monoid().carrier();
  const FinSet& x = obj.carrier();
  const FinMap  swap = swap_map(x, a);  // X × A → A × X

  // ε × X: A × X → 1 × X ≅ X.
  const FinMap counit_x =
      compose(projection_right(product(FinSet::singleton(), x)),
              product_map(aug.counit, FinMap::identity(x)));

  const FinMap act_curried     = curry(compose(obj.action_map(), swap));
  const FinMap trivial_curried = curry(compose(counit_x, swap));
  const FinMap restrict        = hom_pre(h.map(), x);

  const Subobject eq = equalizer(compose(restrict, act_curried), compose(restrict, trivial_curried));
  return eq.inclusion.table();
}

}  // namespace

bool fixes(const MonoidHom& h, const Subfunctor& v) {
  const Site& site = v.site();
  require_same_monoid(h, site, "fixes");
  for (Index o = 0; o < site.size(); ++o) {
    const MAction& obj = site.object(o);
    for (Index x : v.at(o)) {
      for (Index b = 0; b < h.src().size(); ++b) {
        if (obj.act(h(b), x) != x) {
          return false;
        }
      }
    }
  }
  return true;
}

Subfunctor invariants(const MonoidHom& h, const Site& site, const SearchLimits& limits) {
  require_same_monoid(h, site, "invariants");
  const Augmentation              aug = canonical_augmentation(site.monoid());
  std::vector<std::vector<Index>> subsets;
  subsets.reserve(site.size());
  for (const MAction& obj : site.objects()) {
    const std::size_t exp_size = saturating_power(obj.size(), site.monoid().size());
    if (exp_size > limits.max_elements) {
      subsets.push_back(invariants_by_rows(h, obj));
      continue;
    }
    subsets.push_back(invariants_by_equalizer(h, obj, aug));
  }
  return Subfunctor(site, std::move(subsets));
}

Subfunctor invariants(const Submonoid& s, const Site& site, const SearchLimits& limits) {
  return invariants(s.inclusion, site, limits);
}

Subfunctor invariants_oracle(const MonoidHom& h, const Site& site) {
  require_same_monoid(h, site, "invariants_oracle");
  std::vector<std::vector<Index>> subsets;
  for (const MAction& obj : site.objects()) {
    std::vector<Index> members;
    for (Index x = 0; x < obj.size(); ++x) {
      bool fixed = true;
      for (Index b = 0; b < h.src().size(); ++b) {
        if (obj.act(h.map()(b), x) != x) {
          fixed = false;
          break;
        }
      }
      if (fixed) {
        members.push_back(x);
      }
    }
    subsets.push_back(std::move(members));
  }
  return Subfunctor(site, std::move(subsets));
}

namespace {

void require_natural(const Subfunctor& v) {
  if (auto bad = v.naturality_violation()) {
    throw StructureError("subfunctor is not natural: " + bad->message);
  }
}

}  // namespace

Submonoid stabilizer(const Subfunctor& v) {
  require_natural(v);
  const Site&        site = v.site();
  const Monoid&      m    = site.monoid();
  std::vector<Index> members;
  for (Index a = 0; a < m.size(); ++a) {
    bool fixes_all = true;
    for (Index o = 0; o < site.size() && fixes_all; ++o) {
      for (Index x : v.at(o)) {
        if (site.object(o).act(a, x) != x) {
          fixes_all = false;
          break;
        }
      }
    }
    if (fixes_all) {
      members.push_back(a);
    }
  }
  return make_submonoid(m, std::move(members));
}

TannakianData tannakian_data(const Site& site, const SearchLimits& limits) {
  const Diagram u     = forgetful_diagram(site);
  EndObject     end_u = internal_nat(u, u, limits);
  MonoidHom     r     = rho(site.monoid(), site, end_u);
  FinMap        t     = trivial_path(site.monoid(), site, end_u);
  return TannakianData{std::move(end_u), std::move(r), std::move(t)};
}

Submonoid stabilizer_via_end(const Subfunctor& v, const SearchLimits& limits) {
  return stabilizer_via_end(v, tannakian_data(v.site(), limits), limits);
}

Submonoid stabilizer_via_end(const Subfunctor& v, const TannakianData& data,
                             const SearchLimits& limits) {
  require_natural(v);
  const Precomposition pre = precompose(data.end_u, v, limits);
  if (!pre.square_commutes) {
    throw StructureError("stabilizer_via_end: restriction square does not commute");
  }
  const Subobject eq =
      equalizer(compose(pre.map, data.rho.map()), compose(pre.map, data.trivial));
  return make_submonoid(v.site().monoid(), eq.inclusion.table());
}

namespace {

bool subfunctor_less(const Subfunctor& a, const Subfunctor& b) {
  if (a.total_size() != b.total_size()) {
    return a.total_size() < b.total_size();
  }
  return a.subsets() < b.subsets();
}

// Inv is only ever evaluated on submonoids, so memoize by member list.
class InvariantsCache {
 public:
  InvariantsCache(const Site& site, const SearchLimits& limits) : site_(site), limits_(limits) {}

  const Subfunctor& operator()(const Submonoid& s) {
    auto it = cache_.find(s.members);
    if (it == cache_.end()) {
      it = cache_.emplace(s.members, invariants(s, site_, limits_)).first;
    }
    return it->second;
  }

 private:
  const Site&                                 site_;
  SearchLimits                                limits_;
  std::map<std::vector<Index>, Subfunctor>    cache_;
};

}  // namespace

CorrespondenceReport galois_correspondence(const Site& site, const SearchLimits& limits) {
  CorrespondenceReport report{site, {}, {}, {}, true, true};
  InvariantsCache      inv(site, limits);

  const std::vector<Submonoid> subs = enumerate_submonoids(site.monoid());

  std::vector<Subfunctor> images;
  for (const Submonoid& s : subs) {
    const Subfunctor& v = inv(s);
    if (std::find(images.begin(), images.end(), v) == images.end()) {
      images.push_back(v);
    }
  }
  std::sort(images.begin(), images.end(), subfunctor_less);

  for (const Subfunctor& v : images) {
    Submonoid  stab    = stabilizer(v);
    Subfunctor closure = inv(stab);
    const bool closed  = closure == v;
    report.subfunctors.push_back(SubfunctorEntry{v, std::move(stab), std::move(closure), closed});
  }

  for (const Submonoid& s : subs) {
    const Subfunctor& v   = inv(s);
    const Index       pos = static_cast<Index>(
        std::find(images.begin(), images.end(), v) - images.begin());
    Submonoid  closure = stabilizer(v);
    const bool closed  = closure == s;
    report.submonoids.push_back(SubmonoidEntry{s, pos, std::move(closure), closed});
    if (closed) {
      report.pairs.emplace_back(report.submonoids.size() - 1, pos);
    }
  }

  // Closed submonoids and closed subfunctors must match one to one.
  std::set<Index> hit;
  for (const auto& [s, v] : report.pairs) {
    report.bijective = report.bijective && report.subfunctors[v].closed && hit.insert(v).second;
  }
  std::size_t closed_subfunctors = 0;
  for (const auto& e : report.subfunctors) {
    closed_subfunctors += e.closed ? 1 : 0;
  }
  report.bijective = report.bijective && hit.size() == closed_subfunctors;

  for (const auto& [s1, v1] : report.pairs) {
    for (const auto& [s2, v2] : report.pairs) {
      const bool sub = report.submonoids[s1].submonoid.subset_of(report.submonoids[s2].submonoid);
      const bool sup = report.subfunctors[v2].subfunctor.included_in(report.subfunctors[v1].subfunctor);
      if (sub != sup) {
        report.order_reversing = false;
      }
    }
  }
  return report;
}

std::vector<Subfunctor> tested_subfunctors(const Site& site, const SearchLimits& limits) {
  std::vector<Subfunctor> out{Subfunctor::empty(site), Subfunctor::whole(site)};
  for (const Submonoid& s : enumerate_submonoids(site.monoid())) {
    out.push_back(invariants(s, site, limits));
  }
  std::vector<std::pair<Index, Index>> points;
  for (Index o = 0; o < site.size(); ++o) {
    for (Index x = 0; x < site.object(o).size(); ++x) {
      points.emplace_back(o, x);
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    out.push_back(generated_subfunctor(site, {points[i]}));
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      out.push_back(generated_subfunctor(site, {points[i], points[j]}));
    }
  }
  std::sort(out.begin(), out.end(), subfunctor_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LawsReport connection_laws(const Site& site, const SearchLimits& limits) {
  return connection_laws(site, {}, limits);
}

LawsReport connection_laws(const Site& site, const std::vector<Subfunctor>& extra,
                           const SearchLimits& limits) {
  LawsReport      report;
  InvariantsCache inv(site, limits);

  auto note = [&](bool& flag, const char* law, std::vector<Symbol> witness, std::string msg) {
    flag = false;
    if (report.violations.size() < 8) {
      report.violations.push_back(Violation{law, std::move(witness), std::move(msg)});
    }
  };
  auto label = [&](const Submonoid& s) { return subset_label(site.monoid(), s.members); };

  const std::vector<Submonoid> subs = enumerate_submonoids(site.monoid());
  report.submonoids_checked         = subs.size();
  for (const Submonoid& s : subs) {
    const Subfunctor& v    = inv(s);
    const Submonoid   stab = stabilizer(v);
    if (!s.subset_of(stab)) {
      note(report.unit_submonoid, "S <= Stab Inv S", {label(s)}, "submonoid not contained in its closure");
    }
    if (!(inv(stab) == v)) {
      note(report.inv_idempotent, "Inv Stab Inv = Inv", {label(s)}, "Inv Stab Inv S differs from Inv S");
    }
  }
  for (const Submonoid& s : subs) {
    for (const Submonoid& t : subs) {
      if (s.subset_of(t) && !inv(t).included_in(inv(s))) {
        note(report.antitone, "Inv antitone", {label(s), label(t)}, "Inv does not reverse inclusion");
      }
    }
  }

  std::vector<Subfunctor> tested = tested_subfunctors(site, limits);
  for (const Subfunctor& v : extra) {
    require_natural(v);
    if (std::find(tested.begin(), tested.end(), v) == tested.end()) {
      tested.push_back(v);
    }
  }
  report.subfunctors_checked           = tested.size();
  std::vector<Submonoid> stabs;
  stabs.reserve(tested.size());
  for (std::size_t i = 0; i < tested.size(); ++i) {
    const Subfunctor& v    = tested[i];
    Submonoid         stab = stabilizer(v);
    const Subfunctor& back = inv(stab);
    const std::string tag  = "V" + std::to_string(i);
    if (!v.included_in(back)) {
      note(report.unit_subfunctor, "V <= Inv Stab V", {tag}, "subfunctor not contained in its closure");
    }
    if (!(stabilizer(back) == stab)) {
      note(report.stab_idempotent, "Stab Inv Stab = Stab", {tag}, "Stab Inv Stab V differs from Stab V");
    }
    stabs.push_back(std::move(stab));
  }
  for (std::size_t i = 0; i < tested.size(); ++i) {
    for (std::size_t j = 0; j < tested.size(); ++j) {
      if (i != j && tested[i].included_in(tested[j]) && !stabs[j].subset_of(stabs[i])) {
        note(report.antitone, "Stab antitone", {"V" + std::to_string(i), "V" + std::to_string(j)},
             "Stab does not reverse inclusion");
      }
    }
  }
  return report;
}

}  // namespace galmon
