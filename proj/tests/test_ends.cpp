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

#include <set>

#include "doctest.h"
#include "galmon/ends.hpp"
#include "galmon/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace galmon;

namespace {

Site site_of(const Monoid& m, std::string_view spec) {
  return canonical_site(m, SiteSpec::parse(spec));
}

std::set<Family> families(const EndObject& e) {
  std::set<Family> out;
  for (Index i = 0; i < e.size(); ++i) {
    out.insert(e.family(i));
  }
  return out;
}

}  // namespace

TEST_CASE("end sizes on small sites") {
  const Diagram point = forgetful_diagram(site_of(fixtures::z2(), "trivial"));
  CHECK(internal_nat(point, point).size() == 1);

  const Diagram z2 = forgetful_diagram(site_of(fixtures::z2(), "free"));
  CHECK(internal_nat(z2, z2).size() == 2);

  const Diagram s3 = forgetful_diagram(site_of(fixtures::s3(), "free"));
  CHECK(internal_nat(s3, s3).size() == 6);
}

TEST_CASE("end over the empty diagram is terminal") {
  const Diagram empty;
  const EndObject e = internal_nat(empty, empty);
  CHECK(e.size() == 1);
  CHECK(end_monoid(e).size() == 1);
}

TEST_CASE("internal_nat agrees with the filtered product") {
  testing::Rng rng(testing::kSeed + 10);
  for (int round = 0; round < 20; ++round) {
    const Monoid m = testing::pick(testing::fixture_monoids(4), rng);
    std::vector<MAction> objects;
    const std::size_t    count = testing::uniform(rng, 1, 3);
    for (std::size_t i = 0; i < count; ++i) {
      objects.push_back(testing::random_action(m, testing::uniform(rng, 1, 3), rng,
                                               "M" + std::to_string(i)));
    }
    const Site    site(m, objects, "random");
    const Diagram u = forgetful_diagram(site);
    const EndObject e = internal_nat(u, u);
    CHECK(families(e) == oracle::end_families(u, u));
    for (Index i = 0; i < e.size(); ++i) {
      CHECK(e.is_wedge(e.family(i)));
    }
  }
}

TEST_CASE("carrier is canonically ordered and find inverts family") {
  const Diagram   u = forgetful_diagram(default_site(fixtures::z4()));
  const EndObject e = internal_nat(u, u);
  CHECK(std::is_sorted(e.carrier().elements().begin(), e.carrier().elements().end()));
  for (Index i = 0; i < e.size(); ++i) {
    CHECK(e.find(e.family(i)) == std::optional<Index>(i));
  }
}

TEST_CASE("end monoid projections are homomorphisms") {
  for (const auto& m : {fixtures::z2(), fixtures::s3(), fixtures::e2(), fixtures::t2()}) {
    const Site      site = default_site(m);
    const Diagram   u    = forgetful_diagram(site);
    const EndObject e    = internal_nat(u, u);
    const Monoid    em   = end_monoid(e);
    CHECK_FALSE(validate_monoid(em).has_value());
    for (Index o = 0; o < site.size(); ++o) {
      for (Index a = 0; a < em.size(); ++a) {
        for (Index b = 0; b < em.size(); ++b) {
          const auto& ab = e.component(em.multiply(a, b), o);
          for (Index x = 0; x < ab.size(); ++x) {
            CHECK(ab[x] == e.component(a, o)[e.component(b, o)[x]]);
          }
        }
      }
      const auto& unit = e.component(em.unit(), o);
      for (Index x = 0; x < unit.size(); ++x) {
        CHECK(unit[x] == x);
      }
    }
  }
}

TEST_CASE("rho reconstructs the monoid over F(1)") {
  for (const auto& m : {fixtures::trivial(), fixtures::z2(), fixtures::z3(), fixtures::s3(),
                        fixtures::e2(), fixtures::left_zero(), fixtures::t2()}) {
    const Site      site = site_of(m, "free");
    const MonoidHom r    = rho(m, site);
    CHECK_FALSE(validate_hom(r).has_value());
    CHECK(r.map().is_bijective());
  }
}

TEST_CASE("rho over sites without F(1) may have a kernel") {
  // Cosets only: the regular coset object G/{e} is still faithful.
  const Monoid    s3 = fixtures::s3();
  CHECK(rho(s3, site_of(s3, "cosets")).map().is_injective());
  // The natural action alone is faithful too, but the trivial object is not.
  const Site trivial_only = site_of(s3, "trivial");
  const MonoidHom r       = rho(s3, trivial_only);
  CHECK(r.map().cod().size() == 1);
  CHECK(kernel_pairs(r).size() == 15);
}

TEST_CASE("lifting and restricting along rho reproduces every action") {
  const Monoid    m    = fixtures::s3();
  const Site      site = default_site(m);
  const Diagram   u    = forgetful_diagram(site);
  const EndObject e    = internal_nat(u, u);
  const MonoidHom r    = rho(m, site, e);
  for (Index o = 0; o < site.size(); ++o) {
    const MAction lifted = universal_action(e, o);
    CHECK_FALSE(validate_action(lifted).has_value());
    CHECK(restrict_action(r, lifted).table() == site.object(o).table());
  }
}

TEST_CASE("restriction to the identity and to one object") {
  const Site      site = default_site(fixtures::z4());
  const Diagram   u    = forgetful_diagram(site);
  const EndObject e    = internal_nat(u, u);
  std::vector<Index> all(site.size());
  std::iota(all.begin(), all.end(), Index{0});
  const MonoidHom id = restrict_end(e, e, all);
  CHECK(id.map() == FinMap::identity(e.carrier()));

  const Site      one = site.subsite({2}, "one");
  const Diagram   u1  = forgetful_diagram(one);
  const EndObject e1  = internal_nat(u1, u1);
  const MonoidHom r   = restrict_end(e, e1, {2});
  for (Index a = 0; a < e.size(); ++a) {
    CHECK(e1.component(r(a), 0) == e.component(a, 2));
  }
  CHECK_FALSE(validate_hom(r).has_value());
}

TEST_CASE("restriction is functorial along two-stage inclusions") {
  const Site      site = default_site(fixtures::s3());
  const Diagram   u    = forgetful_diagram(site);
  const EndObject e    = internal_nat(u, u);
  const Site      mid  = site.subsite({0, 2, 5}, "mid");
  const Diagram   um   = forgetful_diagram(mid);
  const EndObject em   = internal_nat(um, um);
  const Site      low  = mid.subsite({1, 2}, "low");
  const Diagram   ul   = forgetful_diagram(low);
  const EndObject el   = internal_nat(ul, ul);
  const MonoidHom a    = restrict_end(e, em, {0, 2, 5});
  const MonoidHom b    = restrict_end(em, el, {1, 2});
  const MonoidHom c    = restrict_end(e, el, {2, 5});
  CHECK(compose(b, a).map() == c.map());
}

TEST_CASE("restrict_end rejects functors that lose arrows") {
  const Site      site = default_site(fixtures::z2());
  const Diagram   u    = forgetful_diagram(site);
  const EndObject e    = internal_nat(u, u);
  const Diagram   sets = set_diagram(underlying_sets(site));
  const EndObject ec   = internal_nat(sets, sets);
  // Sending every set to an action keeps only equivariant maps: not a functor.
  REQUIRE(ec.target().objects.size() == 3);
  CHECK_THROWS_AS(restrict_end(e, ec, {0, 1, 2}), StructureError);
}

TEST_CASE("internal_nat rejects mismatched shapes") {
  const Diagram a = forgetful_diagram(default_site(fixtures::z2()));
  const Diagram b = forgetful_diagram(default_site(fixtures::z3()));
  CHECK_THROWS_AS(internal_nat(a, b), StructureError);
  Diagram broken = a;
  broken.arrows[0].table.push_back(0);
  CHECK_THROWS_AS(internal_nat(broken, broken), StructureError);
}

TEST_CASE("sizing guard") {
  const Diagram u = forgetful_diagram(default_site(fixtures::s3()));
  SearchLimits  tiny;
  tiny.max_nodes = 2;
  CHECK_THROWS_AS(internal_nat(u, u, tiny), SizingError);
}

TEST_CASE("precompose along whole and empty subfunctors") {
  const Site      site = default_site(fixtures::s3());
  const Diagram   u    = forgetful_diagram(site);
  const EndObject e    = internal_nat(u, u);

  const Precomposition whole = precompose(e, Subfunctor::whole(site));
  CHECK(whole.map.is_bijective());
  CHECK(whole.square_commutes);

  const Precomposition empty = precompose(e, Subfunctor::empty(site));
  CHECK(empty.target.size() == 1);
  CHECK(empty.square_commutes);
}

TEST_CASE("precompose equals direct family restriction") {
  const Monoid    s3   = fixtures::s3();
  const Site      site = default_site(s3);
  const Diagram   u    = forgetful_diagram(site);
  const EndObject e    = internal_nat(u, u);
  const Subfunctor v   = generated_subfunctor(site, {{2, 0}, {5, 1}});
  const Precomposition p = precompose(e, v);
  CHECK(p.square_commutes);
  for (Index a = 0; a < e.size(); ++a) {
    for (Index o = 0; o < site.size(); ++o) {
      std::vector<Index> expected;
      for (Index x : v.at(o)) {
        expected.push_back(e.component(a, o)[x]);
      }
      CHECK(p.target.component(p.map(a), o) == expected);
    }
  }
}

TEST_CASE("augmentation diagram") {
  for (const auto& m : {fixtures::trivial(), fixtures::z2(), fixtures::s3(), fixtures::e2()}) {
    const Site               site = default_site(m);
    const AugmentationReport r    = augmentation_diagram_check(m, site, underlying_sets(site));
    CHECK(r.section_identity);
    CHECK(r.trivial_path_ok);
    CHECK(r.square_commutes);
  }
}
