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

#include "doctest.h"
#include "galmon/actions.hpp"
#include "galmon/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace galmon;

TEST_CASE("validate_action catches both laws") {
  const Monoid z2 = fixtures::z2();
  CHECK_FALSE(validate_action(fixtures::z2_swap()).has_value());
  // e does not act as the identity.
  const MAction no_unit(z2, FinSet{"0", "1"}, {1, 0, 1, 0});
  auto v = validate_action(no_unit);
  REQUIRE(v.has_value());
  CHECK(v->law == "unit");
  // s·s sends 0 to 1 but e fixes it.
  const MAction no_assoc(z2, FinSet{"0", "1"}, {0, 1, 1, 1});
  auto w = validate_action(no_assoc);
  REQUIRE(w.has_value());
  CHECK(w->law == "associativity");
}

TEST_CASE("free, regular and trivial actions") {
  const Monoid  s3 = fixtures::s3();
  const MAction f1 = free_action(s3, FinSet::singleton());
  CHECK(f1.size() == 6);
  CHECK_FALSE(validate_action(f1).has_value());
  CHECK_FALSE(validate_action(regular_action(s3)).has_value());
  const MAction e = trivial_action(s3, FinSet{"x", "y"});
  for (Index a = 0; a < s3.size(); ++a) {
    CHECK(e.act(a, 1) == 1);
  }
  CHECK(fixed_points(e).carrier.size() == 2);
  CHECK(fixed_points(f1).carrier.size() == 0);
  CHECK(fixed_points(fixtures::s3_natural()).carrier.size() == 0);
}

TEST_CASE("equivariant maps from F(1) are the points, for groups") {
  testing::Rng rng(testing::kSeed);
  for (const auto& m : fixtures::small_groups()) {
    const MAction f1 = free_action(m, FinSet::singleton());
    for (std::size_t n = 1; n <= 3; ++n) {
      const MAction target = testing::random_action(m, n, rng);
      CHECK(equivariant_maps(f1, target).size() == target.size());
    }
  }
}

TEST_CASE("equivariant_maps agrees with the brute-force filter") {
  testing::Rng rng(testing::kSeed + 3);
  for (int round = 0; round < 40; ++round) {
    const Monoid  m   = testing::pick(testing::fixture_monoids(6), rng);
    const MAction src = testing::random_action(m, testing::uniform(rng, 1, 4), rng);
    const MAction dst = testing::random_action(m, testing::uniform(rng, 1, 4), rng);
    const auto    got = equivariant_maps(src, dst);
    const auto    exp = oracle::equivariant_tables(src, dst);
    REQUIRE(got.size() == exp.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      CHECK(got[k].map.table() == exp[k]);
    }
  }
}

TEST_CASE("equivariant_maps rejects different monoids") {
  CHECK_THROWS_AS(equivariant_maps(fixtures::z2_swap(), fixtures::s3_natural()), StructureError);
}

TEST_CASE("restriction along a composite is the composite of restrictions") {
  testing::Rng rng(testing::kSeed + 4);
  const auto   monoids = testing::fixture_monoids(6);
  for (int round = 0; round < 30; ++round) {
    const Monoid    a = testing::pick(monoids, rng);
    const Monoid    b = testing::pick(monoids, rng);
    const Monoid    c = testing::pick(monoids, rng);
    const MonoidHom g = testing::random_hom(b, a, rng);
    const MonoidHom h = testing::random_hom(c, b, rng);
    const MAction   m = testing::random_action(a, testing::uniform(rng, 1, 4), rng);
    CHECK(restrict_action(compose(g, h), m) == restrict_action(h, restrict_action(g, m)));
    CHECK_FALSE(validate_action(restrict_action(g, m)).has_value());
  }
}

TEST_CASE("E is left adjoint to fixed points") {
  testing::Rng rng(testing::kSeed + 5);
  for (int round = 0; round < 25; ++round) {
    const Monoid  m = testing::pick(testing::fixture_monoids(6), rng);
    const FinSet  x = FinSet::range(testing::uniform(rng, 1, 3));
    const MAction t = testing::random_action(m, testing::uniform(rng, 1, 4), rng);
    const AdjunctionReport r = adjunction_check_E_Gamma(m, x, t);
    CHECK(r.ok());
    CHECK(r.left_count == saturating_power(fixed_points(t).carrier.size(), x.size()));
  }
}

TEST_CASE("coinduction along S3 ⊇ <(12)>") {
  const Monoid   s3  = fixtures::s3();
  const auto     sub = make_submonoid(s3, {s3.carrier().index_of("e"), s3.carrier().index_of("(12)")});
  testing::Rng   rng(7);
  const MAction  n   = testing::random_action(sub.monoid, 2, rng);
  const MAction  k   = coinduct(sub.inclusion, n);
  CHECK_FALSE(validate_action(k).has_value());
  // K N has |N|^[A:B] points: B-equivariant maps are fixed by their values
  // on coset representatives.
  CHECK(k.size() == saturating_power(n.size(), 3));
  const FinMap counit = coinduction_counit(sub.inclusion, n);
  CHECK(is_equivariant(restrict_action(sub.inclusion, k), n, counit));
}

TEST_CASE("restriction is left adjoint to coinduction") {
  testing::Rng rng(testing::kSeed + 6);
  const auto   monoids = testing::fixture_monoids(6);
  for (int round = 0; round < 25; ++round) {
    const Monoid    a = testing::pick(monoids, rng);
    const Monoid    b = testing::pick(monoids, rng);
    const MonoidHom h = testing::random_hom(b, a, rng);
    const MAction   m = testing::random_action(a, testing::uniform(rng, 1, 3), rng);
    const MAction   n = testing::random_action(b, testing::uniform(rng, 1, 3), rng);
    const AdjunctionReport r = adjunction_check_restrict_coinduct(h, m, n);
    CHECK(r.ok());
    CHECK(r.left_count == oracle::equivariant_tables(restrict_action(h, m), n).size());
  }
}

TEST_CASE("coinduction along an isomorphism has a bijective counit") {
  const Monoid z3 = fixtures::z3();
  testing::Rng  rng(11);
  const MAction n = testing::random_action(z3, 3, rng);
  CHECK(coinduction_counit(MonoidHom::identity(z3), n).is_bijective());
}

TEST_CASE("coset actions") {
  const Monoid s3   = fixtures::s3();
  const auto   subs = enumerate_subgroups(s3);
  for (const auto& h : subs) {
    const MAction c = coset_action(s3, h);
    CHECK(c.size() * h.members.size() == 6);
    CHECK_FALSE(validate_action(c).has_value());
  }
  CHECK_THROWS_AS(coset_action(fixtures::e2(), enumerate_submonoids(fixtures::e2())[0]),
                  StructureError);
}

TEST_CASE("site specs and default sites") {
  CHECK(SiteSpec::parse("free+cosets").describe() == "free+cosets");
  CHECK(SiteSpec::parse("").describe() == "empty");
  CHECK_THROWS_AS(SiteSpec::parse("free+bogus"), StructureError);

  const Site s3 = default_site(fixtures::s3());
  CHECK(s3.description() == "free+cosets");
  CHECK(s3.size() == 7);
  CHECK(s3.object(0).name() == "F(1)");
  CHECK(s3.find("G/{(12),e}").has_value());

  const Site e2 = default_site(fixtures::e2());
  CHECK(e2.description() == "free+trivial");
  CHECK(e2.size() == 2);
  CHECK(e2.object(1).name() == "E(1)");
}

TEST_CASE("site morphisms are the full hom-sets") {
  const Site site = default_site(fixtures::z4());
  for (Index i = 0; i < site.size(); ++i) {
    for (Index j = 0; j < site.size(); ++j) {
      const auto exp = oracle::equivariant_tables(site.object(i), site.object(j));
      REQUIRE(site.morphisms(i, j).size() == exp.size());
      for (std::size_t k = 0; k < exp.size(); ++k) {
        CHECK(site.morphisms(i, j)[k].table() == exp[k]);
      }
    }
  }
}

TEST_CASE("sites reject duplicate names and foreign monoids") {
  const Monoid s3 = fixtures::s3();
  const MAction a = fixtures::s3_natural();
  CHECK_THROWS_AS(Site(s3, {a, a}, "dup"), StructureError);
  CHECK_THROWS_AS(Site(s3, {fixtures::z2_swap()}, "foreign"), StructureError);
  const Site sub = Site(s3, {a, a.renamed("copy")}, "pair").subsite({1}, "one");
  CHECK(sub.size() == 1);
  CHECK(sub.object(0).name() == "copy");
}
