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

#include <map>
#include <set>

#include "doctest.h"
#include "galmon/fixtures.hpp"
#include "galmon/monoid.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace galmon;

namespace {

std::vector<Symbol> names(const Monoid& m, const std::vector<Index>& members) {
  std::vector<Symbol> out;
  for (Index a : members) {
    out.push_back(m[a]);
  }
  return out;
}

}  // namespace

TEST_CASE("fixture monoids satisfy the axioms") {
  for (const auto& m : testing::fixture_monoids(6)) {
    CHECK_FALSE(validate_monoid(m).has_value());
  }
}

TEST_CASE("validation names a witness") {
  // z is not a right unit: e must fail the unit law first.
  const FinSet bad_carrier{"e", "z"};
  const Monoid not_unital(bad_carrier, {0, 1, 1, 0}, 1);
  auto v = validate_monoid(not_unital);
  REQUIRE(v.has_value());
  CHECK(v->law.find("unit") != std::string::npos);

  const FinSet c{"a", "b", "e"};
  // aa = b, ab = ba = bb = a: (aa)b = a but a(ab) = b.
  const Monoid broken(c, {1, 0, 0, 0, 0, 1, 0, 1, 2}, 2);
  auto w = validate_monoid(broken);
  REQUIRE(w.has_value());
  CHECK(w->law == "associativity");
  CHECK(w->witness.size() == 3);
  CHECK_THROWS_AS(checked(broken), ValidationError);
}

TEST_CASE("submonoid counts") {
  CHECK(enumerate_submonoids(fixtures::s3()).size() == 6);
  CHECK(enumerate_subgroups(fixtures::s3()).size() == 6);
  CHECK(enumerate_subgroups(fixtures::z4()).size() == 3);
  CHECK(enumerate_subgroups(fixtures::e2()).size() == 1);
  CHECK(enumerate_submonoids(fixtures::e2()).size() == 2);
  CHECK(enumerate_submonoids(fixtures::trivial()).size() == 1);

  const Monoid z4 = fixtures::z4();
  const auto   subs = enumerate_subgroups(z4);
  CHECK(names(z4, subs[0].members) == std::vector<Symbol>{"e"});
  CHECK(names(z4, subs[1].members) == std::vector<Symbol>{"e", "g2"});
  CHECK(subs[2].members.size() == 4);
}

TEST_CASE("submonoid enumeration agrees with the subset scan") {
  for (const auto& m : testing::fixture_monoids(6)) {
    std::set<std::vector<Index>> expected;
    for (const auto& s : oracle::submonoids(m)) {
      expected.insert(s);
    }
    std::set<std::vector<Index>> got;
    for (const auto& s : enumerate_submonoids(m)) {
      got.insert(s.members);
      CHECK_FALSE(validate_hom(s.inclusion).has_value());
    }
    CHECK(got == expected);
  }
}

TEST_CASE("make_submonoid rejects non-closed subsets") {
  const Monoid s3 = fixtures::s3();
  const Index  e  = s3.carrier().index_of("e");
  const Index  t  = s3.carrier().index_of("(12)");
  const Index  u  = s3.carrier().index_of("(13)");
  CHECK_NOTHROW(make_submonoid(s3, {e, t}));
  CHECK_THROWS_AS(make_submonoid(s3, {e, t, u}), StructureError);
  CHECK_THROWS_AS(make_submonoid(s3, {t}), StructureError);
}

TEST_CASE("fusion morphism examples") {
  const Monoid z2 = fixtures::z2();
  const FinMap f  = fusion_morphism(z2);
  CHECK(f.apply("(s,s)") == "(s,e)");
  const Monoid e2 = fixtures::e2();
  const FinMap g  = fusion_morphism(e2);
  CHECK(g.apply("(z,e)") == "(z,z)");
  CHECK(g.apply("(z,z)") == "(z,z)");
  CHECK(fusion_morphism(fixtures::trivial()) == FinMap::identity(product(FinSet{"e"}, FinSet{"e"})));
}

TEST_CASE("hopf and antipode") {
  CHECK(is_hopf(fixtures::z2()));
  CHECK(antipode(fixtures::z2()) == FinMap::identity(fixtures::z2().carrier()));
  CHECK(antipode(fixtures::z3()).apply("g") == "g2");
  CHECK_FALSE(is_hopf(fixtures::e2()));
  CHECK(hopf_witness(fixtures::e2()) == std::optional<Symbol>("z"));
  try {
    antipode(fixtures::e2());
    FAIL("expected NotHopfError");
  } catch (const NotHopfError& e) {
    CHECK(e.witness() == "z");
  }
}

TEST_CASE("hopf agrees with the invertibility search on all small tables") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& m : testing::all_monoids(n)) {
      CHECK(is_hopf(m) == oracle::is_group(m));
    }
  }
}

TEST_CASE("exhaustive tables give the known number of monoids") {
  // Monoids up to isomorphism of orders 1..4.
  const std::map<std::size_t, std::size_t> expected{{1, 1}, {2, 2}, {3, 7}, {4, 35}};
  for (const auto& [n, count] : expected) {
    std::set<std::vector<Index>> classes;
    for (const auto& m : testing::all_monoids(n)) {
      REQUIRE(oracle::associative(m));
      classes.insert(testing::canonical_table(m));
    }
    CHECK(classes.size() == count);
  }
}

TEST_CASE("homomorphism checks and composition") {
  const Monoid z2 = fixtures::z2();
  const Monoid s3 = fixtures::s3();
  const MonoidHom h(z2, s3, FinMap::from_pairs(z2.carrier(), s3.carrier(),
                                                {{"e", "e"}, {"s", "(12)"}}));
  CHECK_FALSE(validate_hom(h).has_value());
  const MonoidHom bad(z2, s3, FinMap::from_pairs(z2.carrier(), s3.carrier(),
                                                  {{"e", "e"}, {"s", "(123)"}}));
  CHECK(validate_hom(bad).has_value());
  CHECK(compose(MonoidHom::identity(s3), h) == h);

  const Monoid    z4 = fixtures::z4();
  const MonoidHom sq(z4, z4, FinMap::from_pairs(z4.carrier(), z4.carrier(),
                                                 {{"e", "e"}, {"g", "g2"}, {"g2", "e"}, {"g3", "g2"}}));
  CHECK_FALSE(validate_hom(sq).has_value());
  CHECK(kernel_pairs(sq).size() == 2);
}

TEST_CASE("canonical augmentation is the constant map") {
  const Augmentation a = canonical_augmentation(fixtures::s3());
  CHECK(a.counit.cod().size() == 1);
  CHECK(a.counit.dom() == fixtures::s3().carrier());
}
