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

// Randomized and exhaustive sweeps of the structural laws.

#include "doctest.h"
#include "galmon/ends.hpp"
#include "galmon/fixtures.hpp"
#include "galmon/galois.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace galmon;

namespace {

Site random_site(const Monoid& m, testing::Rng& rng, std::size_t max_objects,
                 std::size_t max_points) {
  std::vector<MAction> objects;
  const std::size_t    count = testing::uniform(rng, 1, max_objects);
  for (std::size_t i = 0; i < count; ++i) {
    objects.push_back(testing::random_action(m, testing::uniform(rng, 1, max_points), rng,
                                             "M" + std::to_string(i)));
  }
  return Site(m, std::move(objects), "random");
}

}  // namespace

TEST_CASE("Inv is fixed by its homomorphism") {
  testing::Rng rng(testing::kSeed + 20);
  const auto   monoids = testing::fixture_monoids(6);
  for (int round = 0; round < 40; ++round) {
    const Monoid    a    = testing::pick(monoids, rng);
    const Monoid    b    = testing::pick(monoids, rng);
    const MonoidHom h    = testing::random_hom(b, a, rng);
    const Site      site = random_site(a, rng, 3, 4);
    const Subfunctor inv = invariants(h, site);
    CHECK(inv.is_natural());
    CHECK(fixes(h, inv));
    CHECK(inv == invariants_oracle(h, site));
  }
}

TEST_CASE("Inv is the largest fixed subfunctor") {
  testing::Rng rng(testing::kSeed + 21);
  const auto   monoids = testing::fixture_monoids(4);
  for (int round = 0; round < 15; ++round) {
    const Monoid    a    = testing::pick(monoids, rng);
    const Monoid    b    = testing::pick(monoids, rng);
    const MonoidHom h    = testing::random_hom(b, a, rng);
    const Site      site = random_site(a, rng, 3, 3);
    const Subfunctor inv = invariants(h, site);
    for (const auto& v : oracle::all_subfunctors(site)) {
      CHECK(fixes(h, v) == v.included_in(inv));
    }
  }
}

TEST_CASE("Stab is the largest submonoid fixing V") {
  testing::Rng rng(testing::kSeed + 22);
  for (int round = 0; round < 15; ++round) {
    const Monoid m    = testing::pick(testing::fixture_monoids(6), rng);
    const Site   site = random_site(m, rng, 3, 3);
    const auto   subs = enumerate_submonoids(m);
    for (const auto& v : oracle::all_subfunctors(site)) {
      const Submonoid stab = stabilizer(v);
      CHECK(fixes(stab.inclusion, v));
      for (const auto& s : subs) {
        CHECK(fixes(s.inclusion, v) == s.subset_of(stab));
      }
    }
  }
}

TEST_CASE("both maps are antitone on random sites") {
  testing::Rng rng(testing::kSeed + 23);
  for (int round = 0; round < 15; ++round) {
    const Monoid m    = testing::pick(testing::fixture_monoids(6), rng);
    const Site   site = random_site(m, rng, 3, 3);
    const auto   subs = enumerate_submonoids(m);
    for (const auto& s : subs) {
      for (const auto& t : subs) {
        if (s.subset_of(t)) {
          CHECK(invariants(t, site).included_in(invariants(s, site)));
        }
      }
    }
    const auto all = oracle::all_subfunctors(site);
    for (const auto& v : all) {
      for (const auto& w : all) {
        if (v.included_in(w)) {
          CHECK(stabilizer(w).subset_of(stabilizer(v)));
        }
      }
    }
  }
}

TEST_CASE("enlarging the site shrinks stabilizers") {
  testing::Rng rng(testing::kSeed + 24);
  for (int round = 0; round < 20; ++round) {
    const Monoid m    = testing::pick(testing::fixture_monoids(6), rng);
    const Site   big  = random_site(m, rng, 4, 3);
    const Site   small = big.subsite({0}, "first");
    for (const auto& v : tested_subfunctors(big)) {
      const Subfunctor r = v.restricted_to(small, {0});
      CHECK(stabilizer(v).subset_of(stabilizer(r)));
    }
  }
}

TEST_CASE("closure idempotence on random sites") {
  testing::Rng rng(testing::kSeed + 25);
  for (int round = 0; round < 20; ++round) {
    const Monoid m    = testing::pick(testing::fixture_monoids(6), rng);
    const Site   site = random_site(m, rng, 3, 4);
    const LawsReport r = connection_laws(site);
    CHECK(r.ok());
  }
}

TEST_CASE("stabilizer paths agree on random sites") {
  testing::Rng rng(testing::kSeed + 26);
  for (int round = 0; round < 20; ++round) {
    const Monoid        m    = testing::pick(testing::fixture_monoids(6), rng);
    const Site          site = random_site(m, rng, 3, 3);
    const TannakianData data = tannakian_data(site);
    for (const auto& v : tested_subfunctors(site)) {
      CHECK(stabilizer(v) == stabilizer_via_end(v, data));
    }
  }
}

TEST_CASE("rho is injective whenever F(1) is in the site") {
  testing::Rng rng(testing::kSeed + 27);
  for (int round = 0; round < 20; ++round) {
    const Monoid m = testing::pick(testing::fixture_monoids(6), rng);
    const MAction x = testing::random_action(m, testing::uniform(rng, 1, 3), rng, "X");
    const Site    site(m, {free_action(m, FinSet::singleton(), "F(1)"), x}, "free+random");
    CHECK(rho(m, site).map().is_injective());
  }
}

TEST_CASE("laws and both oracles on every monoid of order at most 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& m : testing::all_monoids(n)) {
      const Site          site = default_site(m);
      const TannakianData data = tannakian_data(site);
      CHECK(data.rho.map().is_injective());
      for (const auto& s : enumerate_submonoids(m)) {
        const Subfunctor v = invariants(s, site);
        CHECK(v == invariants_oracle(s.inclusion, site));
        CHECK(stabilizer(v) == stabilizer_via_end(v, data));
      }
      CHECK(connection_laws(site).ok());
      CHECK(augmentation_diagram_check(m, site, underlying_sets(site)).ok());
    }
  }
}

TEST_CASE("adjunctions on random instances") {
  testing::Rng rng(testing::kSeed + 28);
  const auto   monoids = testing::fixture_monoids(6);
  for (int round = 0; round < 30; ++round) {
    const Monoid    a = testing::pick(monoids, rng);
    const Monoid    b = testing::pick(monoids, rng);
    const MonoidHom h = testing::random_hom(b, a, rng);
    const FinSet    x = FinSet::range(testing::uniform(rng, 1, 4));
    const MAction   m = testing::random_action(a, testing::uniform(rng, 1, 4), rng);
    const MAction   n = testing::random_action(b, testing::uniform(rng, 1, 4), rng);
    CHECK(adjunction_check_E_Gamma(a, x, m).ok());
    CHECK(adjunction_check_restrict_coinduct(h, m, n).ok());
  }
}
