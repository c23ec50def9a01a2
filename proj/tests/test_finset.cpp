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

#include <random>

#include "doctest.h"
#include "galmon/finset.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace galmon;

TEST_CASE("finite sets are sorted and reject duplicates") {
  const FinSet x{"b", "a", "c"};
  CHECK(x.elements() == std::vector<Symbol>{"a", "b", "c"});
  CHECK(x.index_of("c") == 2);
  CHECK_FALSE(x.find("d").has_value());
  CHECK_THROWS_AS(FinSet({"a", "a"}), StructureError);
  CHECK_THROWS_AS(x.index_of("z"), StructureError);
  CHECK(FinSet::singleton().size() == 1);
  CHECK(FinSet::range(11)[2] == "10");
}

TEST_CASE("maps must be total into the codomain") {
  const FinSet x{"a", "b"};
  CHECK_THROWS_AS(FinMap(x, x, {0}), StructureError);
  CHECK_THROWS_AS(FinMap(x, x, {0, 2}), StructureError);
  const FinMap f = FinMap::from_pairs(x, x, {{"a", "b"}, {"b", "b"}});
  CHECK(f.apply("a") == "b");
  CHECK_FALSE(f.is_injective());
  CHECK_FALSE(f.is_surjective());
  CHECK(FinMap::identity(x).is_bijective());
}

TEST_CASE("product of {a,b} and {0,1,2}") {
  const FinSet x{"a", "b"};
  const FinSet y{"0", "1", "2"};
  const FinSet p = product(x, y);
  REQUIRE(p.size() == 6);
  CHECK(p.is_product());
  CHECK(p[0] == "(a,0)");
  CHECK(p[5] == "(b,2)");
  const auto [i, j] = p.components(p.index_of("(b,1)"));
  CHECK(x[i] == "b");
  CHECK(y[j] == "1");
  CHECK(projection_left(p).apply("(b,1)") == "b");
  CHECK(projection_right(p).apply("(b,1)") == "1");
  CHECK(product(FinSet(), x).empty());
}

TEST_CASE("pairing is the unique map into the product") {
  testing::Rng rng(testing::kSeed);
  for (int round = 0; round < 20; ++round) {
    const FinSet w = FinSet::range(testing::uniform(rng, 1, 4));
    const FinSet x = FinSet::range(testing::uniform(rng, 1, 3));
    const FinSet y = FinSet::range(testing::uniform(rng, 1, 3));
    const FinMap f = testing::random_map(w, x, rng);
    const FinMap g = testing::random_map(w, y, rng);
    const FinMap p = pairing(f, g);
    CHECK(compose(projection_left(p.cod()), p) == f);
    CHECK(compose(projection_right(p.cod()), p) == g);
  }
}

TEST_CASE("exponential sizes and encodings") {
  const FinSet x{"a", "b"};
  const FinSet z{"0", "1", "2"};
  const FinSet e = exponential(x, z);
  CHECK(e.size() == 9);
  CHECK(e.is_exponential());
  CHECK(exponential(FinSet(), z).size() == 1);
  CHECK(exponential(x, FinSet()).size() == 0);
  const std::vector<Index> t{2, 0};
  CHECK(e[e.function_index(t)] == "{a↦2,b↦0}");
  const auto back = e.function_table(e.function_index(t));
  CHECK(std::vector<Index>(back.begin(), back.end()) == t);
  CHECK(std::is_sorted(e.elements().begin(), e.elements().end()));
}

TEST_CASE("exponential guard raises a sizing error") {
  SearchLimits limits;
  limits.max_elements = 100;
  CHECK_THROWS_AS(exponential(FinSet::range(5), FinSet::range(3), limits), SizingError);
}

TEST_CASE("curry and uncurry are inverse") {
  testing::Rng rng(testing::kSeed + 1);
  for (int round = 0; round < 30; ++round) {
    const FinSet y = FinSet::range(testing::uniform(rng, 1, 3));
    const FinSet x = FinSet::range(testing::uniform(rng, 1, 3));
    const FinSet z = FinSet::range(testing::uniform(rng, 1, 3));
    const FinMap f = testing::random_map(product(y, x), z, rng);
    CHECK(uncurry(curry(f)) == f);
    const FinMap g = testing::random_map(y, exponential(x, z), rng);
    CHECK(curry(uncurry(g)) == g);
  }
}

TEST_CASE("hom_pre and hom_post act by composition") {
  testing::Rng rng(testing::kSeed + 2);
  for (int round = 0; round < 20; ++round) {
    const FinSet x = FinSet::range(testing::uniform(rng, 1, 3));
    const FinSet y = FinSet::range(testing::uniform(rng, 1, 3));
    const FinSet z = FinSet::range(testing::uniform(rng, 1, 3));
    const FinMap h = testing::random_map(x, y, rng);
    const FinMap f = testing::random_map(y, z, rng);
    const FinSet yz = exponential(y, z);
    const FinSet xz = exponential(x, z);
    const FinMap pre = hom_pre(h, z);
    const Index  fy  = yz.function_index(f.table());
    const auto   got = xz.function_table(pre(fy));
    CHECK(std::vector<Index>(got.begin(), got.end()) == compose(f, h).table());
    const FinMap post = hom_post(x, f);
    const FinSet xy   = exponential(x, y);
    const auto   got2 = xz.function_table(post(xy.function_index(h.table())));
    CHECK(std::vector<Index>(got2.begin(), got2.end()) == compose(f, h).table());
  }
}

TEST_CASE("equalizer of two maps") {
  const FinSet x{"1", "2", "3"};
  const FinSet y{"a", "b"};
  const FinMap f = FinMap::from_pairs(x, y, {{"1", "a"}, {"2", "b"}, {"3", "a"}});
  const FinMap g = FinMap::from_pairs(x, y, {{"1", "a"}, {"2", "a"}, {"3", "b"}});
  const Subobject eq = equalizer(f, g);
  CHECK(eq.carrier.elements() == std::vector<Symbol>{"1"});
  CHECK(compose(f, eq.inclusion) == compose(g, eq.inclusion));
  CHECK(equalizer(f, f).carrier.size() == 3);
}

TEST_CASE("hom_set matches the brute-force odometer") {
  for (std::size_t a = 0; a <= 3; ++a) {
    for (std::size_t b = 0; b <= 3; ++b) {
      const auto maps   = hom_set(FinSet::range(a), FinSet::range(b));
      const auto tables = oracle::all_tables(a, b);
      REQUIRE(maps.size() == tables.size());
      for (std::size_t k = 0; k < maps.size(); ++k) {
        CHECK(maps[k].table() == tables[k]);
      }
    }
  }
}

TEST_CASE("swap is an involution and image is the range") {
  const FinSet x{"a", "b"};
  const FinSet y{"0", "1", "2"};
  CHECK(compose(swap_map(y, x), swap_map(x, y)) == FinMap::identity(product(x, y)));
  const FinMap f = FinMap::from_pairs(y, x, {{"0", "b"}, {"1", "b"}, {"2", "b"}});
  CHECK(image(f).carrier.elements() == std::vector<Symbol>{"b"});
}
