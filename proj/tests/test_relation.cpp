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
#include "galmon/fixtures.hpp"
#include "galmon/relation.hpp"

using namespace galmon;

namespace {

Preorder chain(std::size_t n) {
  Preorder p;
  for (std::size_t i = 0; i < n; ++i) {
    p.labels.push_back("c" + std::to_string(i));
    p.leq.emplace_back(n, false);
    for (std::size_t j = i; j < n; ++j) {
      p.leq[i][j] = true;
    }
  }
  return p;
}

Preorder antichain(std::size_t n) {
  Preorder p;
  for (std::size_t i = 0; i < n; ++i) {
    p.labels.push_back("a" + std::to_string(i));
    p.leq.emplace_back(n, false);
    p.leq[i][i] = true;
  }
  return p;
}

}  // namespace

TEST_CASE("preorder validation") {
  CHECK_FALSE(chain(3).violation().has_value());
  Preorder p = chain(3);
  p.leq[1][1] = false;
  CHECK(p.violation()->law == "reflexivity");
  Preorder q = antichain(3);
  q.leq[0][1] = q.leq[1][2] = true;
  CHECK(q.violation()->law == "transitivity");
}

TEST_CASE("centralizers as representants of the commuting relation") {
  const Monoid         s3 = fixtures::s3();
  const FiniteRelation r  = commuting_relation(s3);
  const Representants  rep = representants(r);
  REQUIRE(rep.upper.size() == 6);
  CHECK(rep.missing_upper.empty());
  // The whole group commutes only with the trivial subgroup.
  CHECK(r.right.labels[*rep.upper.back()] == "{e}");
  CHECK(r.right.labels[*rep.upper.front()] == r.right.labels.back());
  // A transposition subgroup is its own centralizer.
  CHECK(*rep.upper[1] == 1);
  CHECK(r.left.labels[*rep.lower.back()] == "{e}");
}

TEST_CASE("everything related gives the top element") {
  FiniteRelation r{chain(3), chain(4), {}};
  r.holds.assign(3, std::vector<bool>(4, true));
  const Representants rep = representants(r);
  for (const auto& u : rep.upper) {
    CHECK(u == std::optional<Index>(3));
  }
  for (const auto& l : rep.lower) {
    CHECK(l == std::optional<Index>(2));
  }
}

TEST_CASE("nothing related on a preorder without top is reported missing") {
  FiniteRelation r{antichain(2), antichain(3), {}};
  r.holds.assign(2, std::vector<bool>(3, false));
  const Representants rep = representants(r);
  CHECK(rep.missing_upper == std::vector<Index>{0, 1});
  CHECK(rep.missing_lower == std::vector<Index>{0, 1, 2});
}

TEST_CASE("maximal but not greatest is absent") {
  FiniteRelation r{chain(1), antichain(2), {}};
  r.holds = {{true, true}};
  const Representants rep = representants(r);
  CHECK_FALSE(rep.upper[0].has_value());
}

TEST_CASE("non-functorial relations are rejected") {
  FiniteRelation r{chain(2), chain(2), {}};
  r.holds = {{false, false}, {true, false}};  // c1 R c0 but not c0 R c0
  CHECK(functoriality_violation(r).has_value());
  CHECK_THROWS_AS(representants(r), StructureError);
}
