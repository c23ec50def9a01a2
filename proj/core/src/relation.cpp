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

#include "galmon/relation.hpp"

#include "galmon/actions.hpp"

namespace galmon {

std::optional<Violation> Preorder::violation() const {
  const std::size_t n = size();
  if (leq.size() != n) {
    return Violation{"shape", {}, "order table has the wrong number of rows"};
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n) {
      return Violation{"shape", {labels[i]}, "order table row has the wrong length"};
    }
    if (!leq[i][i]) {
      return Violation{"reflexivity", {labels[i]}, "element is not below itself"};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!leq[i][j]) {
        continue;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (leq[j][k] && !leq[i][k]) {
          return Violation{"transitivity", {labels[i], labels[j], labels[k]},
                           "order is not transitive"};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

std::optional<Violation> shape_violation(const FiniteRelation& r) {
  if (auto bad = r.left.violation()) {
    return bad;
  }
  if (auto bad = r.right.violation()) {
    return bad;
  }
  if (r.holds.size() != r.left.size()) {
    return Violation{"shape", {}, "relation table has the wrong number of rows"};
  }
  for (const auto& row : r.holds) {
    if (row.size() != r.right.size()) {
      return Violation{"shape", {}, "relation table row has the wrong length"};
    }
  }
  return std::nullopt;
}

// Greatest element of `candidates` under `order`; the first one in index
// order when several are equivalent.
std::optional<Index> greatest(const Preorder& order, const std::vector<Index>& candidates) {
  for (Index c : candidates) {
    bool top = true;
    for (Index d : candidates) {
      if (!order.leq[d][c]) {
        top = false;
        break;
      }
    }
    if (top) {
      return c;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> functoriality_violation(const FiniteRelation& r) {
  if (auto bad = shape_violation(r)) {
    return bad;
  }
  for (Index x = 0; x < r.left.size(); ++x) {
    for (Index y = 0; y < r.right.size(); ++y) {
      if (!r.holds[x][y]) {
        continue;
      }
      for (Index x2 = 0; x2 < r.left.size(); ++x2) {
        if (!r.left.leq[x2][x]) {
          continue;
        }
        for (Index y2 = 0; y2 < r.right.size(); ++y2) {
          if (r.right.leq[y2][y] && !r.holds[x2][y2]) {
            return Violation{"functoriality",
                             {r.left.labels[x], r.right.labels[y], r.left.labels[x2],
                              r.right.labels[y2]},
                             "related pair has an unrelated pair below it"};
          }
        }
      }
    }
  }
  return std::nullopt;
}

Representants representants(const FiniteRelation& r) {
  if (auto bad = functoriality_violation(r)) {
    std::string where;
    for (const auto& w : bad->witness) {
      where += (where.empty() ? "" : ", ") + w;
    }
    throw StructureError("representants: " + bad->law + " fails at (" + where + "): "
                         + bad->message);
  }
  Representants out;
  for (Index x = 0; x < r.left.size(); ++x) {
    std::vector<Index> related;
    for (Index y = 0; y < r.right.size(); ++y) {
      if (r.holds[x][y]) {
        related.push_back(y);
      }
    }
    out.upper.push_back(greatest(r.right, related));
    if (!out.upper.back()) {
      out.missing_upper.push_back(x);
    }
  }
  for (Index y = 0; y < r.right.size(); ++y) {
    std::vector<Index> related;
    for (Index x = 0; x < r.left.size(); ++x) {
      if (r.holds[x][y]) {
        related.push_back(x);
      }
    }
    out.lower.push_back(greatest(r.left, related));
    if (!out.lower.back()) {
      out.missing_lower.push_back(y);
    }
  }
  return out;
}

Preorder subgroup_preorder(const Monoid& m) {
  const auto subs = enumerate_subgroups(m);
  Preorder   p;
  for (const auto& s : subs) {
    p.labels.push_back(subset_label(m, s.members));
  }
  p.leq.assign(subs.size(), std::vector<bool>(subs.size(), false));
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < subs.size(); ++j) {
      p.leq[i][j] = subs[i].subset_of(subs[j]);
    }
  }
  return p;
}

FiniteRelation commuting_relation(const Monoid& m) {
  const auto     subs = enumerate_subgroups(m);
  FiniteRelation r{subgroup_preorder(m), subgroup_preorder(m), {}};
  r.holds.assign(subs.size(), std::vector<bool>(subs.size(), true));
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < subs.size(); ++j) {
      for (Index a : subs[i].members) {
        for (Index b : subs[j].members) {
          if (m.multiply(a, b) != m.multiply(b, a)) {
            r.holds[i][j] = false;
          }
        }
      }
    }
  }
  return r;
}

}  // namespace galmon
