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

#include "galmon/fixtures.hpp"

#include <array>
#include <functional>
#include <map>

namespace galmon::fixtures {

namespace {

Symbol power_symbol(std::size_t k) {
  if (k == 0) {
    return "e";
  }
  return k == 1 ? "g" : "g" + std::to_string(k);
}

using Perm = std::array<int, 3>;  // images of 1, 2, 3

const std::vector<std::pair<Symbol, Perm>>& s3_elements() {
  static const std::vector<std::pair<Symbol, Perm>> elements{
      {"e", {1, 2, 3}},     {"(12)", {2, 1, 3}},  {"(13)", {3, 2, 1}},
      {"(23)", {1, 3, 2}},  {"(123)", {2, 3, 1}}, {"(132)", {3, 1, 2}},
  };
  return elements;
}

Monoid from_rule(std::vector<Symbol> elements,
                 const std::function<Symbol(const Symbol&, const Symbol&)>& rule) {
  return checked(Monoid::from_function(std::move(elements), "e", rule));
}

}  // namespace

Monoid trivial() { return Monoid::trivial(); }

Monoid cyclic(std::size_t n) {
  std::vector<Symbol>           elements;
  std::map<Symbol, std::size_t> exponent;
  for (std::size_t k = 0; k < n; ++k) {
    elements.push_back(power_symbol(k));
    exponent[elements.back()] = k;
  }
  return from_rule(elements, [&](const Symbol& a, const Symbol& b) {
    return power_symbol((exponent.at(a) + exponent.at(b)) % n);
  });
}

Monoid z2() {
  return from_rule({"e", "s"}, [](const Symbol& a, const Symbol& b) {
    return a == b ? Symbol("e") : Symbol("s");
  });
}

Monoid z3() { return cyclic(3); }
Monoid z4() { return cyclic(4); }
Monoid z5() { return cyclic(5); }
Monoid z6() { return cyclic(6); }

Monoid klein() {
  static const std::map<Symbol, int> bits{{"e", 0}, {"a", 1}, {"b", 2}, {"c", 3}};
  static const std::array<Symbol, 4> names{"e", "a", "b", "c"};
  return from_rule({"e", "a", "b", "c"}, [](const Symbol& x, const Symbol& y) {
    return names[static_cast<std::size_t>(bits.at(x) ^ bits.at(y))];
  });
}

Monoid s3() {
  std::map<Symbol, Perm> perm;
  std::map<Perm, Symbol> name;
  std::vector<Symbol>    elements;
  for (const auto& [s, p] : s3_elements()) {
    perm[s] = p;
    name[p] = s;
    elements.push_back(s);
  }
  return from_rule(elements, [&](const Symbol& a, const Symbol& b) {
    const Perm& sigma = perm.at(a);
    const Perm& tau   = perm.at(b);
    Perm        out{};
    for (std::size_t i = 0; i < 3; ++i) {
      out[i] = sigma[static_cast<std::size_t>(tau[i] - 1)];
    }
    return name.at(out);
  });
}

Monoid e2() {
  return from_rule({"e", "z"}, [](const Symbol& a, const Symbol& b) {
    return (a == "z" || b == "z") ? Symbol("z") : Symbol("e");
  });
}

Monoid left_zero() {
  return from_rule({"e", "a", "b"},
                   [](const Symbol& a, const Symbol& b) { return a == "e" ? b : a; });
}

Monoid nil3() {
  return from_rule({"e", "n", "0"}, [](const Symbol& a, const Symbol& b) {
    if (a == "e") {
      return b;
    }
    if (b == "e") {
      return a;
    }
    return Symbol("0");
  });
}

Monoid t2() {
  // Each map written as (image of 1, image of 2).
  static const std::map<Symbol, std::array<int, 2>> maps{
      {"e", {1, 2}}, {"t", {2, 1}}, {"c1", {1, 1}}, {"c2", {2, 2}}};
  return from_rule({"e", "t", "c1", "c2"}, [](const Symbol& a, const Symbol& b) {
    const auto& f = maps.at(a);
    const auto& g = maps.at(b);
    const std::array<int, 2> h{f[static_cast<std::size_t>(g[0] - 1)],
                               f[static_cast<std::size_t>(g[1] - 1)]};
    for (const auto& [s, m] : maps) {
      if (m == h) {
        return s;
      }
    }
    return Symbol("e");
  });
}

Monoid trunc3() {
  static const std::map<Symbol, int> power{{"e", 0}, {"a", 1}, {"a2", 2}};
  return from_rule({"e", "a", "a2"}, [](const Symbol& x, const Symbol& y) {
    const int k = std::min(power.at(x) + power.at(y), 2);
    return k == 0 ? Symbol("e") : (k == 1 ? Symbol("a") : Symbol("a2"));
  });
}

Monoid z2_zero() {
  return from_rule({"e", "s", "0"}, [](const Symbol& a, const Symbol& b) {
    if (a == "0" || b == "0") {
      return Symbol("0");
    }
    return a == b ? Symbol("e") : Symbol("s");
  });
}

std::vector<Monoid> small_groups() {
  return {trivial(), z2(), z3(), z4(), klein(), z5(), z6(), s3()};
}

std::vector<Monoid> non_groups() {
  return {e2(), left_zero(), nil3(), t2(), trunc3(), z2_zero()};
}

namespace {

const std::vector<std::pair<std::string, Monoid (*)()>>& registry() {
  static const std::vector<std::pair<std::string, Monoid (*)()>> table{
      {"trivial", &trivial}, {"z2", &z2},       {"z3", &z3},         {"z4", &z4},
      {"z5", &z5},           {"z6", &z6},       {"klein", &klein},   {"s3", &s3},
      {"e2", &e2},           {"left_zero", &left_zero}, {"nil3", &nil3}, {"t2", &t2},
      {"trunc3", &trunc3},   {"z2_zero", &z2_zero},
  };
  return table;
}

}  // namespace

std::vector<std::string> monoid_names() {
  std::vector<std::string> names;
  for (const auto& [name, make] : registry()) {
    names.push_back(name);
  }
  return names;
}

std::optional<Monoid> monoid_by_name(std::string_view name) {
  for (const auto& [n, make] : registry()) {
    if (n == name) {
      return make();
    }
  }
  return std::nullopt;
}

MAction s3_natural() {
  const Monoid       m = s3();
  const FinSet       x{"1", "2", "3"};
  std::vector<Index> table(m.size() * 3);
  for (const auto& [s, p] : s3_elements()) {
    const Index a = m.carrier().index_of(s);
    for (std::size_t i = 0; i < 3; ++i) {
      table[a * 3 + i] = static_cast<Index>(p[i] - 1);
    }
  }
  return MAction(m, x, std::move(table), "S3 on {1,2,3}");
}

MAction z2_swap() {
  const Monoid m = z2();
  // Rows follow carrier order: e then s.
  return MAction(m, FinSet{"0", "1"}, {0, 1, 1, 0}, "swap");
}

}  // namespace galmon::fixtures
