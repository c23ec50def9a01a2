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

#include "io.hpp"

#include <fstream>

namespace galmon::io {

namespace {

const Json& field(const Json& doc, const char* key, const std::string& where) {
  if (!doc.is_object()) {
    throw SchemaError(where + ": expected an object");
  }
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw SchemaError(where + ": missing field '" + key + "'");
  }
  return *it;
}

std::string text(const Json& v, const std::string& where) {
  if (!v.is_string()) {
    throw SchemaError(where + ": expected a string");
  }
  return v.get<std::string>();
}

std::vector<Symbol> symbol_list(const Json& v, const std::string& where) {
  if (!v.is_array()) {
    throw SchemaError(where + ": expected an array of strings");
  }
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(text(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

FinSet symbol_set(const Json& v, const std::string& where) {
  try {
    return FinSet(symbol_list(v, where));
  } catch (const StructureError& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

Index member(const FinSet& set, const std::string& symbol, const std::string& where) {
  auto idx = set.find(symbol);
  if (!idx) {
    throw SchemaError(where + ": unknown element '" + symbol + "'");
  }
  return *idx;
}

// Reads the cell doc[a][b] of a two-level lookup table.
const Json& cell(const Json& table, const Symbol& a, const Symbol& b, const std::string& where) {
  auto row = table.find(a);
  if (row == table.end() || !row->is_object()) {
    throw SchemaError(where + "." + a + ": missing row");
  }
  auto c = row->find(b);
  if (c == row->end()) {
    throw SchemaError(where + "." + a + "." + b + ": missing cell");
  }
  return *c;
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw SchemaError(path.string() + ": cannot open file");
  }
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

Monoid parse_monoid(const Json& doc) {
  const FinSet  carrier = symbol_set(field(doc, "elements", "monoid"), "elements");
  const Symbol  unit    = text(field(doc, "unit", "monoid"), "unit");
  const Json&   table   = field(doc, "table", "monoid");
  if (carrier.empty()) {
    throw SchemaError("elements: a monoid needs at least one element");
  }
  if (!table.is_object()) {
    throw SchemaError("table: expected an object");
  }
  std::vector<Index> t(carrier.size() * carrier.size());
  for (Index a = 0; a < carrier.size(); ++a) {
    for (Index b = 0; b < carrier.size(); ++b) {
      const std::string where = "table." + carrier[a] + "." + carrier[b];
      t[a * carrier.size() + b] =
          member(carrier, text(cell(table, carrier[a], carrier[b], "table"), where), where);
    }
  }
  Monoid m(carrier, std::move(t), member(carrier, unit, "unit"));
  checked(m);
  return m;
}

MAction parse_action(const Json& doc, const Monoid& monoid, const std::string& fallback_name) {
  const FinSet x   = symbol_set(field(doc, "set", "action"), "set");
  const Json&  act = field(doc, "act", "action");
  if (!act.is_object()) {
    throw SchemaError("act: expected an object");
  }
  std::string name = fallback_name;
  if (auto it = doc.find("name"); it != doc.end()) {
    name = text(*it, "name");
  }
  std::vector<Index> t(monoid.size() * x.size());
  for (Index a = 0; a < monoid.size(); ++a) {
    for (Index i = 0; i < x.size(); ++i) {
      const std::string where = "act." + monoid[a] + "." + x[i];
      t[a * x.size() + i]     = member(x, text(cell(act, monoid[a], x[i], "act"), where), where);
    }
  }
  MAction out(monoid, x, std::move(t), name);
  if (auto v = validate_action(out)) {
    v->message = name + ": " + v->message;
    throw ValidationError(std::move(*v));
  }
  return out;
}

Subfunctor parse_subfunctor(const Json& doc, const Site& site) {
  const Json& subsets = field(doc, "subsets", "subfunctor");
  if (!subsets.is_object()) {
    throw SchemaError("subsets: expected an object");
  }
  std::vector<std::vector<Index>> parts(site.size());
  for (const auto& [name, list] : subsets.items()) {
    auto o = site.find(name);
    if (!o) {
      throw SchemaError("subsets." + name + ": no site object with this name");
    }
    for (const auto& s : symbol_list(list, "subsets." + name)) {
      parts[*o].push_back(member(site.object(*o).carrier(), s, "subsets." + name));
    }
  }
  Subfunctor v(site, std::move(parts));
  if (auto bad = v.naturality_violation()) {
    throw ValidationError(std::move(*bad));
  }
  return v;
}

MonoidHom parse_hom(const Json& doc, const Monoid& target) {
  if (doc.is_object() && doc.contains("submonoid")) {
    std::vector<Index> members;
    for (const auto& s : symbol_list(doc["submonoid"], "submonoid")) {
      members.push_back(member(target.carrier(), s, "submonoid"));
    }
    try {
      return make_submonoid(target, std::move(members)).inclusion;
    } catch (const StructureError& e) {
      throw ValidationError(Violation{"submonoid", {}, e.what()});
    }
  }
  const Monoid source = parse_monoid(field(doc, "source", "hom"));
  const Json&  map    = field(doc, "map", "hom");
  if (!map.is_object()) {
    throw SchemaError("map: expected an object");
  }
  std::vector<Index> t(source.size());
  for (Index b = 0; b < source.size(); ++b) {
    auto it = map.find(source[b]);
    if (it == map.end()) {
      throw SchemaError("map." + source[b] + ": missing cell");
    }
    t[b] = member(target.carrier(), text(*it, "map." + source[b]), "map." + source[b]);
  }
  MonoidHom h(source, target, FinMap(source.carrier(), target.carrier(), std::move(t)));
  if (auto v = validate_hom(h)) {
    throw ValidationError(std::move(*v));
  }
  return h;
}

Json monoid_json(const Monoid& m) {
  Json table = Json::object();
  for (Index a = 0; a < m.size(); ++a) {
    Json row = Json::object();
    for (Index b = 0; b < m.size(); ++b) {
      row[m[b]] = m[m.multiply(a, b)];
    }
    table[m[a]] = std::move(row);
  }
  return Json{{"elements", m.carrier().elements()}, {"unit", m[m.unit()]}, {"table", table}};
}

Json action_json(const MAction& a) {
  const Monoid& m   = a.monoid();
  Json          act = Json::object();
  for (Index g = 0; g < m.size(); ++g) {
    Json row = Json::object();
    for (Index x = 0; x < a.size(); ++x) {
      row[a.carrier()[x]] = a.carrier()[a.act(g, x)];
    }
    act[m[g]] = std::move(row);
  }
  return Json{{"name", a.name()}, {"set", a.carrier().elements()}, {"act", act}};
}

Json members_json(const Monoid& m, const std::vector<Index>& members) {
  Json out = Json::array();
  for (Index a : members) {
    out.push_back(m[a]);
  }
  return out;
}

Json subfunctor_json(const Subfunctor& v) {
  Json subsets = Json::object();
  for (Index o = 0; o < v.site().size(); ++o) {
    const MAction& obj  = v.site().object(o);
    Json           list = Json::array();
    for (Index x : v.at(o)) {
      list.push_back(obj.carrier()[x]);
    }
    subsets[obj.name()] = std::move(list);
  }
  return Json{{"subsets", subsets}};
}

Json site_json(const Site& site) {
  Json objects = Json::array();
  for (const auto& obj : site.objects()) {
    objects.push_back(Json{{"name", obj.name()}, {"size", obj.size()}});
  }
  return Json{{"spec", site.description()},
              {"objects", objects},
              {"morphisms", site.morphism_count()}};
}

}  // namespace galmon::io
