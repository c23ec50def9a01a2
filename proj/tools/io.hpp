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

// JSON reading and writing for monoids, actions, homomorphisms and
// subfunctors.

#ifndef GALMON_TOOLS_IO_HPP
#define GALMON_TOOLS_IO_HPP

#include <filesystem>
#include <string>

#include "json.hpp"

#include "galmon/actions.hpp"
#include "galmon/monoid.hpp"
#include "galmon/subfunctor.hpp"

namespace galmon::io {

using Json = nlohmann::ordered_json;

/// A malformed input document; the message names the offending field.
class SchemaError : public Error {
 public:
  using Error::Error;
};

Json read_json(const std::filesystem::path& path);

/// {"elements": [...], "unit": "e", "table": {"a": {"b": "ab"}}}. The axioms
/// are checked; a violation raises ValidationError.
Monoid parse_monoid(const Json& doc);
/// {"set": [...], "act": {"a": {"x": "ax"}}, "name": optional}.
MAction parse_action(const Json& doc, const Monoid& monoid, const std::string& fallback_name);
/// {"subsets": {"<object name>": [...]}}; unlisted objects get the empty set.
Subfunctor parse_subfunctor(const Json& doc, const Site& site);
/// {"submonoid": [...]} for an inclusion, or {"source": <monoid>, "map": {...}}.
MonoidHom parse_hom(const Json& doc, const Monoid& target);

Json monoid_json(const Monoid& m);
Json action_json(const MAction& a);
Json members_json(const Monoid& m, const std::vector<Index>& members);
Json subfunctor_json(const Subfunctor& v);
Json site_json(const Site& site);

}  // namespace galmon::io

#endif  // GALMON_TOOLS_IO_HPP
