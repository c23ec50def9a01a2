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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "galmon/ends.hpp"
#include "galmon/fixtures.hpp"
#include "galmon/galois.hpp"
#include "io.hpp"

namespace galmon::cli {

namespace fs = std::filesystem;
using io::Json;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

constexpr std::size_t kRandomSubfunctors = 16;

Json header(const std::string& command) {
  return Json{{"schema", kSchema}, {"command", command}};
}

Monoid load_monoid(const JobConfig& job) {
  if (job.monoid.empty()) {
    throw UsageError("--monoid is required");
  }
  constexpr std::string_view kBuiltin = "builtin:";
  if (job.monoid.rfind(kBuiltin, 0) == 0) {
    auto m = fixtures::monoid_by_name(job.monoid.substr(kBuiltin.size()));
    if (!m) {
      throw UsageError("unknown builtin monoid '" + job.monoid.substr(kBuiltin.size()) + "'");
    }
    return *m;
  }
  return io::parse_monoid(io::read_json(job.monoid));
}

MAction load_action(const fs::path& path, const Monoid& m) {
  return io::parse_action(io::read_json(path), m, path.stem().string());
}

std::vector<MAction> load_directory(const fs::path& dir, const Monoid& m) {
  if (!fs::is_directory(dir)) {
    throw UsageError("custom site directory '" + dir.string() + "' does not exist");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<MAction> out;
  for (const auto& f : files) {
    out.push_back(load_action(f, m));
  }
  return out;
}

Site load_site(const JobConfig& job, const Monoid& m, const SearchLimits& limits) {
  if (job.site == "default") {
    return canonical_site(m, default_site_spec(m), limits);
  }
  std::string          builders;
  std::vector<MAction> custom;
  std::string_view     rest = job.site;
  while (!rest.empty()) {
    const auto        plus  = rest.find('+');
    const std::string token(rest.substr(0, plus));
    rest = plus == std::string_view::npos ? std::string_view{} : rest.substr(plus + 1);
    if (token.rfind("custom:", 0) == 0) {
      for (auto& a : load_directory(token.substr(7), m)) {
        custom.push_back(std::move(a));
      }
    } else {
      builders += (builders.empty() ? "" : "+") + token;
    }
  }
  SiteSpec spec;
  try {
    spec = SiteSpec::parse(builders);
  } catch (const StructureError& e) {
    throw UsageError(std::string("--site: ") + e.what());
  }
  spec.custom = std::move(custom);
  return canonical_site(m, spec, limits);
}

const Subfunctor load_subfunctor(const JobConfig& job, const Site& site) {
  if (job.sub.empty()) {
    throw UsageError("--sub is required");
  }
  return io::parse_subfunctor(io::read_json(job.sub), site);
}

Json violation_json(const Violation& v) {
  return Json{{"law", v.law}, {"witness", v.witness}, {"message", v.message}};
}

std::string members_label(const Monoid& m, const std::vector<Index>& members) {
  return subset_label(m, members);
}

// validate ------------------------------------------------------------------

int cmd_validate(const JobConfig& job, const SearchLimits& limits, std::ostream& out) {
  const Monoid m      = load_monoid(job);
  Json         report = header("validate");
  report["monoid"]    = Json{{"order", m.size()},
                             {"unit", m[m.unit()]},
                             {"group", is_hopf(m)}};
  Json actions = Json::array();
  for (const auto& path : job.actions) {
    const MAction a     = load_action(path, m);
    const Subobject fix = fixed_points(a);
    actions.push_back(Json{{"name", a.name()},
                           {"size", a.size()},
                           {"fixed_points", fix.carrier.elements()}});
  }
  report["actions"] = actions;
  if (!job.sub.empty()) {
    const Site site    = load_site(job, m, limits);
    const Subfunctor v = load_subfunctor(job, site);
    report["site"]       = io::site_json(site);
    report["subfunctor"] = Json{{"natural", true}, {"size", v.total_size()}};
  }
  report["ok"] = true;
  out << report.dump(2) << '\n';
  return kExitOk;
}

// subgroups -----------------------------------------------------------------

int cmd_subgroups(const JobConfig& job, std::ostream& out) {
  const Monoid m      = load_monoid(job);
  Json         report = header("subgroups");
  Json         subs   = Json::array();
  for (const auto& s : enumerate_submonoids(m)) {
    subs.push_back(io::members_json(m, s.members));
  }
  Json groups = Json::array();
  for (const auto& s : enumerate_subgroups(m)) {
    groups.push_back(io::members_json(m, s.members));
  }
  report["order"]      = m.size();
  report["submonoids"] = subs;
  report["subgroups"]  = groups;
  out << report.dump(2) << '\n';
  return kExitOk;
}

// hopf ----------------------------------------------------------------------

int cmd_hopf(const JobConfig& job, std::ostream& out) {
  const Monoid m      = load_monoid(job);
  Json         report = header("hopf");
  report["hopf"]      = is_hopf(m);
  if (auto w = hopf_witness(m)) {
    report["witness"] = *w;
  } else {
    const FinMap s   = antipode(m);
    Json         inv = Json::object();
    bool         eqs = true;
    for (Index a = 0; a < m.size(); ++a) {
      inv[m[a]] = m[s(a)];
      eqs       = eqs && m.multiply(s(a), a) == m.unit() && m.multiply(a, s(a)) == m.unit();
    }
    report["antipode"]           = inv;
    report["antipode_equations"] = eqs;
  }
  out << report.dump(2) << '\n';
  return kExitOk;
}

// inv -----------------------------------------------------------------------

int cmd_inv(const JobConfig& job, const SearchLimits& limits, std::ostream& out) {
  const Monoid m    = load_monoid(job);
  const Site   site = load_site(job, m, limits);

  std::vector<std::pair<Json, MonoidHom>> homs;
  if (!job.hom.empty()) {
    const MonoidHom h = io::parse_hom(io::read_json(job.hom), m);
    homs.emplace_back(Json{{"source", h.src().carrier().elements()},
                           {"image", h.map().table().empty()
                                         ? Json::array()
                                         : io::members_json(m, image(h.map()).inclusion.table())}},
                      h);
  } else {
    for (const auto& s : enumerate_submonoids(m)) {
      homs.emplace_back(Json{{"submonoid", io::members_json(m, s.members)}}, s.inclusion);
    }
  }

  bool agree   = true;
  Json entries = Json::array();
  for (const auto& [label, h] : homs) {
    const Subfunctor inv    = invariants(h, site, limits);
    const Subfunctor oracle = invariants_oracle(h, site);
    Json             entry  = label;
    entry["invariants"]     = io::subfunctor_json(inv)["subsets"];
    entry["oracle_agrees"]  = inv == oracle;
    agree                   = agree && inv == oracle;
    entries.push_back(std::move(entry));
  }
  Json report       = header("inv");
  report["site"]    = io::site_json(site);
  report["entries"] = entries;
  report["agree"]   = agree;
  out << report.dump(2) << '\n';
  return agree ? kExitOk : kExitInvalid;
}

// stab ----------------------------------------------------------------------

int cmd_stab(const JobConfig& job, const SearchLimits& limits, std::ostream& out) {
  const Monoid     m      = load_monoid(job);
  const Site       site   = load_site(job, m, limits);
  const Subfunctor v      = load_subfunctor(job, site);
  const Submonoid  direct = stabilizer(v);
  const Submonoid  viaend = stabilizer_via_end(v, limits);

  Json report                  = header("stab");
  report["site"]               = io::site_json(site);
  report["subfunctor"]         = io::subfunctor_json(v)["subsets"];
  report["stabilizer"]         = io::members_json(m, direct.members);
  report["stabilizer_via_end"] = io::members_json(m, viaend.members);
  report["agree"]              = direct == viaend;
  out << report.dump(2) << '\n';
  return direct == viaend ? kExitOk : kExitInvalid;
}

// end -----------------------------------------------------------------------

int cmd_end(const JobConfig& job, const SearchLimits& limits, std::ostream& out) {
  const Monoid        m     = load_monoid(job);
  const Site          site  = load_site(job, m, limits);
  const TannakianData data  = tannakian_data(site, limits);
  const Monoid        end_m = end_monoid(data.end_u);

  Json rho_map = Json::object();
  for (Index a = 0; a < m.size(); ++a) {
    rho_map[m[a]] = end_m[data.rho(a)];
  }
  Json kernel = Json::array();
  for (const auto& [a, b] : kernel_pairs(data.rho)) {
    kernel.push_back(Json::array({m[a], m[b]}));
  }
  const AugmentationReport aug =
      augmentation_diagram_check(m, site, underlying_sets(site), limits);

  Json report              = header("end");
  report["site"]           = io::site_json(site);
  report["end_size"]       = data.end_u.size();
  report["search_nodes"]   = data.end_u.nodes_visited();
  report["end_monoid"]     = io::monoid_json(end_m);
  report["rho"]            = rho_map;
  report["rho_injective"]  = data.rho.map().is_injective();
  report["rho_bijective"]  = data.rho.map().is_bijective();
  report["rho_kernel"]     = kernel;
  report["augmentation"]   = Json{{"base_end_size", aug.base_end_size},
                                  {"section_identity", aug.section_identity},
                                  {"trivial_path", aug.trivial_path_ok},
                                  {"square", aug.square_commutes}};
  out << report.dump(2) << '\n';
  return aug.ok() ? kExitOk : kExitInvalid;
}

// corr ----------------------------------------------------------------------

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out;
}

// Covering pairs (i, j) of the order `less_eq` restricted to n items.
std::vector<std::pair<Index, Index>> hasse(std::size_t n,
                                           const std::function<bool(Index, Index)>& less_eq) {
  std::vector<std::pair<Index, Index>> edges;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j || !less_eq(i, j) || less_eq(j, i)) {
        continue;
      }
      bool cover = true;
      for (Index k = 0; k < n && cover; ++k) {
        cover = k == i || k == j || !(less_eq(i, k) && less_eq(k, j));
      }
      if (cover) {
        edges.emplace_back(i, j);
      }
    }
  }
  return edges;
}

void write_dot(const CorrespondenceReport& r, std::ostream& out) {
  const Monoid& m = r.site.monoid();
  out << "digraph galois {\n  rankdir=BT;\n  node [shape=box];\n";
  out << "  subgraph cluster_submonoids {\n    label=\"submonoids\";\n";
  for (Index i = 0; i < r.submonoids.size(); ++i) {
    const auto& e = r.submonoids[i];
    out << "    s" << i << " [label=\"" << dot_escape(members_label(m, e.submonoid.members))
        << "\"" << (e.closed ? ", peripheries=2" : "") << "];\n";
  }
  for (const auto& [i, j] : hasse(r.submonoids.size(), [&](Index a, Index b) {
         return r.submonoids[a].submonoid.subset_of(r.submonoids[b].submonoid);
       })) {
    out << "    s" << i << " -> s" << j << ";\n";
  }
  out << "  }\n  subgraph cluster_subfunctors {\n    label=\"invariant subfunctors\";\n";
  for (Index i = 0; i < r.subfunctors.size(); ++i) {
    const auto& e = r.subfunctors[i];
    out << "    v" << i << " [label=\"Inv " << dot_escape(members_label(m, e.stabilizer.members))
        << "\\n|V| = " << e.subfunctor.total_size() << "\""
        << (e.closed ? ", peripheries=2" : "") << "];\n";
  }
  for (const auto& [i, j] : hasse(r.subfunctors.size(), [&](Index a, Index b) {
         return r.subfunctors[a].subfunctor.included_in(r.subfunctors[b].subfunctor);
       })) {
    out << "    v" << i << " -> v" << j << ";\n";
  }
  out << "  }\n";
  for (const auto& [s, v] : r.pairs) {
    out << "  s" << s << " -> v" << v
        << " [style=dashed, dir=both, constraint=false, color=gray40];\n";
  }
  out << "}\n";
}

int cmd_corr(const JobConfig& job, const SearchLimits& limits, std::ostream& out) {
  const Monoid               m    = load_monoid(job);
  const Site                 site = load_site(job, m, limits);
  const CorrespondenceReport r    = galois_correspondence(site, limits);

  if (job.out == "dot") {
    write_dot(r, out);
    return kExitOk;
  }

  Json subs          = Json::array();
  std::size_t closed_s = 0;
  for (const auto& e : r.submonoids) {
    subs.push_back(Json{{"members", io::members_json(m, e.submonoid.members)},
                        {"invariants", e.invariants},
                        {"closure", io::members_json(m, e.closure.members)},
                        {"closed", e.closed}});
    closed_s += e.closed ? 1 : 0;
  }
  Json        funs     = Json::array();
  std::size_t closed_v = 0;
  for (const auto& e : r.subfunctors) {
    funs.push_back(Json{{"subsets", io::subfunctor_json(e.subfunctor)["subsets"]},
                        {"stabilizer", io::members_json(m, e.stabilizer.members)},
                        {"closed", e.closed}});
    closed_v += e.closed ? 1 : 0;
  }
  Json pairs = Json::array();
  for (const auto& [s, v] : r.pairs) {
    pairs.push_back(Json::array({s, v}));
  }
  Json report                  = header("corr");
  report["site"]               = io::site_json(site);
  report["submonoids"]         = subs;
  report["subfunctors"]        = funs;
  report["closed_submonoids"]  = closed_s;
  report["closed_subfunctors"] = closed_v;
  report["pairs"]              = pairs;
  report["bijective"]          = r.bijective;
  report["order_reversing"]    = r.order_reversing;
  out << report.dump(2) << '\n';
  return kExitOk;
}

// coinduce ------------------------------------------------------------------

int cmd_coinduce(const JobConfig& job, const SearchLimits& limits, std::ostream& out) {
  const Monoid m = load_monoid(job);
  if (job.hom.empty()) {
    throw UsageError("coinduce needs --hom");
  }
  if (job.actions.empty() || job.actions.size() > 2) {
    throw UsageError("coinduce needs --action N (over the source of --hom), "
                     "optionally followed by --action M (over --monoid)");
  }
  const MonoidHom h      = io::parse_hom(io::read_json(job.hom), m);
  const MAction   n      = load_action(job.actions[0], h.src());
  const MAction   k      = coinduct(h, n, limits);
  const FinMap    counit = coinduction_counit(h, n);

  Json report          = header("coinduce");
  report["coinduced"]  = io::action_json(k);
  report["counit"]     = Json{{"equivariant", is_equivariant(restrict_action(h, k), n, counit)},
                              {"surjective", counit.is_surjective()},
                              {"bijective", counit.is_bijective()}};
  bool ok = true;
  if (job.actions.size() == 2) {
    const MAction          mm  = load_action(job.actions[1], m);
    const AdjunctionReport adj = adjunction_check_restrict_coinduct(h, mm, n);
    report["adjunction"]       = Json{{"restricted_maps", adj.left_count},
                                      {"coinduced_maps", adj.right_count},
                                      {"bijective", adj.bijective},
                                      {"natural", adj.natural}};
    ok = adj.ok();
  }
  out << report.dump(2) << '\n';
  return ok ? kExitOk : kExitInvalid;
}

// laws ----------------------------------------------------------------------

std::vector<Subfunctor> random_subfunctors(const Site& site, std::uint64_t seed) {
  std::vector<std::pair<Index, Index>> points;
  for (Index o = 0; o < site.size(); ++o) {
    for (Index x = 0; x < site.object(o).size(); ++x) {
      points.emplace_back(o, x);
    }
  }
  std::vector<Subfunctor> out;
  if (points.empty()) {
    return out;
  }
  std::mt19937_64                       rng(seed);
  std::uniform_int_distribution<std::size_t> count(1, 3);
  std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
  for (std::size_t i = 0; i < kRandomSubfunctors; ++i) {
    std::vector<std::pair<Index, Index>> seeds;
    for (std::size_t k = count(rng); k > 0; --k) {
      seeds.push_back(points[pick(rng)]);
    }
    out.push_back(generated_subfunctor(site, seeds));
  }
  return out;
}

int cmd_laws(const JobConfig& job, const SearchLimits& limits, std::ostream& out) {
  const Monoid     m    = load_monoid(job);
  const Site       site = load_site(job, m, limits);
  const LawsReport r    = connection_laws(site, random_subfunctors(site, job.seed), limits);

  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back(violation_json(v));
  }
  Json report                   = header("laws");
  report["site"]                = io::site_json(site);
  report["seed"]                = job.seed;
  report["laws"]                = Json{{"unit_submonoid", r.unit_submonoid},
                                       {"unit_subfunctor", r.unit_subfunctor},
                                       {"inv_idempotent", r.inv_idempotent},
                                       {"stab_idempotent", r.stab_idempotent},
                                       {"antitone", r.antitone}};
  report["submonoids_checked"]  = r.submonoids_checked;
  report["subfunctors_checked"] = r.subfunctors_checked;
  report["violations"]          = violations;
  report["ok"]                  = r.ok();
  out << report.dump(2) << '\n';
  return r.ok() ? kExitOk : kExitInvalid;
}

int dispatch(const JobConfig& job, std::ostream& out) {
  if (job.out != "json" && !(job.out == "dot" && job.command == "corr")) {
    throw UsageError("--out " + job.out + " is not available for '" + job.command + "'");
  }
  SearchLimits limits;
  limits.max_nodes = job.max_families;

  if (job.command == "validate") return cmd_validate(job, limits, out);
  if (job.command == "subgroups") return cmd_subgroups(job, out);
  if (job.command == "hopf") return cmd_hopf(job, out);
  if (job.command == "inv") return cmd_inv(job, limits, out);
  if (job.command == "stab") return cmd_stab(job, limits, out);
  if (job.command == "end") return cmd_end(job, limits, out);
  if (job.command == "corr") return cmd_corr(job, limits, out);
  if (job.command == "coinduce") return cmd_coinduce(job, limits, out);
  if (job.command == "laws") return cmd_laws(job, limits, out);
  throw UsageError("unknown command '" + job.command + "'");
}

int fail(const JobConfig& job, std::ostream& out, std::ostream& err, int code,
         const std::string& kind, const std::string& message, const Violation* v = nullptr) {
  Json report  = header(job.command);
  report["ok"] = false;
  Json error{{"kind", kind}, {"message", message}};
  if (v != nullptr) {
    error["violation"] = violation_json(*v);
  }
  report["error"] = error;
  out << report.dump(2) << '\n';
  err << "galmon: " << kind << " error: " << message << '\n';
  return code;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"validate", "subgroups", "hopf",
                                              "inv",      "stab",      "end",
                                              "corr",     "coinduce",  "laws"};
  return names;
}

int run(const JobConfig& job, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(job, out);
  } catch (const SizingError& e) {
    return fail(job, out, err, kExitSizing, "sizing", e.what());
  } catch (const ValidationError& e) {
    return fail(job, out, err, kExitInvalid, "validation", e.what(), &e.violation());
  } catch (const io::SchemaError& e) {
    return fail(job, out, err, kExitInvalid, "schema", e.what());
  } catch (const UsageError& e) {
    return fail(job, out, err, kExitInvalid, "usage", e.what());
  } catch (const NotHopfError& e) {
    return fail(job, out, err, kExitInvalid, "structure", e.what());
  } catch (const Error& e) {
    return fail(job, out, err, kExitInvalid, "structure", e.what());
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  JobConfig job;
  CLI::App  app{"Galois theory of finite monoid actions", "galmon"};
  app.add_option("command", job.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("--monoid", job.monoid, "Monoid file, or builtin:<name>");
  app.add_option("--action", job.actions, "Action file (repeatable)");
  app.add_option("--site", job.site,
                 "Site builders joined by '+': free, cosets, trivial, custom:<dir>; or default")
      ->capture_default_str();
  app.add_option("--sub", job.sub, "Subfunctor file");
  app.add_option("--hom", job.hom, "Homomorphism file");
  app.add_option("--out", job.out, "Output format")
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();
  app.add_option("--seed", job.seed, "Seed for randomized sweeps")->capture_default_str();
  app.add_option("--max-families", job.max_families, "Search-node guard for end computations")
      ->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "galmon: " << e.what() << '\n' << "Run with --help for usage.\n";
    return kExitInvalid;
  }
  return run(job, out, err);
}

}  // namespace galmon::cli
