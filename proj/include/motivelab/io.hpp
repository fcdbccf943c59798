#pragma once

// JSON and shorthand front end: group specs, cocycle files, collection specs,
// action specs, variety expressions, dataset bundles, and JSON renderings of
// the computed objects.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "motivelab/chartable.hpp"
#include "motivelab/measures.hpp"
#include "motivelab/twisted.hpp"

namespace motivelab::io {

using json = nlohmann::json;

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

inline std::int64_t to_int(const std::string& s, const std::string& where) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidSpec, where + ": '" + s + "' is not an integer");
  }
  ensure(used == s.size(), ErrorCode::InvalidSpec, where + ": '" + s + "' is not an integer");
  return v;
}

inline const json& field(const json& j, const char* key, const std::string& where) {
  ensure(j.is_object(), ErrorCode::InvalidSpec, where + ": expected a JSON object");
  auto it = j.find(key);
  ensure(it != j.end(), ErrorCode::InvalidSpec, where + ": missing field '" + key + "'");
  return *it;
}

template <class T>
T as(const json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidSpec, where + ": " + e.what());
  }
}

inline std::size_t as_size(const json& j, const std::string& where) {
  auto v = as<std::int64_t>(j, where);
  ensure(v >= 0, ErrorCode::InvalidSpec, where + ": expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

inline Elem as_elem(const GroupPtr& G, const json& j, const std::string& where) {
  auto v = as<std::int64_t>(j, where);
  ensure(v >= 0 && static_cast<std::size_t>(v) < G->order(), ErrorCode::InvalidSpec,
         where + ": element " + std::to_string(v) + " out of range for order " + std::to_string(G->order()));
  return static_cast<Elem>(v);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Raw JSON

inline json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::InvalidSpec, where + ": " + e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  ensure(in.good(), ErrorCode::InvalidSpec, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

/// A file path, inline JSON text, or nullopt for anything else.
inline std::optional<json> json_argument(const std::string& arg) {
  const std::string t = detail::trim(arg);
  if (!t.empty() && (t.front() == '{' || t.front() == '[')) return parse_json_text(t, "inline JSON");
  std::error_code ec;
  if (std::filesystem::is_regular_file(t, ec)) return read_json_file(t);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Groups

/// "cyclic:4", "symmetric:3", "dihedral:8", "elem_abelian:2,2"; factors joined by '*'.
inline GroupPtr group_from_shorthand(const std::string& spec) {
  const std::string s = detail::trim(spec);
  ensure(!s.empty(), ErrorCode::InvalidSpec, "empty group spec");
  if (s.find('*') != std::string::npos) {
    auto parts = detail::split(s, '*');
    GroupPtr G = group_from_shorthand(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) G = direct_product(G, group_from_shorthand(parts[i]));
    return G;
  }
  auto colon = s.find(':');
  const std::string kind = s.substr(0, colon);
  std::vector<std::int64_t> args;
  if (colon != std::string::npos)
    for (const auto& a : detail::split(s.substr(colon + 1), ','))
      args.push_back(detail::to_int(detail::trim(a), "group spec '" + s + "'"));
  auto need = [&](std::size_t k) {
    ensure(args.size() == k, ErrorCode::InvalidSpec,
           "group spec '" + s + "' expects " + std::to_string(k) + " parameter(s)");
    for (auto a : args) ensure(a >= 1, ErrorCode::InvalidSpec, "group spec '" + s + "' has a nonpositive parameter");
  };
  if (kind == "trivial") {
    need(0);
    return cyclic_group(1);
  }
  if (kind == "cyclic") {
    need(1);
    return cyclic_group(static_cast<std::size_t>(args[0]));
  }
  if (kind == "symmetric") {
    need(1);
    return symmetric_group(static_cast<std::size_t>(args[0]));
  }
  if (kind == "dihedral") {
    need(1);
    return dihedral_group(static_cast<std::size_t>(args[0]));
  }
  if (kind == "elem_abelian") {
    need(2);
    return elementary_abelian_group(static_cast<std::size_t>(args[0]), static_cast<std::size_t>(args[1]));
  }
  fail(ErrorCode::InvalidSpec,
       "unknown group kind '" + kind + "' (expected cyclic, symmetric, dihedral, elem_abelian or trivial)");
}

inline GroupPtr group_from_json(const json& j) {
  if (j.is_string()) return group_from_shorthand(j.get<std::string>());
  const std::string where = "group spec";
  const auto kind = detail::as<std::string>(detail::field(j, "kind", where), where);
  auto num = [&](const char* key) { return detail::as_size(detail::field(j, key, where), where + "." + key); };
  if (kind == "cyclic") return cyclic_group(num("n"));
  if (kind == "symmetric") return symmetric_group(num("n"));
  if (kind == "dihedral") return dihedral_group(num("order"));
  if (kind == "elem_abelian") return elementary_abelian_group(num("p"), num("k"));
  if (kind == "product")
    return direct_product(group_from_json(detail::field(j, "a", where)), group_from_json(detail::field(j, "b", where)));
  if (kind == "cayley") {
    auto t = detail::as<std::vector<std::vector<std::int64_t>>>(detail::field(j, "table", where), where + ".table");
    return from_cayley(t, j.value("label", std::string("G")));
  }
  if (kind == "perm_gens") {
    auto gens = detail::as<std::vector<std::vector<std::int64_t>>>(detail::field(j, "gens", where), where + ".gens");
    return from_permutations(num("degree"), gens, j.value("label", std::string("G")));
  }
  fail(ErrorCode::InvalidSpec, "unknown group kind '" + kind + "'");
}

/// Shorthand, inline JSON, or a JSON file.
inline GroupPtr parse_group(const std::string& arg) {
  if (auto j = json_argument(arg)) return group_from_json(*j);
  return group_from_shorthand(arg);
}

/// A list of members, or {"generators": [...]}.
inline Subgroup subgroup_from_json(const GroupPtr& G, const json& j) {
  const std::string where = "subgroup";
  if (j.is_object()) {
    std::vector<Elem> gens;
    for (const auto& g : detail::field(j, "generators", where)) gens.push_back(detail::as_elem(G, g, where));
    return Subgroup::generated(G, gens);
  }
  ensure(j.is_array(), ErrorCode::InvalidSpec, "subgroup: expected a list of elements");
  std::vector<Elem> members;
  for (const auto& g : j) members.push_back(detail::as_elem(G, g, where));
  return Subgroup::make(G, members);
}

// ---------------------------------------------------------------------------
// Cocycles and collections

inline GroupPtr group_or(const json& j, const GroupPtr& fallback, const std::string& where) {
  if (j.is_object() && j.contains("group")) return group_from_json(j.at("group"));
  ensure(fallback != nullptr, ErrorCode::InvalidSpec, where + ": no group given");
  return fallback;
}

/// {"group": ..., "modulus": n, "exponents": [[...]]}; the group may come from --group.
inline TwoCocycle cocycle_from_json(const json& j, const GroupPtr& fallback = nullptr) {
  const std::string where = "cocycle";
  GroupPtr G = group_or(j, fallback, where);
  auto n = detail::as<std::int64_t>(detail::field(j, "modulus", where), where + ".modulus");
  auto rows = detail::as<std::vector<std::vector<std::int64_t>>>(detail::field(j, "exponents", where),
                                                                   where + ".exponents");
  return make_cocycle(G, n, rows);
}

inline TwoCocycle parse_cocycle(const std::string& arg, const GroupPtr& fallback = nullptr) {
  auto j = json_argument(arg);
  ensure(j.has_value(), ErrorCode::InvalidSpec, "'" + arg + "' is neither a cocycle file nor inline JSON");
  return cocycle_from_json(*j, fallback);
}

inline CollectionSpec collection_from_json(const json& j, const GroupPtr& fallback = nullptr) {
  const std::string where = "collection";
  GroupPtr G = group_or(j, fallback, where);
  CollectionSpec spec{G, {}};
  for (const auto& b : detail::field(j, "blocks", where)) {
    CollectionBlock blk{detail::as_size(detail::field(b, "length", where), where + ".length"),
                        subgroup_from_json(G, detail::field(b, "stabilizer", where)), std::nullopt};
    if (b.contains("cocycle_class") && !b.at("cocycle_class").is_null())
      blk.cocycle_class = detail::as<std::vector<std::int64_t>>(b.at("cocycle_class"), where + ".cocycle_class");
    spec.blocks.push_back(std::move(blk));
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Actions and variety expressions

/// "trivial" or {"classes": {"alpha": [..]}, "swap": {"stabilizer": [..]}, "orbits": [[..], ..]}.
inline ActionSpec action_from_json(const GroupPtr& G, const json& j) {
  if (j.is_null()) return ActionSpec::trivial(G);
  if (j.is_string()) {
    ensure(j.get<std::string>() == "trivial", ErrorCode::InvalidSpec,
           "action: expected \"trivial\" or a JSON object, got '" + j.get<std::string>() + "'");
    return ActionSpec::trivial(G);
  }
  const std::string where = "action";
  ensure(j.is_object(), ErrorCode::InvalidSpec, where + ": expected \"trivial\" or a JSON object");
  for (const auto& [key, _] : j.items())
    ensure(key == "classes" || key == "swap" || key == "orbits", ErrorCode::InvalidSpec,
           where + ": unknown field '" + key + "'");
  ActionSpec a = ActionSpec::trivial(G);
  if (j.contains("classes"))
    a.classes = detail::as<std::map<std::string, std::vector<std::int64_t>>>(j.at("classes"), where + ".classes");
  if (j.contains("swap") && !j.at("swap").is_null()) {
    const json& s = j.at("swap");
    a.swap = subgroup_from_json(G, s.is_object() && s.contains("stabilizer") ? s.at("stabilizer") : s);
  }
  if (j.contains("orbits"))
    for (const auto& o : j.at("orbits")) a.orbits.push_back(subgroup_from_json(G, o));
  return a;
}

inline ActionSpec parse_action(const GroupPtr& G, const std::string& arg) {
  if (detail::trim(arg) == "trivial" || detail::trim(arg).empty()) return ActionSpec::trivial(G);
  auto j = json_argument(arg);
  ensure(j.has_value(), ErrorCode::InvalidSpec, "'" + arg + "' is neither \"trivial\", an action file nor inline JSON");
  return action_from_json(G, *j);
}

/// "a*b*c" with one action applied to every factor.
inline VarietyExpr parse_expr(const std::string& symbols, const ActionSpec& action) {
  VarietyExpr x;
  for (const auto& s : detail::split(symbols, '*')) {
    const std::string t = detail::trim(s);
    ensure(!t.empty(), ErrorCode::InvalidSpec, "empty factor in '" + symbols + "'");
    x.push_back({catalog_lookup(t), action});
  }
  ensure(!x.empty(), ErrorCode::InvalidSpec, "empty variety expression");
  return x;
}

/// {"symbol": "a*b", "action": ...} or a list of such factors.
inline VarietyExpr expr_from_json(const GroupPtr& G, const json& j) {
  if (j.is_string()) return parse_expr(j.get<std::string>(), ActionSpec::trivial(G));
  if (j.is_array()) {
    VarietyExpr x;
    for (const auto& f : j) {
      auto part = expr_from_json(G, f);
      x.insert(x.end(), part.begin(), part.end());
    }
    ensure(!x.empty(), ErrorCode::InvalidSpec, "empty variety expression");
    return x;
  }
  const std::string where = "variety";
  auto sym = detail::as<std::string>(detail::field(j, "symbol", where), where + ".symbol");
  return parse_expr(sym, action_from_json(G, j.contains("action") ? j.at("action") : json()));
}

// ---------------------------------------------------------------------------
// Datasets

/// {"group", "symbol", "action", "fixed_locus": {rep: chi}, "sectors": {rep: [even, odd]}}.
struct FactorDataset {
  std::string name;
  GroupPtr group;
  VarietyExpr expr;
  std::vector<std::int64_t> fixed_euler;  // per conjugacy class
  std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>> sectors;
};

/// {"group", "X", "Y", "c", "Bl", "E"}.
struct BlowupDataset {
  std::string name;
  GroupPtr group;
  VarietyExpr X, Y, Bl, E;
  std::int64_t c = 1;
};

namespace detail {

template <class V, class F>
std::vector<V> per_class(const GroupPtr& G, const json& j, const std::string& where, F convert) {
  ensure(j.is_object(), ErrorCode::InvalidSpec, where + ": expected an object keyed by class representatives");
  std::vector<std::optional<V>> slot(G->num_classes());
  for (const auto& [key, val] : j.items()) {
    auto g = to_int(key, where);
    ensure(g >= 0 && static_cast<std::size_t>(g) < G->order(), ErrorCode::InvalidSpec,
           where + ": element " + key + " out of range");
    auto c = G->class_index(static_cast<Elem>(g));
    ensure(!slot[c].has_value(), ErrorCode::ClassCountMismatch, where + ": two entries for the class of " + key);
    slot[c] = convert(val);
  }
  std::vector<V> out;
  for (std::size_t c = 0; c < slot.size(); ++c) {
    ensure(slot[c].has_value(), ErrorCode::ClassCountMismatch,
           where + ": no entry for the class of element " + std::to_string(G->classes()[c].representative));
    out.push_back(*slot[c]);
  }
  return out;
}

}  // namespace detail

inline FactorDataset factor_dataset_from_json(const json& j, std::string name = {}) {
  const std::string where = "dataset";
  FactorDataset d;
  d.name = j.value("name", std::move(name));
  d.group = group_from_json(detail::field(j, "group", where));
  json var = {{"symbol", detail::field(j, "symbol", where)}};
  if (j.contains("action")) var["action"] = j.at("action");
  d.expr = expr_from_json(d.group, var);
  d.fixed_euler = detail::per_class<std::int64_t>(d.group, detail::field(j, "fixed_locus", where),
                                                  where + ".fixed_locus",
                                                  [&](const json& v) { return detail::as<std::int64_t>(v, where); });
  if (j.contains("sectors"))
    d.sectors = detail::per_class<std::pair<std::int64_t, std::int64_t>>(
        d.group, j.at("sectors"), where + ".sectors", [&](const json& v) {
          auto p = detail::as<std::vector<std::int64_t>>(v, where + ".sectors");
          ensure(p.size() == 2, ErrorCode::InvalidSpec, where + ".sectors: expected [even, odd]");
          return std::pair<std::int64_t, std::int64_t>{p[0], p[1]};
        });
  return d;
}

inline BlowupDataset blowup_dataset_from_json(const json& j, std::string name = {}) {
  const std::string where = "blow-up dataset";
  BlowupDataset d;
  d.name = j.value("name", std::move(name));
  d.group = group_from_json(detail::field(j, "group", where));
  d.X = expr_from_json(d.group, detail::field(j, "X", where));
  d.Y = expr_from_json(d.group, detail::field(j, "Y", where));
  d.Bl = expr_from_json(d.group, detail::field(j, "Bl", where));
  d.E = expr_from_json(d.group, detail::field(j, "E", where));
  d.c = detail::as<std::int64_t>(detail::field(j, "c", where), where + ".c");
  return d;
}

inline bool is_blowup_dataset(const json& j) { return j.is_object() && j.contains("Bl"); }

// ---------------------------------------------------------------------------
// Rendering

inline json group_summary(const GroupPtr& G) {
  return {{"label", G->label()}, {"order", G->order()}, {"classes", G->num_classes()}};
}

inline json to_json(const MotiveAtom& a) {
  if (a.is_twisted_unit()) return {{"kind", "twisted_unit"}, {"class", a.cohom_class().coordinates}};
  return {{"kind", "induced"}, {"subgroup", a.subgroup().members()}, {"index", a.subgroup().index()}};
}

inline json to_json(const MotiveSkeleton& s) {
  json atoms = json::array();
  for (const auto& a : s.atoms()) atoms.push_back(to_json(a));
  return {{"group", group_summary(s.group())}, {"atoms", atoms}, {"text", s.str()}};
}

inline json to_json(const K0NCClass& c) {
  json terms = json::array();
  for (const auto& [atom, k] : c.terms()) terms.push_back({{"atom", to_json(atom)}, {"coefficient", k}});
  return {{"terms", terms}, {"text", c.str()}};
}

inline json to_json(const VirtualCharacter& v) {
  std::vector<std::string> coeffs;
  for (const auto& q : v.coeffs()) coeffs.push_back(q.get_str());
  return {{"coefficients", coeffs}, {"text", v.str()}};
}

inline json to_json(const CheckReport& r) {
  json items = json::array();
  for (const auto& i : r.items) items.push_back({{"name", i.name}, {"lhs", i.lhs}, {"rhs", i.rhs}, {"ok", i.ok}});
  return {{"ok", r.ok}, {"items", items}};
}

inline std::string render_text(const CheckReport& r) {
  std::ostringstream os;
  for (const auto& i : r.items)
    os << (i.ok ? "ok   " : "FAIL ") << i.name << "\n     lhs: " << i.lhs << "\n     rhs: " << i.rhs << "\n";
  os << (r.ok ? "ok" : "violation") << "\n";
  return os.str();
}

}  // namespace motivelab::io
