#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "motivelab/io.hpp"
#include "motivelab/selftest.hpp"

namespace {

using namespace motivelab;
using io::json;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kViolation = 2;

struct CommandResult {
  int code = kOk;
  json payload;
  std::string text;
};

struct Globals {
  std::string group;
  bool as_json = false;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  std::string catalog;
  std::string action = "trivial";
};

GroupPtr require_group(const Globals& g) {
  ensure(!g.group.empty(), ErrorCode::InvalidSpec, "--group is required");
  return io::parse_group(g.group);
}

std::string join(const std::vector<std::int64_t>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

json class_json(const CohomClass& c) {
  return {{"coordinates", c.coordinates},
          {"invariant_factors", c.invariant_factors},
          {"order", class_order(c)},
          {"trivial", c.is_trivial()}};
}

std::string class_text(const CohomClass& c) {
  return "class (" + join(c.coordinates) + ") in " + format_invariant_factors(c.invariant_factors) + ", order " +
         std::to_string(class_order(c));
}

CommandResult check_result(const CheckReport& r) {
  return {r.ok ? kOk : kViolation, io::to_json(r), io::render_text(r)};
}

// ---------------------------------------------------------------------------
// schur, chartable

CommandResult cmd_schur(const Globals& g) {
  GroupPtr G = require_group(g);
  auto M = schur_multiplier(G, max_group_order());
  auto text = format_invariant_factors(M.invariant_factors());
  return {kOk, {{"group", io::group_summary(G)}, {"invariant_factors", M.invariant_factors()}, {"text", text}}, text};
}

CommandResult cmd_chartable(const Globals& g) {
  GroupPtr G = require_group(g);
  auto T = compute_character_table(G, g.seed);
  json values = json::array(), pretty = json::array();
  for (std::size_t i = 0; i < T->size(); ++i) {
    json row = json::array(), prow = json::array();
    for (const auto& v : T->values[i]) {
      auto z = v.promote(T->exponent);
      std::vector<std::string> coeffs;
      for (const auto& q : z.coeffs()) coeffs.push_back(q.get_str());
      row.push_back(coeffs);
      prow.push_back(v.str());
    }
    values.push_back(row);
    pretty.push_back(prow);
  }
  std::vector<Elem> reps;
  for (const auto& c : G->classes()) reps.push_back(c.representative);
  json payload = {{"group", io::group_summary(G)},
                  {"conductor", T->exponent},
                  {"degrees", T->degrees},
                  {"class_sizes", T->class_sizes},
                  {"class_representatives", reps},
                  {"values", values},
                  {"values_text", pretty},
                  {"seed", g.seed}};
  std::ostringstream os;
  os << "class   ";
  for (auto r : reps) os << "\t" << r;
  os << "\nsize    ";
  for (auto s : T->class_sizes) os << "\t" << s;
  os << "\n";
  for (std::size_t i = 0; i < T->size(); ++i) {
    os << "X" << i << " (" << T->degrees[i] << ")";
    for (const auto& p : pretty[i]) os << "\t" << p.get<std::string>();
    os << "\n";
  }
  os << "(z = zeta_" << T->exponent << ")\n";
  return {kOk, payload, os.str()};
}

// ---------------------------------------------------------------------------
// cocycle

TwoCocycle load_cocycle(const Globals& g, const std::string& arg) {
  auto j = io::json_argument(arg);
  ensure(j.has_value(), ErrorCode::InvalidSpec, "'" + arg + "' is neither a cocycle file nor inline JSON");
  GroupPtr fallback = g.group.empty() ? nullptr : io::parse_group(g.group);
  auto a = io::cocycle_from_json(*j, fallback);
  if (fallback) require_same_group(a.group, fallback, "cocycle file and --group");
  return a;
}

CommandResult cmd_cocycle_classify(const Globals& g, const std::string& file) {
  auto a = load_cocycle(g, file);
  const auto& M = schur_multiplier_cached(a.group);
  auto c = class_of(a, M);
  return {kOk, {{"group", io::group_summary(a.group)}, {"class", class_json(c)}}, class_text(c)};
}

CommandResult cmd_cocycle_mul(const Globals& g, const std::string& fa, const std::string& fb) {
  auto a = load_cocycle(g, fa), b = load_cocycle(g, fb);
  require_same_group(a.group, b.group, "cocycle product");
  const auto& M = schur_multiplier_cached(a.group);
  auto c = class_mul(class_of(a, M), class_of(b, M), M);
  return {kOk, {{"group", io::group_summary(a.group)}, {"class", class_json(c)}}, class_text(c)};
}

CommandResult cmd_cocycle_check(const Globals& g, const std::string& file) {
  auto a = load_cocycle(g, file);
  auto rep = cocycle_validate(a);
  json payload = {{"ok", rep.ok}, {"kind", rep.kind}, {"message", rep.message}};
  if (!rep.ok) payload["triple"] = rep.triple;
  std::string text = rep.ok ? "ok" : "not a normalized 2-cocycle (" + rep.kind + "): " + rep.message;
  return {rep.ok ? kOk : kViolation, payload, text};
}

// ---------------------------------------------------------------------------
// twisted

CommandResult cmd_twisted(const Globals& g, const std::string& file) {
  TwoCocycle a = file.empty() ? trivial_cocycle(require_group(g)) : load_cocycle(g, file);
  auto A = build_twisted(a);
  auto reg = alpha_regular(a);
  auto center = center_basis(A);
  auto prof = wedderburn_dims(A, g.seed, g.tol);
  std::vector<Elem> regular;
  for (std::size_t i = 0; i < reg.regular.size(); ++i)
    if (reg.regular[i]) regular.push_back(a.group->classes()[i].representative);
  json payload = {{"group", io::group_summary(a.group)}, {"regular_classes", regular}, {"center_dim", center.size()},
                  {"dims", prof.dims},                   {"seed", g.seed},             {"tol", g.tol}};
  std::ostringstream os;
  os << "regular classes: " << reg.count << " (representatives";
  for (auto r : regular) os << " " << r;
  os << ")\ncenter dimension: " << center.size() << "\nWedderburn dims: {" << join(prof.dims) << "}\n";
  return {kOk, payload, os.str()};
}

// ---------------------------------------------------------------------------
// motive

/// A collection spec file / inline JSON, or a catalog symbol under --action.
MotiveSkeleton load_skeleton(const Globals& g, const std::string& arg) {
  if (auto j = io::json_argument(arg)) {
    GroupPtr fallback = g.group.empty() ? nullptr : io::parse_group(g.group);
    return decompose_collection(io::collection_from_json(*j, fallback));
  }
  GroupPtr G = require_group(g);
  return decompose_collection(instantiate(catalog_lookup(arg), io::parse_action(G, g.action)));
}

std::string source_of(const Globals& g, const std::string& arg) {
  if (!arg.empty()) return arg;
  ensure(!g.catalog.empty(), ErrorCode::InvalidSpec, "give a collection spec or --catalog");
  return g.catalog;
}

CommandResult cmd_motive_decompose(const Globals& g, const std::string& arg) {
  auto sk = load_skeleton(g, source_of(g, arg));
  return {kOk, io::to_json(sk), sk.str()};
}

CommandResult cmd_motive_hom(const Globals& g, const std::string& a, const std::string& b) {
  auto A = load_skeleton(g, a), B = load_skeleton(g, b);
  auto r = skeleton_hom_rank(A, B);
  return {kOk, {{"rank", r}, {"source", A.str()}, {"target", B.str()}}, std::to_string(r)};
}

CommandResult cmd_motive_restrict(const Globals& g, const std::string& arg) {
  auto sk = load_skeleton(g, source_of(g, arg));
  auto r = restrict_skeleton(sk);
  return {kOk, {{"units", r}, {"skeleton", sk.str()}}, std::to_string(r) + " units"};
}

CommandResult cmd_motive_localized(const Globals& g, const std::string& a, const std::string& b) {
  auto A = load_skeleton(g, a), B = load_skeleton(g, b);
  bool loc = localized_isomorphic(A, B);
  bool eq = A == B;
  return {kOk,
          {{"localized_isomorphic", loc}, {"equal_before_localization", eq}},
          std::string(loc ? "isomorphic" : "not isomorphic") + " after localization; " +
              (eq ? "equal" : "different") + " before"};
}

// ---------------------------------------------------------------------------
// chow

CommandResult cmd_chow(const Globals& g, const std::string& arg) {
  auto e = catalog_lookup(source_of(g, arg));
  auto c = chow_skeleton(e);
  json payload = {{"entry", e.label()}, {"exponents", c.exponents}, {"betti", e.betti}};
  std::string text = e.label() + ": Lefschetz exponents " + c.str();
  try {
    check_via(e);
    payload["check"] = "ok";
    return {kOk, payload, text + "\nlength check ok"};
  } catch (const Error& err) {
    payload["check"] = err.what();
    return {kViolation, payload, text + "\n" + err.what()};
  }
}

// ---------------------------------------------------------------------------
// measure

CommandResult cmd_measure_nc(const Globals& g, const std::string& arg) {
  GroupPtr G = require_group(g);
  auto x = io::parse_expr(source_of(g, arg), io::parse_action(G, g.action));
  auto c = mu_nc(x);
  json payload = io::to_json(c);
  payload["variety"] = expr_label(x);
  return {kOk, payload, c.str()};
}

CommandResult cmd_measure_euler(const Globals& g, const std::string& values) {
  GroupPtr G = require_group(g);
  std::vector<std::int64_t> chi;
  std::stringstream ss(values);
  for (std::string tok; std::getline(ss, tok, ',');) chi.push_back(std::stoll(tok));
  auto v = euler_char_rep(G, chi);
  return {kOk, io::to_json(v), v.str()};
}

CommandResult cmd_measure_factor(const std::string& file) {
  auto d = io::factor_dataset_from_json(io::read_json_file(file), file);
  auto rep = factorization_check(d.expr, d.fixed_euler);
  if (d.sectors) {
    auto hp = evaluate_invariant(mu_nc(d.expr), Invariant::HP);
    auto orb = orbifold_dims(d.group, *d.sectors);
    rep.add("HP = orbifold (even, odd)", std::to_string(hp.graded.at(0)) + "," + std::to_string(hp.graded.at(1)),
            std::to_string(orb.first) + "," + std::to_string(orb.second),
            hp.graded.at(0) == orb.first && hp.graded.at(1) == orb.second);
  }
  return check_result(rep);
}

CommandResult cmd_measure_blowup(const std::string& file) {
  auto d = io::blowup_dataset_from_json(io::read_json_file(file), file);
  return check_result(blowup_check(d.X, d.Y, d.c, d.Bl, d.E));
}

CommandResult cmd_measure_check(const std::string& file) {
  return io::is_blowup_dataset(io::read_json_file(file)) ? cmd_measure_blowup(file) : cmd_measure_factor(file);
}

// ---------------------------------------------------------------------------
// selftest

CommandResult cmd_selftest(const Globals& g, const std::string& golden, const std::string& datasets) {
  selftest::Options opt;
  opt.golden_dir = golden;
  opt.dataset_dir = datasets;
  if (g.seed != 0) opt.seed = g.seed;
  auto results = selftest::run_all(opt);
  json rows = json::array();
  std::string text;
  bool ok = true;
  for (const auto& r : results) {
    rows.push_back({{"id", r.id}, {"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    text += selftest::format_line(r) + "\n";
    ok = ok && r.ok;
  }
  return {ok ? kOk : kViolation, {{"ok", ok}, {"criteria", rows}, {"seed", opt.seed}}, text};
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::Violation:
    case ErrorCode::OddCohomology:
    case ErrorCode::LengthMismatch:
    case ErrorCode::Internal:
      return kViolation;
    default:
      return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"motivelab: finite-group cohomology, twisted group algebras and equivariant motive skeletons"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--group", g.group, "group: cyclic:n, symmetric:n, dihedral:order, elem_abelian:p,k (joined by *), "
                                     "inline JSON or a JSON file");
  app.add_flag("--json", g.as_json, "emit JSON");
  app.add_option("--seed", g.seed, "seed for randomized numerics");
  app.add_option("--tol", g.tol, "clustering tolerance for Wedderburn dimensions");
  app.add_option("--catalog", g.catalog, "catalog entry, e.g. projective_space:3 or grassmannian:2,4");
  app.add_option("--action", g.action, "\"trivial\", inline JSON or a JSON file describing the action");

  std::function<CommandResult()> run;
  std::string a1, a2;

  auto* schur = app.add_subcommand("schur", "invariant factors of H^2(G, C^x)")->fallthrough();
  schur->callback([&] { run = [&] { return cmd_schur(g); }; });

  auto* chart = app.add_subcommand("chartable", "character table (Dixon)")->fallthrough();
  chart->callback([&] { run = [&] { return cmd_chartable(g); }; });

  auto* cocycle = app.add_subcommand("cocycle", "cohomology class operations")->fallthrough();
  cocycle->require_subcommand(1);
  auto* classify = cocycle->add_subcommand("classify", "class of a cocycle")->fallthrough();
  classify->add_option("cocycle", a1, "cocycle file or inline JSON")->required();
  classify->callback([&] { run = [&] { return cmd_cocycle_classify(g, a1); }; });
  auto* mul = cocycle->add_subcommand("mul", "class of a product")->fallthrough();
  mul->add_option("a", a1)->required();
  mul->add_option("b", a2)->required();
  mul->callback([&] { run = [&] { return cmd_cocycle_mul(g, a1, a2); }; });
  auto* check = cocycle->add_subcommand("check", "validate the cocycle identity")->fallthrough();
  check->add_option("cocycle", a1)->required();
  check->callback([&] { run = [&] { return cmd_cocycle_check(g, a1); }; });

  auto* twisted = app.add_subcommand("twisted", "regular classes, center and Wedderburn dims")->fallthrough();
  twisted->add_option("cocycle", a1, "cocycle file or inline JSON (default: trivial cocycle on --group)");
  twisted->callback([&] { run = [&] { return cmd_twisted(g, a1); }; });

  auto* motive = app.add_subcommand("motive", "motive skeleton operations")->fallthrough();
  motive->require_subcommand(1);
  auto* decompose = motive->add_subcommand("decompose", "atoms of a collection")->fallthrough();
  decompose->add_option("spec", a1, "collection spec file / inline JSON or catalog entry");
  decompose->callback([&] { run = [&] { return cmd_motive_decompose(g, a1); }; });
  auto* hom = motive->add_subcommand("hom", "rank of Hom between skeletons")->fallthrough();
  hom->add_option("a", a1)->required();
  hom->add_option("b", a2)->required();
  hom->callback([&] { run = [&] { return cmd_motive_hom(g, a1, a2); }; });
  auto* restrict = motive->add_subcommand("restrict", "number of units after forgetting the action")->fallthrough();
  restrict->add_option("spec", a1);
  restrict->callback([&] { run = [&] { return cmd_motive_restrict(g, a1); }; });
  auto* loc = motive->add_subcommand("localized-eq", "compare after localization")->fallthrough();
  loc->add_option("a", a1)->required();
  loc->add_option("b", a2)->required();
  loc->callback([&] { run = [&] { return cmd_motive_localized(g, a1, a2); }; });

  auto* chow = app.add_subcommand("chow", "Lefschetz exponents and length check")->fallthrough();
  chow->add_option("entry", a1);
  chow->callback([&] { run = [&] { return cmd_chow(g, a1); }; });

  auto* measure = app.add_subcommand("measure", "motivic measures")->fallthrough();
  measure->require_subcommand(1);
  auto* nc = measure->add_subcommand("nc", "mu_nc of a catalog product a*b")->fallthrough();
  nc->add_option("variety", a1);
  nc->callback([&] { run = [&] { return cmd_measure_nc(g, a1); }; });
  auto* euler = measure->add_subcommand("euler", "Euler characteristic as a virtual character")->fallthrough();
  euler->add_option("fixed", a1, "comma-separated chi(X^g), one per conjugacy class")->required();
  euler->callback([&] { run = [&] { return cmd_measure_euler(g, a1); }; });
  auto* factor = measure->add_subcommand("factor-check", "check a fixed-locus dataset")->fallthrough();
  factor->add_option("dataset", a1)->required();
  factor->callback([&] { run = [&] { return cmd_measure_factor(a1); }; });
  auto* blowup = measure->add_subcommand("blowup-check", "check a blow-up dataset")->fallthrough();
  blowup->add_option("dataset", a1)->required();
  blowup->callback([&] { run = [&] { return cmd_measure_blowup(a1); }; });
  auto* mcheck = measure->add_subcommand("check", "check any dataset")->fallthrough();
  mcheck->add_option("dataset", a1)->required();
  mcheck->callback([&] { run = [&] { return cmd_measure_check(a1); }; });

  std::string golden = MOTIVELAB_SOURCE_DIR "/tests/golden", datasets = MOTIVELAB_SOURCE_DIR "/datasets";
  auto* self = app.add_subcommand("selftest", "run the acceptance battery")->fallthrough();
  self->add_option("--golden-dir", golden, "directory of golden decompositions");
  self->add_option("--dataset-dir", datasets, "directory of datasets");
  self->callback([&] { run = [&] { return cmd_selftest(g, golden, datasets); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  CommandResult res;
  try {
    res = run();
  } catch (const Error& e) {
    res.code = exit_code_for(e.code());
    res.payload = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    res.text = e.what();
    if (!g.as_json) {
      std::cerr << "error: " << e.what() << "\n";
      return res.code;
    }
  } catch (const std::exception& e) {
    res.code = kInputError;
    res.payload = {{"error", "InvalidSpec"}, {"message", e.what()}};
    res.text = e.what();
    if (!g.as_json) {
      std::cerr << "error: " << e.what() << "\n";
      return res.code;
    }
  }
  if (g.as_json) {
    std::cout << res.payload.dump(2) << "\n";
  } else {
    std::cout << res.text;
    if (!res.text.empty() && res.text.back() != '\n') std::cout << "\n";
  }
  return res.code;
}
