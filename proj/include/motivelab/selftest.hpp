#pragma once

// Acceptance battery: one check per tabulated result, each reported as a
// single PASS/FAIL line. Shared by the acceptance test and `motivelab selftest`.

#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "motivelab/io.hpp"

namespace motivelab::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool ok = false;
  std::string detail;
  double seconds = 0;
};

struct Options {
  std::string golden_dir;
  std::string dataset_dir;
  std::uint64_t seed = 20240611;
  bool parallel = true;
};

namespace detail {

/// Collects failures; the first few are kept for the report.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++cases_;
    if (!ok) {
      ++failures_;
      if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
    }
  }
  bool ok() const { return failures_ == 0; }
  std::size_t cases() const { return cases_; }
  std::string summary(const std::string& good) const {
    if (ok()) return good;
    return std::to_string(failures_) + " of " + std::to_string(cases_) + " failed: " + notes_;
  }

 private:
  std::size_t cases_ = 0, failures_ = 0;
  std::string notes_;
};

inline std::string factors_str(const std::vector<std::int64_t>& d) { return format_invariant_factors(d); }

inline TwoCocycle random_cocycle(const GroupPtr& G, std::int64_t n, std::mt19937_64& rng) {
  ModMatrix space = cocycle_space(G, n);
  std::uniform_int_distribution<std::int64_t> pick(0, n - 1);
  TwoCocycle a = trivial_cocycle(G, n);
  for (std::size_t r = 0; r < space.rows(); ++r) {
    std::int64_t k = pick(rng);
    for (std::size_t i = 0; i < a.table.size(); ++i) a.table[i] = floor_mod(a.table[i] + k * space.row(r)[i], n);
  }
  return a;
}

inline std::vector<GroupPtr> property_groups() {
  return {cyclic_group(4),
          cyclic_group(6),
          symmetric_group(3),
          elementary_abelian_group(2, 2),
          dihedral_group(8),
          direct_product(cyclic_group(2), cyclic_group(4)),
          elementary_abelian_group(3, 2),
          elementary_abelian_group(2, 3),
          dihedral_group(12)};
}

inline std::vector<std::int64_t> class_coords(const GroupPtr& G, std::initializer_list<std::int64_t> c) {
  std::vector<std::int64_t> v(c);
  v.resize(schur_multiplier_cached(G).invariant_factors().size(), 0);
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 1. Schur multipliers

inline CriterionResult schur_table() {
  CriterionResult r{1, "Schur multiplier table", false, "", 0};
  struct Row {
    GroupPtr group;
    std::vector<std::int64_t> expected;
  };
  std::vector<Row> rows;
  for (std::size_t n = 2; n <= 12; ++n) rows.push_back({cyclic_group(n), {}});
  rows.push_back({symmetric_group(3), {}});
  rows.push_back({symmetric_group(4), {2}});
  rows.push_back({symmetric_group(5), {2}});
  rows.push_back({dihedral_group(6), {}});
  rows.push_back({dihedral_group(8), {2}});
  rows.push_back({dihedral_group(10), {}});
  rows.push_back({dihedral_group(12), {2}});
  rows.push_back({elementary_abelian_group(2, 2), {2}});
  rows.push_back({elementary_abelian_group(2, 3), {2, 2, 2}});
  rows.push_back({elementary_abelian_group(3, 2), {3}});
  auto t0 = std::chrono::steady_clock::now();
  detail::Tally t;
  for (const auto& row : rows) {
    auto got = schur_multiplier(row.group, 120).invariant_factors();
    t.check(got == row.expected, row.group->label() + " gave " + detail::factors_str(got) + ", expected " +
                                     detail::factors_str(row.expected));
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  t.check(secs < 60.0, "runtime " + std::to_string(secs) + " s exceeds 60 s");
  r.ok = t.ok();
  r.detail = t.summary(std::to_string(rows.size()) + " groups");
  return r;
}

// ---------------------------------------------------------------------------
// 2. Representation rings

inline CriterionResult representation_rings() {
  CriterionResult r{2, "Representation rings R(C_n) and R(S3)", false, "", 0};
  detail::Tally t;
  for (std::size_t n = 1; n <= 12; ++n) {
    auto tab = character_table(cyclic_group(n));
    // a faithful linear character: value zeta_n at the generator 1
    std::optional<std::size_t> chi_idx;
    const std::size_t gen_class = tab->group->class_index(n > 1 ? 1 : 0);
    for (std::size_t i = 0; i < tab->size(); ++i)
      if (tab->values[i][gen_class] == Cyclotomic::root(static_cast<std::int64_t>(n), 1)) chi_idx = i;
    t.check(chi_idx.has_value(), "C" + std::to_string(n) + ": no faithful linear character");
    if (!chi_idx) continue;
    auto chi = VirtualCharacter::irreducible(tab, *chi_idx);
    auto one = VirtualCharacter::one(tab);
    t.check(power(chi, static_cast<unsigned>(n)) == one, "C" + std::to_string(n) + ": chi^n != 1");
    std::set<std::size_t> hit;
    for (unsigned k = 0; k < n; ++k) {
      auto p = power(chi, k);
      std::size_t nonzero = 0, where = 0;
      for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        if (p.coeffs()[i] != 0) ++nonzero, where = i;
      t.check(nonzero == 1 && p.coeffs()[where] == 1, "C" + std::to_string(n) + ": chi^k is not irreducible");
      hit.insert(where);
    }
    t.check(hit.size() == n && tab->size() == n, "C" + std::to_string(n) + ": powers of chi are not a basis");
  }
  auto tab = character_table(symmetric_group(3));
  std::optional<std::size_t> sgn, psi;
  for (std::size_t i = 1; i < tab->size(); ++i) (tab->degrees[i] == 1 ? sgn : psi) = i;
  t.check(sgn && psi, "S3: missing sign or 2-dimensional character");
  if (sgn && psi) {
    auto chi = VirtualCharacter::irreducible(tab, *sgn), ps = VirtualCharacter::irreducible(tab, *psi);
    auto one = VirtualCharacter::one(tab);
    t.check(chi * chi == one, "S3: chi^2 != 1");
    t.check(chi * ps == ps * chi, "S3: chi psi != psi chi");
    t.check(ps * ps == one + chi + ps, "S3: psi^2 != 1 + chi + psi");
  }
  r.ok = t.ok();
  r.detail = t.summary("C1..C12 and S3 relations exact");
  return r;
}

// ---------------------------------------------------------------------------
// 3. Endomorphisms of the unit and the idempotents e+, e-

inline CriterionResult unit_endomorphisms() {
  CriterionResult r{3, "End(unit) rank and idempotents e+/e-", false, "", 0};
  detail::Tally t;
  std::vector<GroupPtr> battery{cyclic_group(1), cyclic_group(2), cyclic_group(5), cyclic_group(12),
                                symmetric_group(3), symmetric_group(4), dihedral_group(8), dihedral_group(10),
                                elementary_abelian_group(2, 2), elementary_abelian_group(3, 2)};
  for (const auto& G : battery) {
    MotiveAtom unit = MotiveAtom::twisted_unit(trivial_class(G));
    t.check(hom_rank(unit, unit) == G->num_classes(), G->label() + ": End(unit) rank != #classes");
    auto tab = character_table(G);
    t.check(tab->size() == G->num_classes(), G->label() + ": R(G) rank != #classes");
    auto [ep, em] = idempotents(tab);
    auto one = VirtualCharacter::one(tab), zero = VirtualCharacter::zero(tab);
    t.check(ep * ep == ep && em * em == em && ep * em == zero && ep + em == one,
            G->label() + ": e+/e- are not orthogonal idempotents");
    t.check(ep.rank() == 1 && em.rank() == 0, G->label() + ": idempotent ranks");
  }
  r.ok = t.ok();
  r.detail = t.summary(std::to_string(battery.size()) + " groups");
  return r;
}

// ---------------------------------------------------------------------------
// 4. Central type

inline CriterionResult central_type() {
  CriterionResult r{4, "Central type twisted group algebras", false, "", 0};
  detail::Tally t;
  for (std::int64_t p : {2, 3}) {
    auto G = elementary_abelian_group(static_cast<std::size_t>(p), 2);
    auto alpha = pairing_cocycle(G, p);
    auto A = build_twisted(alpha);
    auto reg = alpha_regular(alpha);
    const std::string name = "C" + std::to_string(p) + "xC" + std::to_string(p);
    t.check(reg.count == 1, name + ": regular classes " + std::to_string(reg.count));
    t.check(center_basis(A).size() == 1, name + ": center dimension != 1");
    auto prof = wedderburn_dims(A, 0, 1e-8);
    t.check(prof.dims == std::vector<std::int64_t>{p}, name + ": Wedderburn dims differ");
    std::int64_t s = 0;
    for (auto d : prof.dims) s += d * d;
    t.check(s == p * p, name + ": sum of squares != |G|");
  }
  r.ok = t.ok();
  r.detail = t.summary("dims {2} and {3}, one regular class each");
  return r;
}

// ---------------------------------------------------------------------------
// 5. Localization identifies twists

inline CriterionResult localization() {
  CriterionResult r{5, "Twists agree after localization only", false, "", 0};
  detail::Tally t;
  for (const auto& G : {elementary_abelian_group(2, 2), dihedral_group(8)}) {
    const auto& M = schur_multiplier_cached(G);
    ensure(M.order() == 2, ErrorCode::Internal, "battery group should have H^2 = C2");
    auto a = MotiveAtom::twisted_unit(class_from_coordinates(M, {1}));
    auto a2 = MotiveAtom::twisted_unit(class_from_coordinates(M, {2}));
    auto one = MotiveAtom::twisted_unit(trivial_class(G));
    MotiveSkeleton twisted(G, {one, a, a2}), plain(G, {one, one, one});
    t.check(localized_isomorphic(twisted, plain), G->label() + ": localized comparison failed");
    t.check(!(twisted == plain), G->label() + ": skeletons equal before localization");
    t.check(!possibly_isomorphic(a, one), G->label() + ": twisted and untwisted units share hom profiles");
    t.check(invariant_copies(a.cohom_class().representative) < G->num_classes(),
            G->label() + ": simple block counts agree");
  }
  auto E4 = elementary_abelian_group(2, 2);
  auto simple = wedderburn_dims(build_twisted(pairing_cocycle(E4, 2))).dims.size();
  auto split = wedderburn_dims(build_twisted(trivial_cocycle(E4))).dims.size();
  t.check(simple == 1 && split == 4, "C2xC2 block counts " + std::to_string(simple) + " vs " + std::to_string(split));
  r.ok = t.ok();
  r.detail = t.summary("C2xC2 and D8; central type: 1 block vs 4");
  return r;
}

// ---------------------------------------------------------------------------
// 6. Decompositions against golden atom lists

namespace detail {

struct Context {
  GroupPtr group;
  std::map<std::string, std::vector<std::int64_t>> classes;
  std::optional<Subgroup> swap;
};

inline std::vector<Context> invariant_contexts() {
  auto C1 = cyclic_group(1), E4 = elementary_abelian_group(2, 2), E9 = elementary_abelian_group(3, 2);
  auto D8 = dihedral_group(8);
  return {{C1, {}, std::nullopt},
          {E4, {{"alpha", {1}}, {"beta", {1}}, {"gamma", {0}}}, std::nullopt},
          {E9, {{"alpha", {1}}, {"beta", {2}}, {"gamma", {1}}}, std::nullopt},
          {D8, {{"alpha", {1}}, {"beta", {0}}, {"gamma", {1}}}, std::nullopt}};
}

inline std::vector<Context> swapped_contexts() {
  std::vector<Context> out;
  auto C2 = cyclic_group(2);
  out.push_back({C2, {}, Subgroup::trivial(C2)});
  for (const auto& G : {elementary_abelian_group(2, 2), dihedral_group(8), cyclic_group(4)})
    for (const auto& H : all_subgroups(G))
      if (H.index() == 2 && schur_multiplier_cached(H.as_group()).order() == 1) {
        std::map<std::string, std::vector<std::int64_t>> cls;
        if (schur_multiplier_cached(G).order() > 1) cls["alpha"] = class_coords(G, {1});
        out.push_back({G, cls, H});
      }
  return out;
}

inline MotiveAtom golden_atom(const std::string& token, const Context& ctx) {
  const auto& M = schur_multiplier_cached(ctx.group);
  auto coords = [&](const std::string& s) {
    auto it = ctx.classes.find(s);
    return it == ctx.classes.end() ? std::vector<std::int64_t>(M.invariant_factors().size(), 0) : it->second;
  };
  if (token == "perm(G/H)") {
    ensure(ctx.swap.has_value(), ErrorCode::InvalidSpec, "golden token perm(G/H) needs a swap");
    return MotiveAtom::induced(*ctx.swap);
  }
  if (token == "1") return MotiveAtom::twisted_unit(trivial_class(ctx.group));
  if (token == "beta" || token == "gamma") return MotiveAtom::twisted_unit(class_from_coordinates(M, coords(token)));
  if (token.rfind("alpha", 0) == 0) {
    std::int64_t k = 1;
    if (token.size() > 5) {
      ensure(token[5] == '^', ErrorCode::InvalidSpec, "bad golden token '" + token + "'");
      k = std::stoll(token.substr(6));
    }
    return MotiveAtom::twisted_unit(class_from_coordinates(M, class_power(M, coords("alpha"), k)));
  }
  fail(ErrorCode::InvalidSpec, "bad golden token '" + token + "'");
}

inline ActionSpec context_action(const CatalogEntry& e, const Context& ctx) {
  ActionSpec a = ActionSpec::trivial(ctx.group);
  std::set<std::string> used{"alpha"};
  for (const auto& b : e.blocks) used.insert(b.symbols.begin(), b.symbols.end());
  for (const auto& [k, v] : ctx.classes)
    if (used.count(k) && !(ctx.swap && k != "alpha")) a.classes[k] = v;
  a.swap = ctx.swap;
  return a;
}

}  // namespace detail

inline CriterionResult golden_decompositions(const std::string& golden_dir) {
  CriterionResult r{6, "Decompositions match golden atom lists", false, "", 0};
  detail::Tally t;
  std::size_t files = 0, entries = 0;
  std::set<std::string> seen;
  for (const char* f : {"projective_space.json", "quadric_odd.json", "quadric_even.json", "grassmannian.json",
                        "del_pezzo.json"}) {
    const std::string path = (std::filesystem::path(golden_dir) / f).string();
    io::json doc = io::read_json_file(path);
    ++files;
    for (const auto& item : doc.at("entries")) {
      ++entries;
      auto e = catalog_lookup(item.at("entry").get<std::string>());
      const std::string kase = item.at("case").get<std::string>();
      seen.insert(e.label() + "/" + kase);
      auto tokens = item.at("atoms").get<std::vector<std::string>>();
      auto ctxs = kase == "swapped" ? detail::swapped_contexts() : detail::invariant_contexts();
      for (const auto& ctx : ctxs) {
        std::vector<MotiveAtom> expected;
        for (const auto& tok : tokens) expected.push_back(detail::golden_atom(tok, ctx));
        auto got = decompose_collection(instantiate(e, detail::context_action(e, ctx)));
        MotiveSkeleton want(ctx.group, expected);
        t.check(got == want, e.label() + "/" + kase + " over " + ctx.group->label() + ": " + got.str() + " vs " +
                                 want.str());
      }
    }
  }
  std::vector<std::string> required;
  for (int n = 0; n <= 6; ++n) required.push_back("projective_space:" + std::to_string(n) + "/invariant");
  for (int d : {1, 3, 5}) required.push_back("quadric_odd:" + std::to_string(d) + "/invariant");
  for (int d : {2, 4})
    for (const char* c : {"invariant", "swapped"}) required.push_back("quadric_even:" + std::to_string(d) + "/" + c);
  required.push_back("grassmannian:2,4/invariant");
  required.push_back("del_pezzo_bl2/invariant");
  required.push_back("del_pezzo_bl2/swapped");
  for (const auto& req : required) t.check(seen.count(req) == 1, "golden entry missing: " + req);
  r.ok = t.ok();
  r.detail = t.summary(std::to_string(entries) + " golden entries from " + std::to_string(files) + " files, " +
                       std::to_string(t.cases() - required.size()) + " comparisons");
  return r;
}

// ---------------------------------------------------------------------------
// 7. Chow skeletons

inline CriterionResult chow_catalog() {
  CriterionResult r{7, "Chow skeletons and length check on the catalog", false, "", 0};
  detail::Tally t;
  auto all = catalog_all();
  for (const auto& e : all) {
    try {
      check_via(e);
      auto c = chow_skeleton(e);
      t.check(c.exponents.size() == e.collection_length(), e.label() + ": exponent count != collection length");
    } catch (const Error& err) {
      t.check(false, e.label() + ": " + err.what());
    }
  }
  for (const auto& G : {cyclic_group(1), cyclic_group(2), symmetric_group(3)}) {
    auto p1 = decompose_collection(instantiate(catalog_lookup("projective_space:1"), ActionSpec::trivial(G)));
    auto pts = decompose_collection(instantiate(catalog_lookup("disjoint_points:2"), ActionSpec::trivial(G)));
    t.check(p1 == pts, G->label() + ": P^1 and two points differ as NC skeletons");
  }
  auto c1 = chow_skeleton(catalog_lookup("projective_space:1")), c2 = chow_skeleton(catalog_lookup("disjoint_points:2"));
  t.check(c1.str() == "{0,1}" && c2.str() == "{0,0}" && !(c1 == c2),
          "Chow skeletons " + c1.str() + " vs " + c2.str());
  r.ok = t.ok();
  r.detail = t.summary(std::to_string(all.size()) + " entries; P^1 vs pt+pt: NC equal, Chow {0,1} != {0,0}");
  return r;
}

// ---------------------------------------------------------------------------
// 8, 9. Datasets

namespace detail {

inline std::vector<std::string> dataset_files(const std::string& dir, bool blowups) {
  std::vector<std::string> out;
  for (const auto& p : std::filesystem::directory_iterator(dir)) {
    if (p.path().extension() != ".json") continue;
    auto j = io::read_json_file(p.path().string());
    if (io::is_blowup_dataset(j) == blowups) out.push_back(p.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool has_file(const std::vector<std::string>& files, const std::string& name) {
  for (const auto& f : files)
    if (std::filesystem::path(f).filename() == name) return true;
  return false;
}

}  // namespace detail

inline CriterionResult blowup_datasets(const std::string& dataset_dir) {
  CriterionResult r{8, "Blow-up relations on the shipped datasets", false, "", 0};
  detail::Tally t;
  auto files = detail::dataset_files(dataset_dir, true);
  for (const char* need : {"blowup_two_points_c2.json", "blowup_fixed_point_c2.json"})
    t.check(detail::has_file(files, need), std::string("missing dataset ") + need);
  for (const auto& f : files) {
    auto d = io::blowup_dataset_from_json(io::read_json_file(f), f);
    auto rep = blowup_check(d.X, d.Y, d.c, d.Bl, d.E);
    for (const auto& item : rep.items)
      t.check(item.ok, std::filesystem::path(f).filename().string() + ": " + item.name);
  }
  r.ok = t.ok();
  r.detail = t.summary(std::to_string(files.size()) + " datasets");
  return r;
}

inline CriterionResult factorization_datasets(const std::string& dataset_dir) {
  CriterionResult r{9, "Euler characteristic factors through mu_nc", false, "", 0};
  detail::Tally t;
  auto files = detail::dataset_files(dataset_dir, false);
  for (const char* need : {"two_points_swap.json", "p1_c2.json", "p2_trivial_c2.json"})
    t.check(detail::has_file(files, need), std::string("missing dataset ") + need);
  for (const auto& f : files) {
    const std::string name = std::filesystem::path(f).filename().string();
    auto d = io::factor_dataset_from_json(io::read_json_file(f), f);
    auto rep = factorization_check(d.expr, d.fixed_euler);
    t.check(rep.ok, name + ": " + (rep.items.empty() ? "" : rep.items[0].lhs + " != " + rep.items[0].rhs));
    if (d.sectors) {
      auto hp = evaluate_invariant(mu_nc(d.expr), Invariant::HP);
      auto orb = orbifold_dims(d.group, *d.sectors);
      t.check(hp.graded.at(0) == orb.first && hp.graded.at(1) == orb.second, name + ": HP != orbifold dims");
    }
  }
  r.ok = t.ok();
  r.detail = t.summary(std::to_string(files.size()) + " datasets");
  return r;
}

// ---------------------------------------------------------------------------
// 10. Property suites

namespace detail {

using cplx = std::complex<double>;

inline cplx zeta(std::int64_t e, std::int64_t n) {
  const double pi = 3.14159265358979323846;
  return std::polar(1.0, 2.0 * pi * static_cast<double>(floor_mod(e, n)) / static_cast<double>(n));
}

/// Product in the twisted group algebra on dense coefficient vectors.
inline std::vector<cplx> twisted_product(const TwoCocycle& a, const std::vector<cplx>& x, const std::vector<cplx>& y) {
  const GroupPtr& G = a.group;
  std::vector<cplx> z(G->order(), 0.0);
  for (Elem g = 0; g < G->order(); ++g)
    for (Elem h = 0; h < G->order(); ++h) z[G->mul(g, h)] += x[g] * y[h] * zeta(a.at(g, h), a.modulus);
  return z;
}

inline bool associative_numerically(const TwoCocycle& a, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  auto rnd = [&] {
    std::vector<cplx> v(a.group->order());
    for (auto& c : v) c = {nd(rng), nd(rng)};
    return v;
  };
  auto x = rnd(), y = rnd(), z = rnd();
  auto l = twisted_product(a, twisted_product(a, x, y), z);
  auto r = twisted_product(a, x, twisted_product(a, y, z));
  double err = 0, scale = 0;
  for (std::size_t i = 0; i < l.size(); ++i) err = std::max(err, std::abs(l[i] - r[i])), scale += std::abs(l[i]);
  return err <= 1e-9 * std::max(1.0, scale);
}

/// Dimension of the center via the dense commutator system.
inline std::size_t center_dim_dense(const TwoCocycle& a) {
  const GroupPtr& G = a.group;
  const std::size_t n = G->order();
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n * n), static_cast<Eigen::Index>(n));
  for (Elem s = 0; s < n; ++s)
    for (Elem h = 0; h < n; ++h) {
      // e_s e_h - e_h e_s
      S(static_cast<Eigen::Index>(s * n + G->mul(s, h)), h) += zeta(a.at(s, h), a.modulus);
      S(static_cast<Eigen::Index>(s * n + G->mul(h, s)), h) -= zeta(a.at(h, s), a.modulus);
    }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(S);
  lu.setThreshold(1e-9);
  return n - static_cast<std::size_t>(lu.rank());
}

/// Burnside-style count: (1/|H1|) #{(g, h, x) : g, h in H1 commute and fix the coset x}.
inline std::size_t induced_hom_oracle(const Subgroup& H1, const Subgroup& H2) {
  const GroupPtr& G = H1.parent();
  std::vector<std::vector<Elem>> cosets;
  std::vector<bool> seen(G->order(), false);
  for (Elem g = 0; g < G->order(); ++g) {
    if (seen[g]) continue;
    std::vector<Elem> c;
    for (Elem h : H2.members()) c.push_back(G->mul(g, h));
    for (Elem m : c) seen[m] = true;
    cosets.push_back(c);
  }
  auto fixes = [&](Elem g, const std::vector<Elem>& c) {
    Elem x = G->mul(g, c.front());
    return std::find(c.begin(), c.end(), x) != c.end();
  };
  std::size_t total = 0;
  for (const auto& c : cosets)
    for (Elem g : H1.members())
      if (fixes(g, c))
        for (Elem h : H1.members())
          if (G->mul(g, h) == G->mul(h, g) && fixes(h, c)) ++total;
  ensure(total % H1.order() == 0, ErrorCode::Internal, "orbit count is not an integer");
  return total / H1.order();
}

}  // namespace detail

inline CriterionResult property_suites(std::uint64_t seed) {
  CriterionResult r{10, "Property suites", false, "", 0};
  std::mt19937_64 rng(seed);
  auto groups = detail::property_groups();
  detail::Tally assoc, cohom, constancy, center, dixon, induced;
  std::size_t broken = 0;

  // cocycle identity <=> associativity of the twisted algebra
  for (int i = 0; i < 240; ++i) {
    const auto& G = groups[static_cast<std::size_t>(i) % groups.size()];
    const std::int64_t n = (i / 9) % 2 ? 4 : 2;
    TwoCocycle a = detail::random_cocycle(G, n, rng);
    if (i % 2 == 1 && G->order() > 2) {
      std::uniform_int_distribution<Elem> pick(1, static_cast<Elem>(G->order() - 1));
      Elem g = pick(rng), h = pick(rng);
      a.at(g, h) = floor_mod(a.at(g, h) + 1, n);
    }
    const bool identity = cocycle_validate(a).ok;
    const bool assoc_ok = detail::associative_numerically(a, rng);
    if (!identity) ++broken;
    bool builds = true;
    try {
      build_twisted(a);
    } catch (const Error&) {
      builds = false;
    }
    assoc.check(identity == assoc_ok && builds == identity, G->label() + ": cocycle identity vs associativity");
  }
  assoc.check(broken > 0 && broken < 240, "suite did not exercise both outcomes");

  // class_of respects is_cohomologous
  for (int i = 0; i < 240; ++i) {
    const auto& G = groups[static_cast<std::size_t>(i) % groups.size()];
    const std::int64_t n = 4;
    const auto& M = schur_multiplier_cached(G);
    TwoCocycle a = detail::random_cocycle(G, n, rng), b = detail::random_cocycle(G, n, rng);
    if (i % 2 == 0) {
      std::vector<std::int64_t> delta(G->order());
      for (auto& v : delta) v = static_cast<std::int64_t>(rng() % 4);
      b = cocycle_mul(a, coboundary(G, n, delta));
    }
    const bool same_class = class_of(a, M) == class_of(b, M);
    cohom.check(same_class == is_cohomologous(a, b).has_value(), G->label() + ": class_of vs is_cohomologous");
  }

  // regularity is constant on classes; center dimension = regular-class count
  for (int i = 0; i < 220; ++i) {
    const auto& G = groups[static_cast<std::size_t>(i) % groups.size()];
    TwoCocycle a = detail::random_cocycle(G, i % 3 ? 2 : 6, rng);
    std::vector<bool> reg(G->order(), true);
    for (Elem g = 0; g < G->order(); ++g)
      for (Elem h = 0; h < G->order(); ++h)
        if (G->mul(g, h) == G->mul(h, g) && floor_mod(a.at(g, h) - a.at(h, g), a.modulus) != 0) reg[g] = false;
    std::size_t count = 0;
    bool constant = true;
    for (const auto& cls : G->classes()) {
      for (Elem m : cls.members) constant = constant && reg[m] == reg[cls.representative];
      count += reg[cls.representative];
    }
    constancy.check(constant, G->label() + ": regularity not class-constant");
    auto rep = alpha_regular(a);
    auto A = build_twisted(a);
    const auto basis = center_basis(A).size();
    center.check(rep.count == count && basis == count && detail::center_dim_dense(a) == count,
                 G->label() + ": center dimension != regular classes");
  }

  // Dixon orthogonality, exact
  std::vector<GroupPtr> dixon_groups;
  for (std::size_t n = 1; n <= 12; ++n) dixon_groups.push_back(cyclic_group(n));
  for (std::size_t n = 3; n <= 5; ++n) dixon_groups.push_back(symmetric_group(n));
  for (std::size_t o : {6, 8, 10, 12, 16}) dixon_groups.push_back(dihedral_group(o));
  dixon_groups.push_back(elementary_abelian_group(2, 3));
  dixon_groups.push_back(elementary_abelian_group(3, 2));
  for (const auto& G : dixon_groups) {
    auto T = compute_character_table(G, seed);
    for (std::size_t i = 0; i < T->size(); ++i)
      for (std::size_t j = 0; j < T->size(); ++j)
        dixon.check(T->inner_with_irrep(T->values[i], j) == Cyclotomic::rational(i == j ? 1 : 0, T->exponent),
                    G->label() + ": row orthogonality");
    dixon.check(column_orthogonality_holds(*T), G->label() + ": column orthogonality");
  }

  // Induced -> Induced hom ranks
  for (const auto& G : {symmetric_group(3), dihedral_group(8), elementary_abelian_group(2, 2)}) {
    auto subs = all_subgroups(G);
    for (const auto& H1 : subs)
      for (const auto& H2 : subs)
        induced.check(hom_rank(MotiveAtom::induced(H1), MotiveAtom::induced(H2)) == detail::induced_hom_oracle(H1, H2),
                      G->label() + ": induced hom rank");
  }
  auto S4 = symmetric_group(4);
  auto subs4 = all_subgroups(S4);
  for (std::size_t k = 0; k < 120; ++k) {
    const auto& H1 = subs4[rng() % subs4.size()];
    const auto& H2 = subs4[rng() % subs4.size()];
    induced.check(hom_rank(MotiveAtom::induced(H1), MotiveAtom::induced(H2)) == detail::induced_hom_oracle(H1, H2),
                  "S4: induced hom rank");
  }

  struct Named {
    const char* name;
    const detail::Tally* tally;
  };
  std::ostringstream os;
  bool ok = true;
  for (const auto& [name, tally] : {Named{"assoc", &assoc}, Named{"cohom", &cohom}, Named{"regular", &constancy},
                                    Named{"center", &center}, Named{"dixon", &dixon}, Named{"induced", &induced}}) {
    os << (os.tellp() > 0 ? ", " : "") << name << " " << tally->cases();
    if (!tally->ok()) os << " [" << tally->summary("") << "]";
    ok = ok && tally->ok() && tally->cases() >= 200;
  }
  r.ok = ok;
  r.detail = os.str() + " cases";
  return r;
}

// ---------------------------------------------------------------------------
// Driver

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << (r.ok ? "PASS" : "FAIL") << " [" << (r.id < 10 ? " " : "") << r.id << "] " << r.name << " ("
     << r.detail << ", " << r.seconds << " s)";
  return os.str();
}

inline std::vector<CriterionResult> run_all(const Options& opt) {
  std::vector<std::function<CriterionResult()>> jobs{
      [] { return schur_table(); },
      [] { return representation_rings(); },
      [] { return unit_endomorphisms(); },
      [] { return central_type(); },
      [] { return localization(); },
      [&] { return golden_decompositions(opt.golden_dir); },
      [] { return chow_catalog(); },
      [&] { return blowup_datasets(opt.dataset_dir); },
      [&] { return factorization_datasets(opt.dataset_dir); },
      [&] { return property_suites(opt.seed); },
  };
  auto guarded = [](int id, const std::function<CriterionResult()>& job) {
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = job();
    } catch (const std::exception& e) {
      r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), 0};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  };
  std::vector<CriterionResult> out;
  if (opt.parallel) {
    std::vector<std::future<CriterionResult>> futs;
    for (std::size_t i = 0; i < jobs.size(); ++i)
      futs.push_back(std::async(std::launch::async, guarded, static_cast<int>(i + 1), jobs[i]));
    for (auto& f : futs) out.push_back(f.get());
  } else {
    for (std::size_t i = 0; i < jobs.size(); ++i) out.push_back(guarded(static_cast<int>(i + 1), jobs[i]));
  }
  return out;
}

}  // namespace motivelab::selftest
