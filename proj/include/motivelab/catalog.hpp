#pragma once

// Named smooth projective varieties with full exceptional collections, their
// Betti/Hodge data, and the translation of a G-action template into a
// CollectionSpec.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "motivelab/motives.hpp"

namespace motivelab {

/// One block of a collection template.
struct TemplateBlock {
  enum class Kind {
    Power,          // G-invariant object with class alpha^power
    Symbol,         // G-invariant object with an independent class
    SwappablePair,  // two objects, G-invariant or swapped through G/H = C2
    Points,         // skyscrapers of k points permuted by G
  };
  Kind kind = Kind::Power;
  std::vector<std::string> objects;
  std::int64_t power = 0;
  std::vector<std::string> symbols;  // class names for Symbol / SwappablePair
};

struct CatalogEntry {
  std::string name;
  std::vector<std::int64_t> params;
  std::int64_t dimension = 0;
  std::vector<std::int64_t> betti;               // b_0, ..., b_{2d}
  std::vector<std::vector<std::int64_t>> hodge;  // h^{p,q}
  std::vector<TemplateBlock> blocks;

  std::string label() const {
    std::string s = name;
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : ":") + std::to_string(params[i]);
    return s;
  }
  std::size_t collection_length() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.objects.size();
    return n;
  }
  std::vector<std::string> objects() const {
    std::vector<std::string> out;
    for (const auto& b : blocks) out.insert(out.end(), b.objects.begin(), b.objects.end());
    return out;
  }
  bool has_pair() const {
    return std::any_of(blocks.begin(), blocks.end(),
                       [](const TemplateBlock& b) { return b.kind == TemplateBlock::Kind::SwappablePair; });
  }
  bool has_points() const {
    return std::any_of(blocks.begin(), blocks.end(),
                       [](const TemplateBlock& b) { return b.kind == TemplateBlock::Kind::Points; });
  }
};

namespace detail {

inline TemplateBlock power_block(std::string object, std::int64_t power) {
  return {TemplateBlock::Kind::Power, {std::move(object)}, power, {}};
}

inline std::string twist_name(std::int64_t i) { return i == 0 ? "O" : "O(" + std::to_string(i) + ")"; }

inline void fill_hodge(CatalogEntry& e) {
  const std::size_t d = static_cast<std::size_t>(e.dimension);
  e.hodge.assign(d + 1, std::vector<std::int64_t>(d + 1, 0));
  for (std::size_t p = 0; p <= d; ++p) e.hodge[p][p] = e.betti[2 * p];
}

/// Coefficients of the Gaussian binomial [d choose n]_q.
inline std::vector<std::int64_t> gaussian_binomial(std::int64_t d, std::int64_t n) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::int64_t>> memo;
  std::function<std::vector<std::int64_t>(std::int64_t, std::int64_t)> rec = [&](std::int64_t a, std::int64_t b) {
    if (b == 0 || b == a) return std::vector<std::int64_t>{1};
    auto key = std::make_pair(a, b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    auto x = rec(a - 1, b - 1), y = rec(a - 1, b);
    std::vector<std::int64_t> out(static_cast<std::size_t>(b * (a - b) + 1), 0);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
    for (std::size_t i = 0; i < y.size(); ++i) out[i + static_cast<std::size_t>(b)] += y[i];
    memo[key] = out;
    return out;
  };
  return rec(d, n);
}

}  // namespace detail

/// Look up a catalog entry; throws UnknownEntry or ParamRange.
inline CatalogEntry catalog_lookup(const std::string& name, const std::vector<std::int64_t>& params) {
  auto need = [&](std::size_t k) {
    ensure(params.size() == k, ErrorCode::ParamRange,
           name + " takes " + std::to_string(k) + " parameter(s), got " + std::to_string(params.size()));
  };
  auto range = [&](bool ok, const std::string& what) { ensure(ok, ErrorCode::ParamRange, name + ": " + what); };
  CatalogEntry e;
  e.name = name;
  e.params = params;
  using K = TemplateBlock::Kind;
  if (name == "point") {
    need(0);
    e.betti = {1};
    e.blocks = {detail::power_block("O_pt", 0)};
  } else if (name == "disjoint_points") {
    need(1);
    const std::int64_t k = params[0];
    range(k >= 1 && k <= 64, "number of points must lie in [1, 64]");
    e.betti = {k};
    TemplateBlock b{K::Points, {}, 0, {}};
    for (std::int64_t i = 0; i < k; ++i) b.objects.push_back("O_x" + std::to_string(i));
    e.blocks = {b};
  } else if (name == "projective_space") {
    need(1);
    const std::int64_t n = params[0];
    range(n >= 0 && n <= 12, "n must lie in [0, 12]");
    e.dimension = n;
    e.betti.assign(static_cast<std::size_t>(2 * n + 1), 0);
    for (std::int64_t i = 0; i <= n; ++i) {
      e.betti[static_cast<std::size_t>(2 * i)] = 1;
      e.blocks.push_back(detail::power_block(detail::twist_name(i), i));
    }
  } else if (name == "quadric_odd") {
    need(1);
    const std::int64_t d = params[0];
    range(d >= 1 && d <= 10 && d % 2 == 1, "dimension must be odd and at most 10");
    e.dimension = d;
    e.betti.assign(static_cast<std::size_t>(2 * d + 1), 0);
    for (std::int64_t i = 0; i <= d; ++i) e.betti[static_cast<std::size_t>(2 * i)] = 1;
    e.blocks.push_back({K::Symbol, {"S"}, 0, {"beta"}});
    for (std::int64_t i = 0; i < d; ++i) e.blocks.push_back(detail::power_block(detail::twist_name(i), i));
  } else if (name == "quadric_even") {
    need(1);
    const std::int64_t d = params[0];
    range(d >= 2 && d <= 10 && d % 2 == 0, "dimension must be even and in [2, 10]");
    e.dimension = d;
    e.betti.assign(static_cast<std::size_t>(2 * d + 1), 0);
    for (std::int64_t i = 0; i <= d; ++i) e.betti[static_cast<std::size_t>(2 * i)] = 1;
    e.betti[static_cast<std::size_t>(d)] = 2;
    e.blocks.push_back({K::SwappablePair, {"S-", "S+"}, 0, {"gamma", "beta"}});
    for (std::int64_t i = 0; i < d; ++i) e.blocks.push_back(detail::power_block(detail::twist_name(i), i));
  } else if (name == "grassmannian") {
    need(2);
    const std::int64_t n = params[0], d = params[1];
    range(d >= 1 && d <= 8 && n >= 1 && n <= d, "need 1 <= n <= d <= 8");
    e.dimension = n * (d - n);
    auto coeffs = detail::gaussian_binomial(d, n);
    e.betti.assign(static_cast<std::size_t>(2 * e.dimension + 1), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      e.betti[2 * i] = coeffs[i];
      for (std::int64_t j = 0; j < coeffs[i]; ++j)
        e.blocks.push_back(detail::power_block(
            i == 0 ? "O" : "Sigma_" + std::to_string(i) + "^" + std::to_string(j) + " U*", static_cast<std::int64_t>(i)));
    }
  } else if (name == "del_pezzo_bl2") {
    need(0);
    e.dimension = 2;
    e.betti = {1, 0, 3, 0, 1};
    e.blocks.push_back({K::SwappablePair, {"O_E1(-1)", "O_E2(-1)"}, 0, {"gamma", "beta"}});
    for (std::int64_t i = 0; i <= 2; ++i) e.blocks.push_back(detail::power_block(detail::twist_name(i), i));
  } else if (name == "del_pezzo_bl1") {
    need(0);
    e.dimension = 2;
    e.betti = {1, 0, 2, 0, 1};
    e.blocks.push_back({K::Symbol, {"O_E(-1)"}, 0, {"beta"}});
    for (std::int64_t i = 0; i <= 2; ++i) e.blocks.push_back(detail::power_block(detail::twist_name(i), i));
  } else {
    fail(ErrorCode::UnknownEntry, "unknown catalog entry '" + name + "'");
  }
  detail::fill_hodge(e);
  return e;
}

inline std::vector<std::string> catalog_names() {
  return {"point",       "disjoint_points", "projective_space", "quadric_odd",
          "quadric_even", "grassmannian",   "del_pezzo_bl2",    "del_pezzo_bl1"};
}

/// Every entry over its full parameter range.
inline std::vector<CatalogEntry> catalog_all() {
  std::vector<CatalogEntry> out{catalog_lookup("point", {}), catalog_lookup("del_pezzo_bl2", {}),
                                catalog_lookup("del_pezzo_bl1", {})};
  for (std::int64_t k = 1; k <= 64; ++k) out.push_back(catalog_lookup("disjoint_points", {k}));
  for (std::int64_t n = 0; n <= 12; ++n) out.push_back(catalog_lookup("projective_space", {n}));
  for (std::int64_t d = 1; d <= 9; d += 2) out.push_back(catalog_lookup("quadric_odd", {d}));
  for (std::int64_t d = 2; d <= 10; d += 2) out.push_back(catalog_lookup("quadric_even", {d}));
  for (std::int64_t d = 1; d <= 8; ++d)
    for (std::int64_t n = 1; n <= d; ++n) out.push_back(catalog_lookup("grassmannian", {n, d}));
  return out;
}

/// Parses "projective_space:3", "grassmannian:2,4", "point".
inline CatalogEntry catalog_lookup(const std::string& symbol) {
  auto colon = symbol.find(':');
  std::string name = symbol.substr(0, colon);
  std::vector<std::int64_t> params;
  if (colon != std::string::npos) {
    std::stringstream ss(symbol.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        params.push_back(std::stoll(tok, &used));
        ensure(used == tok.size(), ErrorCode::ParamRange, "bad parameter '" + tok + "'");
      } catch (const std::logic_error&) {
        fail(ErrorCode::ParamRange, "bad parameter '" + tok + "' in " + symbol);
      }
    }
  }
  return catalog_lookup(name, params);
}

/// A G-action on a catalog entry, described by its effect on the collection.
struct ActionSpec {
  GroupPtr group;
  std::map<std::string, std::vector<std::int64_t>> classes;  // "alpha", "beta", "gamma"; absent = trivial
  std::optional<Subgroup> swap;                              // stabilizer of one object of the swapped pair
  std::vector<Subgroup> orbits;                              // point orbits, by stabilizer

  static ActionSpec trivial(const GroupPtr& G) { return {G, {}, std::nullopt, {}}; }
};

inline std::vector<std::int64_t> class_power(const SchurMultiplier& M, const std::vector<std::int64_t>& c,
                                             std::int64_t k) {
  std::vector<std::int64_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = floor_mod(c[i] * k, M.invariant_factors()[i]);
  return out;
}

/// Collection spec of the entry under the action.
inline CollectionSpec instantiate(const CatalogEntry& e, const ActionSpec& a) {
  const GroupPtr& G = a.group;
  ensure(G != nullptr, ErrorCode::InvalidSpec, "action has no group");
  const auto& M = schur_multiplier_cached(G);
  const std::size_t ncoords = M.invariant_factors().size();
  std::vector<std::string> used{"alpha"};
  for (const auto& b : e.blocks) used.insert(used.end(), b.symbols.begin(), b.symbols.end());
  for (const auto& [name, coords] : a.classes) {
    ensure(std::find(used.begin(), used.end(), name) != used.end(), ErrorCode::InconsistentAction,
           e.label() + " has no object with class '" + name + "'");
    ensure(coords.size() == ncoords, ErrorCode::InconsistentAction,
           "class '" + name + "' needs " + std::to_string(ncoords) + " coordinate(s) for H^2 = " +
               format_invariant_factors(M.invariant_factors()));
  }
  auto cls = [&](const std::string& name) {
    auto it = a.classes.find(name);
    std::vector<std::int64_t> c = it == a.classes.end() ? std::vector<std::int64_t>(ncoords, 0) : it->second;
    return class_power(M, c, 1);
  };
  if (a.swap) {
    require_same_group(G, a.swap->parent(), "swap stabilizer");
    ensure(e.has_pair(), ErrorCode::InconsistentAction, e.label() + " has no pair of objects that can be swapped");
    ensure(a.swap->index() == 2, ErrorCode::InconsistentAction,
           "a swapped pair needs a stabilizer of index 2, got index " + std::to_string(a.swap->index()));
  }
  ensure(a.orbits.empty() || e.has_points(), ErrorCode::InconsistentAction,
         e.label() + " has no points to permute");

  CollectionSpec spec{G, {}};
  const Subgroup whole = Subgroup::whole(G);
  for (const auto& b : e.blocks) {
    using K = TemplateBlock::Kind;
    switch (b.kind) {
      case K::Power:
        spec.blocks.push_back({1, whole, class_power(M, cls("alpha"), b.power)});
        break;
      case K::Symbol:
        spec.blocks.push_back({1, whole, cls(b.symbols[0])});
        break;
      case K::SwappablePair:
        if (a.swap) {
          for (const auto& s : b.symbols)
            ensure(!a.classes.count(s), ErrorCode::InconsistentAction,
                   "class '" + s + "' is meaningless for swapped objects");
          spec.blocks.push_back({2, *a.swap, std::nullopt});
        } else {
          for (const auto& s : b.symbols) spec.blocks.push_back({1, whole, cls(s)});
        }
        break;
      case K::Points: {
        std::size_t covered = 0;
        for (const auto& H : a.orbits) {
          require_same_group(G, H.parent(), "point orbit");
          covered += H.index();
          if (H.is_whole())
            spec.blocks.push_back({1, whole, std::vector<std::int64_t>(ncoords, 0)});
          else
            spec.blocks.push_back({H.index(), H, std::nullopt});
        }
        ensure(covered <= b.objects.size(), ErrorCode::InconsistentAction,
               "orbits cover " + std::to_string(covered) + " points but the entry has " +
                   std::to_string(b.objects.size()));
        // points not mentioned are fixed
        for (std::size_t i = covered; i < b.objects.size(); ++i)
          spec.blocks.push_back({1, whole, std::vector<std::int64_t>(ncoords, 0)});
        break;
      }
    }
  }
  ensure(spec.total_length() == e.collection_length(), ErrorCode::Internal, "instantiated length differs");
  return spec;
}

inline ChowSkeleton chow_skeleton(const CatalogEntry& e) { return chow_skeleton(e.betti); }
inline void check_via(const CatalogEntry& e) { check_via(e.betti, e.collection_length()); }

}  // namespace motivelab
