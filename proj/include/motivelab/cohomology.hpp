#pragma once

// Normalized 2-cocycles with values in mu_n (stored as exponents mod n),
// coboundary equivalence and the Schur multiplier H^2(G, C^x).
//
// Convention: s(g) s(h) = alpha(g, h) s(gh); in exponent form the cocycle
// identity reads e(r,s) + e(t,rs) = e(t,r) + e(tr,s) (mod n).
//
// The Schur multiplier is computed from a free presentation F/R of G on a
// small generating set X: R/[F,R] is the abelian group on the Schreier
// generators of R modulo the conjugation action of X, its torsion is M(G)
// (Hopf), and a cocycle's class is read off by evaluating Schreier generators
// in the central extension defined by the cocycle.

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "motivelab/arith.hpp"
#include "motivelab/group.hpp"
#include "motivelab/modmatrix.hpp"

namespace motivelab {

struct TwoCocycle {
  GroupPtr group;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> table;  // row-major |G| x |G| exponents in [0, modulus)

  std::int64_t at(Elem g, Elem h) const { return table[static_cast<std::size_t>(g) * group->order() + h]; }
  std::int64_t& at(Elem g, Elem h) { return table[static_cast<std::size_t>(g) * group->order() + h]; }
};

inline TwoCocycle trivial_cocycle(const GroupPtr& G, std::int64_t n = 1) {
  ensure(n >= 1, ErrorCode::InvalidSpec, "cocycle modulus must be positive");
  return {G, n, std::vector<std::int64_t>(G->order() * G->order(), 0)};
}

inline TwoCocycle make_cocycle(const GroupPtr& G, std::int64_t n, const std::vector<std::vector<std::int64_t>>& rows) {
  ensure(n >= 1, ErrorCode::InvalidSpec, "cocycle modulus must be positive");
  ensure(rows.size() == G->order(), ErrorCode::InvalidSpec, "cocycle table has wrong number of rows");
  TwoCocycle a = trivial_cocycle(G, n);
  for (Elem g = 0; g < G->order(); ++g) {
    ensure(rows[g].size() == G->order(), ErrorCode::InvalidSpec, "cocycle table row has wrong length");
    for (Elem h = 0; h < G->order(); ++h) a.at(g, h) = floor_mod(rows[g][h], n);
  }
  return a;
}

/// Coboundary (d delta)(g, h) = delta(g) + delta(h) - delta(gh).
inline TwoCocycle coboundary(const GroupPtr& G, std::int64_t n, const std::vector<std::int64_t>& delta) {
  ensure(delta.size() == G->order(), ErrorCode::InvalidSpec, "coboundary needs one value per element");
  TwoCocycle a = trivial_cocycle(G, n);
  const std::int64_t d0 = delta[0];
  for (Elem g = 0; g < G->order(); ++g)
    for (Elem h = 0; h < G->order(); ++h)
      a.at(g, h) = floor_mod((delta[g] - d0) + (delta[h] - d0) - (delta[G->mul(g, h)] - d0), n);
  return a;
}

/// Same cocycle with exponents rescaled to modulus N (n | N).
inline TwoCocycle promote(const TwoCocycle& a, std::int64_t N) {
  if (N == a.modulus) return a;
  ensure(N % a.modulus == 0, ErrorCode::ModulusMismatch, "cannot promote modulus " + std::to_string(a.modulus) +
                                                             " to " + std::to_string(N));
  TwoCocycle b = a;
  b.modulus = N;
  for (auto& e : b.table) e *= N / a.modulus;
  return b;
}

inline TwoCocycle cocycle_mul(const TwoCocycle& a, const TwoCocycle& b) {
  require_same_group(a.group, b.group, "cocycle product");
  std::int64_t N = lcm64(a.modulus, b.modulus);
  TwoCocycle pa = promote(a, N), pb = promote(b, N);
  for (std::size_t i = 0; i < pa.table.size(); ++i) pa.table[i] = floor_mod(pa.table[i] + pb.table[i], N);
  return pa;
}

inline TwoCocycle cocycle_pow(const TwoCocycle& a, std::int64_t k) {
  TwoCocycle b = a;
  for (auto& e : b.table) e = floor_mod(mul_mod(floor_mod(k, a.modulus), e, a.modulus), a.modulus);
  return b;
}

inline TwoCocycle cocycle_inverse(const TwoCocycle& a) { return cocycle_pow(a, -1); }

struct ValidationReport {
  bool ok = true;
  std::string kind;                   // "shape", "normalization" or "identity"
  std::array<Elem, 3> triple{0, 0, 0};  // first failing (t, r, s); normalization uses (g, 0, 0)
  std::string message;
};

inline ValidationReport cocycle_validate(const TwoCocycle& a) {
  ValidationReport rep;
  const std::size_t n = a.group->order();
  if (a.table.size() != n * n || a.modulus < 1) {
    rep.ok = false;
    rep.kind = "shape";
    rep.message = "table dimensions do not match the group order";
    return rep;
  }
  for (auto e : a.table)
    if (e < 0 || e >= a.modulus) {
      rep.ok = false;
      rep.kind = "shape";
      rep.message = "exponent outside [0, modulus)";
      return rep;
    }
  for (Elem g = 0; g < n; ++g)
    if (a.at(0, g) != 0 || a.at(g, 0) != 0) {
      rep.ok = false;
      rep.kind = "normalization";
      rep.triple = {g, 0, 0};
      rep.message = "alpha(1," + std::to_string(g) + ") or alpha(" + std::to_string(g) + ",1) is not 1";
      return rep;
    }
  const std::int64_t m = a.modulus;
  for (Elem t = 1; t < n; ++t)
    for (Elem r = 1; r < n; ++r) {
      const Elem tr = a.group->mul(t, r);
      const std::int64_t atr = a.at(t, r);
      for (Elem s = 1; s < n; ++s) {
        std::int64_t lhs = a.at(r, s) + a.at(t, a.group->mul(r, s));
        std::int64_t rhs = atr + a.at(tr, s);
        if ((lhs - rhs) % m != 0) {
          rep.ok = false;
          rep.kind = "identity";
          rep.triple = {t, r, s};
          rep.message = "cocycle identity fails at (tau, rho, sigma) = (" + std::to_string(t) + ", " +
                        std::to_string(r) + ", " + std::to_string(s) + ")";
          return rep;
        }
      }
    }
  return rep;
}

inline void require_cocycle(const TwoCocycle& a) {
  ValidationReport rep = cocycle_validate(a);
  ensure(rep.ok, ErrorCode::NotACocycle, rep.message);
}

// ---------------------------------------------------------------------------
// Free presentation machinery

namespace detail {

/// Free presentation of G on a small generating set, with the Schreier basis
/// of R and the integer presentation of R/[F,R].
struct HopfPresentation {
  GroupPtr group;
  std::vector<Elem> gens;                 // X
  std::vector<Elem> parent;               // spanning tree: g = parent[g] * gens[parent_gen[g]]
  std::vector<std::size_t> parent_gen;
  std::vector<Elem> bfs_order;
  std::vector<std::int64_t> schreier;     // (t * |X| + i) -> Schreier index, or -1 for tree edges
  std::size_t num_schreier = 0;
  std::vector<std::int64_t> factors;      // SNF diagonal entries over all Schreier columns (0 = free)
  IntMatrix V, V_inv;

  std::size_t k() const { return gens.size(); }
  std::int64_t edge(Elem t, std::size_t i) const { return schreier[static_cast<std::size_t>(t) * k() + i]; }

  /// Indices j with factors[j] > 1 (the Schur multiplier's cyclic summands).
  std::vector<std::size_t> torsion_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < factors.size(); ++j)
      if (factors[j] > 1) out.push_back(j);
    return out;
  }
  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < factors.size(); ++j)
      if (factors[j] == 0) out.push_back(j);
    return out;
  }

  /// Cocycle induced by a homomorphism R/[F,R] -> Z/n given on Schreier
  /// generators: alpha(g, h) = phi(w_g w_h w_{gh}^{-1}).
  TwoCocycle cocycle_from_phi(const std::vector<std::int64_t>& phi, std::int64_t n) const {
    const std::size_t N = group->order();
    TwoCocycle a = trivial_cocycle(group, n);
    auto Phi = [&](Elem c, std::size_t i) -> std::int64_t {
      std::int64_t s = edge(c, i);
      return s < 0 ? 0 : phi[static_cast<std::size_t>(s)];
    };
    for (Elem g = 0; g < N; ++g)
      for (Elem h : bfs_order) {
        if (h == 0) continue;
        Elem p = parent[h];
        a.at(g, h) = floor_mod(a.at(g, p) + Phi(group->mul(g, p), parent_gen[h]), n);
      }
    return a;
  }

  /// Values f_alpha(s) in Z/m of each Schreier generator, evaluated in the
  /// central extension of G by Z/m defined by alpha.
  std::vector<std::int64_t> evaluate_schreier(const TwoCocycle& a) const {
    const std::int64_t m = a.modulus;
    std::vector<std::int64_t> lift(group->order(), 0);  // central part of the tree word w_g
    for (Elem h : bfs_order) {
      if (h == 0) continue;
      Elem p = parent[h];
      lift[h] = floor_mod(lift[p] + a.at(p, gens[parent_gen[h]]), m);
    }
    std::vector<std::int64_t> out(num_schreier, 0);
    for (Elem t = 0; t < group->order(); ++t)
      for (std::size_t i = 0; i < k(); ++i) {
        std::int64_t s = edge(t, i);
        if (s < 0) continue;
        Elem y = group->mul(t, gens[i]);
        out[static_cast<std::size_t>(s)] = floor_mod(lift[t] + a.at(t, gens[i]) - lift[y], m);
      }
    return out;
  }

  /// Homomorphism v -> (v V)_j * scale on Schreier generators, mod n.
  std::vector<std::int64_t> column_functional(std::size_t j, std::int64_t scale, std::int64_t n) const {
    std::vector<std::int64_t> phi(num_schreier, 0);
    for (std::size_t s = 0; s < num_schreier; ++s) {
      Int v = V(s, j) * Int(static_cast<long>(scale));
      Int r;
      mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n));
      phi[s] = r.get_si();
    }
    return phi;
  }
};

inline HopfPresentation hopf_presentation(const GroupPtr& G) {
  HopfPresentation P;
  P.group = G;
  const std::size_t N = G->order();
  P.gens = N > 1 ? small_generating_set(G) : std::vector<Elem>{};
  const std::size_t k = P.gens.size();
  P.parent.assign(N, 0);
  P.parent_gen.assign(N, 0);
  std::vector<bool> seen(N, false);
  seen[0] = true;
  P.bfs_order = {0};
  P.schreier.assign(N * k, -1);
  std::vector<bool> tree_edge(N * k, false);
  for (std::size_t head = 0; head < P.bfs_order.size(); ++head) {
    Elem t = P.bfs_order[head];
    for (std::size_t i = 0; i < k; ++i) {
      Elem y = G->mul(t, P.gens[i]);
      if (seen[y]) continue;
      seen[y] = true;
      P.parent[y] = t;
      P.parent_gen[y] = i;
      tree_edge[t * k + i] = true;
      P.bfs_order.push_back(y);
    }
  }
  ensure(P.bfs_order.size() == N, ErrorCode::Internal, "generating set does not generate");
  for (std::size_t e = 0; e < N * k; ++e)
    if (!tree_edge[e]) P.schreier[e] = static_cast<std::int64_t>(P.num_schreier++);
  const std::size_t S = P.num_schreier;
  if (S == 0) return P;

  // path vector: Schreier generators met when following w_h from coset g
  auto add_path = [&](std::vector<std::int64_t>& row, Elem g, Elem h, std::int64_t sign) {
    std::vector<std::pair<Elem, std::size_t>> letters;
    for (Elem c = h; c != 0; c = P.parent[c]) letters.emplace_back(P.parent[c], P.parent_gen[c]);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      std::int64_t s = P.edge(G->mul(g, it->first), it->second);
      if (s >= 0) row[static_cast<std::size_t>(s)] += sign;
    }
  };
  std::vector<std::vector<std::int64_t>> rels;
  rels.reserve(S * k);
  for (Elem t = 0; t < N; ++t)
    for (std::size_t i = 0; i < k; ++i) {
      std::int64_t s = P.edge(t, i);
      if (s < 0) continue;
      Elem y = G->mul(t, P.gens[i]);
      for (std::size_t j = 0; j < k; ++j) {
        Elem x = P.gens[j];
        std::vector<std::int64_t> row(S, 0);
        // x * w_t * x_i * w_y^{-1} * x^{-1}, rewritten from the base coset
        add_path(row, x, t, +1);
        std::int64_t mid = P.edge(G->mul(x, t), i);
        if (mid >= 0) row[static_cast<std::size_t>(mid)] += 1;
        add_path(row, x, y, -1);
        row[static_cast<std::size_t>(s)] -= 1;
        bool nonzero = false;
        for (auto v : row) nonzero = nonzero || v != 0;
        if (nonzero) rels.push_back(std::move(row));
      }
    }
  IntMatrix R = rels.empty() ? IntMatrix(1, S) : IntMatrix::from_rows(rels);
  SmithOptions opts;
  opts.track_u = false;
  opts.track_v = true;
  opts.track_v_inverse = true;
  SmithDecomposition snf = smith_normal_form(R, opts);
  P.factors.assign(S, 0);
  for (std::size_t j = 0; j < S && j < snf.diagonal.size(); ++j) P.factors[j] = to_i64(snf.diagonal[j]);
  P.V = std::move(snf.V);
  P.V_inv = std::move(snf.V_inv);
  ensure(P.free_columns().size() == k, ErrorCode::Internal, "R/[F,R] has unexpected free rank");
  return P;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Schur multiplier

class SchurMultiplier {
 public:
  const GroupPtr& group() const { return pres_.group; }
  /// Invariant factors d_1 | d_2 | ... (all > 1); empty means trivial.
  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::int64_t order() const {
    std::int64_t o = 1;
    for (auto d : factors_) o *= d;
    return o;
  }
  /// Representative cocycles (modulus |G|), one per invariant factor.
  const std::vector<TwoCocycle>& section() const { return section_; }

  /// Canonical coordinates (mod d_i) of the class of a normalized cocycle.
  std::vector<std::int64_t> coordinates(const TwoCocycle& a) const {
    require_same_group(a.group, group(), "class coordinates");
    std::vector<std::int64_t> out(factors_.size(), 0);
    if (factors_.empty()) return out;
    const std::int64_t m = a.modulus;
    std::vector<std::int64_t> f = pres_.evaluate_schreier(a);
    auto tors = pres_.torsion_columns();
    for (std::size_t i = 0; i < tors.size(); ++i) {
      const std::size_t row = tors[i];
      Int acc = 0;
      for (std::size_t s = 0; s < pres_.num_schreier; ++s)
        if (f[s] != 0) acc += pres_.V_inv(row, s) * Int(static_cast<long>(f[s]));
      Int val;
      mpz_fdiv_r_ui(val.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(m));
      // f(g_i) / m lies in (1/d_i) Z / Z
      Int scaled = val * Int(static_cast<long>(factors_[i]));
      Int q, r;
      mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(m));
      ensure(r == 0, ErrorCode::Internal, "central evaluation has order not dividing the invariant factor");
      out[i] = floor_mod(to_i64(q), factors_[i]);
    }
    return out;
  }

  /// A cocycle of modulus n whose class has the given coordinates; n must be
  /// a multiple of every invariant factor (default |G|).
  TwoCocycle cocycle_from_coordinates(const std::vector<std::int64_t>& coords, std::int64_t n = 0) const {
    if (n == 0) n = static_cast<std::int64_t>(group()->order());
    ensure(coords.size() == factors_.size(), ErrorCode::InvalidSpec,
           "expected " + std::to_string(factors_.size()) + " class coordinates");
    std::vector<std::int64_t> phi(pres_.num_schreier, 0);
    auto tors = pres_.torsion_columns();
    for (std::size_t i = 0; i < tors.size(); ++i) {
      ensure(n % factors_[i] == 0, ErrorCode::ModulusMismatch, "modulus is not a multiple of the invariant factor");
      std::int64_t c = floor_mod(coords[i], factors_[i]);
      if (c == 0) continue;
      auto col = pres_.column_functional(tors[i], (n / factors_[i]) * c, n);
      for (std::size_t s = 0; s < phi.size(); ++s) phi[s] = floor_mod(phi[s] + col[s], n);
    }
    return pres_.cocycle_from_phi(phi, n);
  }

  const detail::HopfPresentation& presentation() const { return pres_; }

  static SchurMultiplier compute(const GroupPtr& G) {
    SchurMultiplier M;
    M.pres_ = detail::hopf_presentation(G);
    for (auto j : M.pres_.torsion_columns()) M.factors_.push_back(M.pres_.factors[j]);
    const std::int64_t n = static_cast<std::int64_t>(G->order());
    for (std::size_t i = 0; i < M.factors_.size(); ++i) {
      std::vector<std::int64_t> coords(M.factors_.size(), 0);
      coords[i] = 1;
      M.section_.push_back(M.cocycle_from_coordinates(coords, n));
    }
    return M;
  }

 private:
  detail::HopfPresentation pres_;
  std::vector<std::int64_t> factors_;
  std::vector<TwoCocycle> section_;
};

inline SchurMultiplier schur_multiplier(const GroupPtr& G, std::size_t max_order = 48) {
  ensure(G->order() <= max_order, ErrorCode::SizeBound,
         "schur_multiplier guard: |G| = " + std::to_string(G->order()) + " > " + std::to_string(max_order));
  return SchurMultiplier::compute(G);
}

/// "C2 x C2" style rendering; "1" for the trivial group.
inline std::string format_invariant_factors(const std::vector<std::int64_t>& d) {
  if (d.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? " x C" : "C") << d[i];
  return os.str();
}

// ---------------------------------------------------------------------------
// Classes

struct CohomClass {
  GroupPtr group;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> coordinates;
  std::vector<std::int64_t> invariant_factors;
  TwoCocycle representative;

  bool is_trivial() const {
    for (auto c : coordinates)
      if (c != 0) return false;
    return true;
  }
  friend bool operator==(const CohomClass& a, const CohomClass& b) {
    return same_group(a.group, b.group) && a.coordinates == b.coordinates;
  }
};

inline CohomClass class_of(const TwoCocycle& a, const SchurMultiplier& M) {
  require_cocycle(a);
  return {a.group, a.modulus, M.coordinates(a), M.invariant_factors(), a};
}

inline CohomClass class_from_coordinates(const SchurMultiplier& M, const std::vector<std::int64_t>& coords) {
  TwoCocycle rep = M.cocycle_from_coordinates(coords);
  std::vector<std::int64_t> c(coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = floor_mod(coords[i], M.invariant_factors()[i]);
  return {M.group(), rep.modulus, c, M.invariant_factors(), rep};
}

inline CohomClass class_mul(const CohomClass& a, const CohomClass& b, const SchurMultiplier& M) {
  require_same_group(a.group, b.group, "class product");
  return class_of(cocycle_mul(a.representative, b.representative), M);
}

inline CohomClass class_inv(const CohomClass& a, const SchurMultiplier& M) {
  return class_of(cocycle_inverse(a.representative), M);
}

inline CohomClass class_pow(const CohomClass& a, std::int64_t k, const SchurMultiplier& M) {
  return class_of(cocycle_pow(a.representative, k), M);
}

/// Order of a class in H^2(G, C^x).
inline std::int64_t class_order(const CohomClass& a) {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < a.coordinates.size(); ++i) {
    std::int64_t d = a.invariant_factors[i];
    o = lcm64(o, d / std::gcd(a.coordinates[i], d));
  }
  return o;
}

// ---------------------------------------------------------------------------
// Coboundary equivalence

struct CoboundaryWitness {
  std::int64_t modulus;             // N = n * exp(G^ab); delta takes values in mu_N
  std::vector<std::int64_t> delta;  // delta[0] = 0
};

/// Witness delta with d(rho sigma) + e_alpha = d(rho) + d(sigma) + e_beta, with
/// exponents lifted to mu_N; nullopt when the classes differ in H^2(G, C^x).
inline std::optional<CoboundaryWitness> is_cohomologous(const TwoCocycle& a, const TwoCocycle& b) {
  require_same_group(a.group, b.group, "is_cohomologous");
  ensure(a.modulus == b.modulus, ErrorCode::ModulusMismatch,
         "moduli differ: " + std::to_string(a.modulus) + " vs " + std::to_string(b.modulus));
  const GroupPtr& G = a.group;
  const std::size_t n = G->order();
  const std::int64_t N = a.modulus * abelianization(G).exponent();
  const std::int64_t scale = N / a.modulus;
  CoboundaryWitness w{N, std::vector<std::int64_t>(n, 0)};
  if (n == 1) return w;
  const std::size_t m = n - 1;
  ModMatrix A(N, m * m, m);
  std::vector<std::int64_t> rhs(m * m, 0);
  for (Elem r = 1; r < n; ++r)
    for (Elem s = 1; s < n; ++s) {
      const std::size_t row = (r - 1) * m + (s - 1);
      A(row, r - 1) = floor_mod(A(row, r - 1) + 1, N);
      A(row, s - 1) = floor_mod(A(row, s - 1) + 1, N);
      Elem rs = G->mul(r, s);
      if (rs != 0) A(row, rs - 1) = floor_mod(A(row, rs - 1) - 1, N);
      rhs[row] = floor_mod((a.at(r, s) - b.at(r, s)) * scale, N);
    }
  auto sol = solve_mod(A, rhs);
  if (!sol) return std::nullopt;
  for (std::size_t i = 0; i < m; ++i) w.delta[i + 1] = sol->particular[i];
  return w;
}

// ---------------------------------------------------------------------------
// Cocycle space

/// Howell-form basis of normalized Z^2(G, Z/n) over the |G|^2 table coordinates:
/// the span of B^2 and the cocycles induced from Hom(R/[F,R], Z/n).
inline ModMatrix cocycle_space(const GroupPtr& G, std::int64_t n) {
  ensure(n >= 1, ErrorCode::InvalidSpec, "modulus must be positive");
  const std::size_t N = G->order();
  ensure(N * N <= 4096, ErrorCode::SizeBound, "cocycle_space limited to |G|^2 <= 4096");
  std::vector<std::vector<std::int64_t>> rows;
  for (Elem g = 1; g < N; ++g) {
    std::vector<std::int64_t> delta(N, 0);
    delta[g] = 1;
    rows.push_back(coboundary(G, n, delta).table);
  }
  if (N > 1) {
    detail::HopfPresentation P = detail::hopf_presentation(G);
    for (std::size_t j = 0; j < P.factors.size(); ++j) {
      std::int64_t d = P.factors[j];
      if (d == 1) continue;
      std::int64_t scale = d == 0 ? 1 : n / std::gcd(d, n);
      if (scale % n == 0) continue;
      rows.push_back(P.cocycle_from_phi(P.column_functional(j, scale, n), n).table);
    }
  }
  return howell_form(ModMatrix::from_rows(n, rows, N * N));
}

/// Cocycle from one row of a cocycle-space matrix.
inline TwoCocycle cocycle_from_row(const GroupPtr& G, const ModMatrix& space, std::size_t row) {
  return {G, space.modulus(), space.row(row)};
}

/// Central-type pairing cocycle on C_p x C_p (product numbering a*p + b):
/// alpha((a,b),(c,d)) = b*c mod p.
inline TwoCocycle pairing_cocycle(const GroupPtr& G, std::int64_t p) {
  ensure(static_cast<std::int64_t>(G->order()) == p * p && G->is_abelian(), ErrorCode::InvalidSpec,
         "pairing cocycle expects C_p x C_p");
  TwoCocycle a = trivial_cocycle(G, p);
  for (Elem x = 0; x < G->order(); ++x)
    for (Elem y = 0; y < G->order(); ++y) a.at(x, y) = (static_cast<std::int64_t>(x) % p) * (y / p) % p;
  require_cocycle(a);
  return a;
}

}  // namespace motivelab
