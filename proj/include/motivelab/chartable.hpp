#pragma once

// Character tables over C by Dixon's modular method: common eigenvectors of
// the class-sum multiplication matrices over F_p, lifted to Q(zeta_e) through
// eigenvalue multiplicities.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "motivelab/cyclotomic.hpp"
#include "motivelab/group.hpp"

namespace motivelab {

namespace detail {

using FpVec = std::vector<std::int64_t>;
using FpMat = std::vector<FpVec>;  // row-major

/// Row-reduced echelon form in place over F_p; returns pivot columns.
inline std::vector<std::size_t> fp_rref(FpMat& rows, std::int64_t p) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    std::int64_t inv = inv_mod(rows[r][c], p);
    for (auto& x : rows[r]) x = mul_mod(x, inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::int64_t f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = floor_mod(rows[i][j] - mul_mod(f, rows[r][j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

/// Basis (as rows) of the null space {x : M x = 0} of a square matrix.
inline FpMat fp_nullspace(FpMat M, std::int64_t p) {
  const std::size_t n = M.empty() ? 0 : M.front().size();
  auto pivots = fp_rref(M, p);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  FpMat basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    FpVec v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = floor_mod(-M[i][f], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Characteristic polynomial (ascending coefficients) via Hessenberg reduction.
inline FpVec fp_charpoly(FpMat H, std::int64_t p) {
  const std::size_t n = H.size();
  for (std::size_t m = 1; m < n; ++m) {
    std::size_t i = m;
    while (i < n && H[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(H[i], H[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(H[r][i], H[r][m]);
    }
    std::int64_t inv = inv_mod(H[m][m - 1], p);
    for (std::size_t j = m + 1; j < n; ++j) {
      if (H[j][m - 1] == 0) continue;
      std::int64_t u = mul_mod(H[j][m - 1], inv, p);
      for (std::size_t c = 0; c < n; ++c) H[j][c] = floor_mod(H[j][c] - mul_mod(u, H[m][c], p), p);
      for (std::size_t r = 0; r < n; ++r) H[r][m] = floor_mod(H[r][m] + mul_mod(u, H[r][j], p), p);
    }
  }
  // p_m(x) = (x - h_mm) p_{m-1} - sum_{i<m} h_im * prod_{j=i+1..m} h_{j,j-1} * p_{i-1}
  std::vector<FpVec> P(n + 1);
  P[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    FpVec cur(m + 1, 0);
    const FpVec& prev = P[m - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = floor_mod(cur[d + 1] + prev[d], p);
      cur[d] = floor_mod(cur[d] - mul_mod(H[m - 1][m - 1], prev[d], p), p);
    }
    std::int64_t t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = mul_mod(t, H[i][i - 1], p);
      std::int64_t coef = mul_mod(H[i - 1][m - 1], t, p);
      if (coef != 0)
        for (std::size_t d = 0; d < P[i - 1].size(); ++d)
          cur[d] = floor_mod(cur[d] - mul_mod(coef, P[i - 1][d], p), p);
    }
    P[m] = std::move(cur);
  }
  return P[n];
}

inline std::int64_t fp_primitive_root(std::int64_t p) {
  auto factors = prime_factors(p - 1);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors) ok = ok && pow_mod(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
  return 1;
}

}  // namespace detail

struct CharacterTable {
  GroupPtr group;
  std::int64_t exponent = 1;
  std::int64_t prime = 2;                       // Dixon prime
  std::vector<std::int64_t> class_sizes;
  std::vector<std::size_t> inverse_class;       // class of g^{-1}
  std::vector<std::int64_t> degrees;
  std::vector<std::vector<Cyclotomic>> values;  // [irrep][class]

  std::size_t size() const { return degrees.size(); }
  std::int64_t order() const { return static_cast<std::int64_t>(group->order()); }

  /// <f, chi_i> = (1/|G|) sum_c |c| f(c) conj(chi_i(c)).
  Cyclotomic inner_with_irrep(const std::vector<Cyclotomic>& f, std::size_t i) const {
    Cyclotomic acc(exponent);
    for (std::size_t c = 0; c < f.size(); ++c) {
      if (f[c].is_zero()) continue;
      acc += f[c] * values[i][inverse_class[c]] * Rational(class_sizes[c]);
    }
    return acc * Rational(1, order());
  }
};

using CharacterTablePtr = std::shared_ptr<const CharacterTable>;

namespace detail {

inline std::int64_t dixon_prime(std::int64_t exponent, std::int64_t order) {
  for (std::int64_t p = exponent + 1; p < 1000000; p += exponent)
    if (is_prime(p) && p * p > 4 * order) return p;
  fail(ErrorCode::PrimeSearchFailed, "no prime p = 1 mod " + std::to_string(exponent) + " below 10^6");
}

/// Common eigenvectors of the class matrices over F_p, normalized so that the
/// identity-class entry is 1.
inline FpMat common_eigenvectors(const std::vector<FpMat>& A, std::int64_t p, std::uint64_t seed) {
  const std::size_t k = A.size();
  std::vector<FpMat> ops;
  {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> pick(0, p - 1);
    FpMat mix(k, FpVec(k, 0));
    for (std::size_t j = 0; j < k; ++j) {
      std::int64_t r = pick(rng);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) mix[a][b] = floor_mod(mix[a][b] + mul_mod(r, A[j][a][b], p), p);
    }
    ops.push_back(std::move(mix));
    for (const auto& m : A) ops.push_back(m);
  }
  FpMat identity(k, FpVec(k, 0));
  for (std::size_t i = 0; i < k; ++i) identity[i][i] = 1;
  std::vector<FpMat> spaces{identity};  // each space: RREF basis rows
  for (const FpMat& M : ops) {
    bool all_lines = true;
    for (const auto& W : spaces) all_lines = all_lines && W.size() == 1;
    if (all_lines) break;
    std::vector<FpMat> next;
    for (FpMat& W : spaces) {
      const std::size_t d = W.size();
      if (d == 1) {
        next.push_back(std::move(W));
        continue;
      }
      std::vector<std::size_t> piv(d);
      for (std::size_t i = 0; i < d; ++i) {
        std::size_t c = 0;
        while (W[i][c] == 0) ++c;
        piv[i] = c;
      }
      // restriction R with M w_j = sum_i R[i][j] w_i
      FpMat R(d, FpVec(d, 0));
      for (std::size_t j = 0; j < d; ++j) {
        FpVec img(k, 0);
        for (std::size_t a = 0; a < k; ++a) {
          std::int64_t acc = 0;
          for (std::size_t b = 0; b < k; ++b)
            if (W[j][b] != 0 && M[a][b] != 0) acc = floor_mod(acc + mul_mod(M[a][b], W[j][b], p), p);
          img[a] = acc;
        }
        for (std::size_t i = 0; i < d; ++i) R[i][j] = img[piv[i]];
      }
      FpVec chi = fp_charpoly(R, p);
      std::size_t found = 0;
      std::vector<FpMat> pieces;
      for (std::int64_t lambda = 0; lambda < p && found < d; ++lambda) {
        std::int64_t v = 0;
        for (std::size_t t = chi.size(); t-- > 0;) v = floor_mod(mul_mod(v, lambda, p) + chi[t], p);
        if (v != 0) continue;
        FpMat shifted = R;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = floor_mod(shifted[i][i] - lambda, p);
        FpMat ker = fp_nullspace(shifted, p);
        FpMat sub;
        for (const auto& coeff : ker) {
          FpVec w(k, 0);
          for (std::size_t i = 0; i < d; ++i)
            if (coeff[i] != 0)
              for (std::size_t c = 0; c < k; ++c) w[c] = floor_mod(w[c] + mul_mod(coeff[i], W[i][c], p), p);
          sub.push_back(std::move(w));
        }
        fp_rref(sub, p);
        found += sub.size();
        pieces.push_back(std::move(sub));
      }
      ensure(found == d, ErrorCode::Internal, "class matrix is not diagonalizable over F_p");
      for (auto& s : pieces) next.push_back(std::move(s));
    }
    spaces = std::move(next);
  }
  FpMat out;
  for (auto& W : spaces) {
    ensure(W.size() == 1, ErrorCode::Internal, "class matrices failed to separate characters");
    FpVec w = W.front();
    ensure(w[0] != 0, ErrorCode::Internal, "central character vanishes on the identity");
    std::int64_t inv = inv_mod(w[0], p);
    for (auto& x : w) x = mul_mod(x, inv, p);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace detail

/// Dixon's algorithm. The seed only affects intermediate splitting; the
/// output is canonically sorted (degree, trivial row first, then values
/// in decreasing lexicographic order).
inline CharacterTablePtr compute_character_table(const GroupPtr& G, std::uint64_t seed = 0) {
  auto T = std::make_shared<CharacterTable>();
  T->group = G;
  const std::size_t k = G->num_classes();
  const std::int64_t order = static_cast<std::int64_t>(G->order());
  T->exponent = G->exponent();
  const std::int64_t e = T->exponent;
  const std::int64_t p = detail::dixon_prime(e, order);
  T->prime = p;
  const auto& classes = G->classes();
  for (const auto& c : classes) T->class_sizes.push_back(static_cast<std::int64_t>(c.members.size()));
  T->inverse_class.resize(k);
  for (std::size_t i = 0; i < k; ++i) T->inverse_class[i] = G->class_index(G->inv(classes[i].representative));

  // class matrices (A_j)[i][l] = #{(x, y) in C_j x C_i : x y = z_l}
  std::vector<detail::FpMat> A(k, detail::FpMat(k, detail::FpVec(k, 0)));
  for (std::size_t l = 0; l < k; ++l) {
    Elem z = classes[l].representative;
    for (Elem x = 0; x < G->order(); ++x) {
      Elem y = G->mul(G->inv(x), z);
      auto& cell = A[G->class_index(x)][G->class_index(y)][l];
      cell = (cell + 1) % p;
    }
  }
  detail::FpMat omegas = detail::common_eigenvectors(A, p, seed);
  ensure(omegas.size() == k, ErrorCode::Internal, "Dixon produced the wrong number of characters");

  const std::int64_t z = pow_mod(detail::fp_primitive_root(p), (p - 1) / e, p);  // zeta_e in F_p
  // classes of powers of representatives
  std::vector<std::vector<std::size_t>> power_class(k);
  for (std::size_t i = 0; i < k; ++i) {
    Elem g = classes[i].representative;
    std::size_t o = G->element_order(g);
    Elem x = 0;
    for (std::size_t l = 0; l < o; ++l) {
      power_class[i].push_back(G->class_index(x));
      x = G->mul(x, g);
    }
  }

  struct Row {
    std::int64_t degree;
    std::vector<Cyclotomic> values;
  };
  std::vector<Row> rows;
  for (const auto& w : omegas) {
    // d^2 = |G| / sum_i w_i w_{i'} / |C_i|
    std::int64_t s = 0;
    for (std::size_t i = 0; i < k; ++i)
      s = floor_mod(s + mul_mod(mul_mod(w[i], w[T->inverse_class[i]], p), inv_mod(T->class_sizes[i] % p, p), p), p);
    ensure(s != 0, ErrorCode::Internal, "degenerate norm in Dixon lift");
    std::int64_t d2 = mul_mod(order % p, inv_mod(s, p), p);
    std::int64_t d = 0;
    for (std::int64_t c = 1; c * c <= order; ++c)
      if (mul_mod(c, c, p) == d2) {
        d = c;
        break;
      }
    ensure(d > 0, ErrorCode::Internal, "no degree found for a central character");
    detail::FpVec chi(k);
    for (std::size_t i = 0; i < k; ++i) chi[i] = mul_mod(mul_mod(w[i], d, p), inv_mod(T->class_sizes[i] % p, p), p);

    Row row{d, {}};
    for (std::size_t i = 0; i < k; ++i) {
      const auto& pc = power_class[i];
      const std::int64_t o = static_cast<std::int64_t>(pc.size());
      const std::int64_t zo = pow_mod(z, e / o, p);  // image of zeta_o
      Cyclotomic val(e);
      std::int64_t total = 0;
      for (std::int64_t t = 0; t < o; ++t) {
        // m_t = (1/o) sum_l chi(g^l) zeta_o^{-t l}
        std::int64_t acc = 0;
        for (std::int64_t l = 0; l < o; ++l)
          acc = floor_mod(acc + mul_mod(chi[pc[static_cast<std::size_t>(l)]], pow_mod(zo, floor_mod(-t * l, o), p), p),
                          p);
        std::int64_t m = mul_mod(acc, inv_mod(o % p, p), p);
        ensure(m <= d, ErrorCode::Internal, "eigenvalue multiplicity exceeds the degree");
        total += m;
        if (m != 0) val += Cyclotomic::root(e, t * (e / o)) * Rational(m);
      }
      ensure(total == d, ErrorCode::Internal, "eigenvalue multiplicities do not sum to the degree");
      row.values.push_back(std::move(val));
    }
    rows.push_back(std::move(row));
  }

  auto is_trivial = [](const Row& r) {
    for (const auto& v : r.values)
      if (!(v == Cyclotomic::one())) return false;
    return true;
  };
  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
      int c = compare(a.values[i], b.values[i]);
      if (c != 0) return c > 0;
    }
    return false;
  });
  for (auto& r : rows) {
    T->degrees.push_back(r.degree);
    T->values.push_back(std::move(r.values));
  }

  // exact row orthogonality and degree sum
  std::int64_t sum_sq = 0;
  for (auto d : T->degrees) sum_sq += d * d;
  ensure(sum_sq == order, ErrorCode::Internal, "sum of squared degrees differs from |G|");
  ensure(is_trivial(Row{T->degrees[0], T->values[0]}), ErrorCode::Internal, "first row is not the trivial character");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Cyclotomic ip = T->inner_with_irrep(T->values[i], j);
      ensure(ip == Cyclotomic::rational(i == j ? 1 : 0), ErrorCode::Internal, "row orthogonality fails");
    }
  return T;
}

/// Memoized character table keyed by the group's Cayley table.
inline CharacterTablePtr character_table(const GroupPtr& G) {
  static std::mutex mu;
  static std::vector<CharacterTablePtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& t : cache)
      if (same_group(t->group, G)) return t;
  }
  CharacterTablePtr t = compute_character_table(G, 0);
  std::lock_guard<std::mutex> lock(mu);
  cache.push_back(t);
  return t;
}

/// Exact column orthogonality: sum_chi chi(c) conj(chi(c')) = delta |C_G(c)|.
inline bool column_orthogonality_holds(const CharacterTable& T) {
  const std::size_t k = T.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Cyclotomic acc(T.exponent);
      for (std::size_t i = 0; i < k; ++i) acc += T.values[i][a] * T.values[i][T.inverse_class[b]];
      Rational expected = a == b ? Rational(T.order() / T.class_sizes[a]) : Rational(0);
      if (!(acc == Cyclotomic::rational(expected))) return false;
    }
  return true;
}

}  // namespace motivelab
