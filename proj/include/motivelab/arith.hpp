#pragma once

// Integer helpers, dense integer matrices and Smith normal form.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "motivelab/error.hpp"

namespace motivelab {

using Int = mpz_class;
using Rational = mpq_class;

inline std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % n);
}

/// Returns g = gcd(a, b) >= 0 together with s, t such that s*a + t*b = g.
inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

/// Inverse of a modulo n, or 0 when a is not a unit (n > 1).
inline std::int64_t inv_mod(std::int64_t a, std::int64_t n) {
  std::int64_t s = 0, t = 0;
  std::int64_t g = ext_gcd(floor_mod(a, n), n, s, t);
  if (g != 1) return 0;
  return floor_mod(s, n);
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t n) {
  std::int64_t result = 1 % n;
  base = floor_mod(base, n);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return result;
}

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

inline std::int64_t to_i64(const Int& v) {
  ensure(v.fits_slong_p(), ErrorCode::Internal, "integer does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ensure(rows[i].size() == c, ErrorCode::InvalidSpec, "ragged integer matrix");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    ensure(a.cols_ == b.rows_, ErrorCode::InvalidSpec, "matrix product dimension mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Int& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += q * row[src]
  void add_row(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(src, j) != 0) (*this)(dst, j) += q * (*this)(src, j);
  }
  /// col[dst] += q * col[src]
  void add_col(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows_; ++i)
      if ((*this)(i, src) != 0) (*this)(i, dst) += q * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

struct SmithDecomposition {
  /// min(rows, cols) entries, each >= 0, d[i] | d[i+1] (zeros last).
  std::vector<Int> diagonal;
  IntMatrix U;      // rows x rows, unimodular
  IntMatrix V;      // cols x cols, unimodular, U*A*V = diag
  IntMatrix V_inv;  // inverse of V, only filled when requested
};

struct SmithOptions {
  bool track_u = true;
  bool track_v = true;
  bool track_v_inverse = false;
  std::size_t max_dim = 5000;
};

/// Smith normal form with explicit unimodular transforms.
inline SmithDecomposition smith_normal_form(const IntMatrix& A, SmithOptions opts = {}) {
  ensure(A.rows() <= opts.max_dim && A.cols() <= opts.max_dim, ErrorCode::SizeBound,
         "smith_normal_form limited to " + std::to_string(opts.max_dim) + "x" + std::to_string(opts.max_dim));
  const std::size_t r = A.rows(), c = A.cols();
  IntMatrix D = A;
  SmithDecomposition out;
  if (opts.track_u) out.U = IntMatrix::identity(r);
  if (opts.track_v) out.V = IntMatrix::identity(c);
  if (opts.track_v_inverse) out.V_inv = IntMatrix::identity(c);

  auto row_add = [&](std::size_t dst, std::size_t src, const Int& q) {
    D.add_row(dst, src, q);
    if (opts.track_u) out.U.add_row(dst, src, q);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Int& q) {
    D.add_col(dst, src, q);
    if (opts.track_v) out.V.add_col(dst, src, q);
    if (opts.track_v_inverse) out.V_inv.add_row(src, dst, -q);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    if (opts.track_u) out.U.swap_rows(a, b);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    if (opts.track_v) out.V.swap_cols(a, b);
    if (opts.track_v_inverse) out.V_inv.swap_rows(a, b);
  };

  const std::size_t steps = std::min(r, c);
  for (std::size_t t = 0; t < steps; ++t) {
    // pivot: smallest nonzero magnitude in the trailing block
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        const Int& v = D(i, j);
        if (v == 0) continue;
        Int a = abs(v);
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
          if (best == 1) goto pivot_found;
        }
      }
  pivot_found:
    if (!found) break;
    row_swap(t, pi);
    col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (D(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        row_add(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (D(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        col_add(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        // move the smallest remainder on the pivot cross into the pivot slot
        std::size_t bi = t, bj = t;
        Int b = abs(D(t, t));
        for (std::size_t i = t + 1; i < r; ++i)
          if (D(i, t) != 0 && abs(D(i, t)) < b) {
            b = abs(D(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < c; ++j)
          if (D(t, j) != 0 && abs(D(t, j)) < b) {
            b = abs(D(t, j));
            bi = t;
            bj = j;
          }
        row_swap(t, bi);
        col_swap(t, bj);
        continue;
      }
      // divisibility: every trailing entry must be a multiple of the pivot
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j) {
          if (D(i, j) == 0) continue;
          Int rem;
          mpz_fdiv_r(rem.get_mpz_t(), D(i, j).get_mpz_t(), D(t, t).get_mpz_t());
          if (rem != 0) {
            row_add(t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      if (opts.track_u) out.U.negate_row(t);
    }
  }

  out.diagonal.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal[t] = D(t, t);
  return out;
}

/// Finite abelian group Z^r / rowspace(relations), as invariant factors plus a
/// coordinate map v -> (v*V)_i mod d_i on the non-trivial factors.
struct AbelianPresentation {
  std::vector<std::int64_t> invariant_factors;  // all > 1; a 0 marks a free summand
  std::vector<std::size_t> factor_columns;      // column of V feeding each factor
  IntMatrix V;
  IntMatrix V_inv;

  std::vector<std::int64_t> coordinates(const std::vector<std::int64_t>& v) const {
    std::vector<std::int64_t> out(invariant_factors.size(), 0);
    for (std::size_t f = 0; f < invariant_factors.size(); ++f) {
      Int acc = 0;
      std::size_t col = factor_columns[f];
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) acc += Int(static_cast<long>(v[k])) * V(k, col);
      std::int64_t d = invariant_factors[f];
      if (d == 0) {
        out[f] = to_i64(acc);
      } else {
        Int rem;
        mpz_fdiv_r_ui(rem.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(d));
        out[f] = rem.get_si();
      }
    }
    return out;
  }
};

inline AbelianPresentation abelian_presentation(const IntMatrix& relations, std::size_t generators,
                                                bool want_inverse = false) {
  AbelianPresentation out;
  IntMatrix rel = relations;
  if (rel.rows() == 0) rel = IntMatrix(1, generators);
  SmithOptions opts;
  opts.track_u = false;
  opts.track_v = true;
  opts.track_v_inverse = want_inverse;
  opts.max_dim = std::max<std::size_t>(5000, std::max(rel.rows(), rel.cols()));
  SmithDecomposition snf = smith_normal_form(rel, opts);
  for (std::size_t j = 0; j < generators; ++j) {
    Int d = j < snf.diagonal.size() ? snf.diagonal[j] : Int(0);
    if (d == 1) continue;
    out.invariant_factors.push_back(to_i64(d));
    out.factor_columns.push_back(j);
  }
  out.V = std::move(snf.V);
  out.V_inv = std::move(snf.V_inv);
  return out;
}

}  // namespace motivelab
