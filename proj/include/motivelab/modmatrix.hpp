#pragma once

// Linear algebra over Z/n: Howell normal form, row-space membership and
// solving A x = b.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motivelab/arith.hpp"

namespace motivelab {

class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::int64_t modulus, std::size_t rows, std::size_t cols)
      : n_(modulus), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    ensure(modulus >= 1, ErrorCode::InvalidSpec, "modulus must be positive");
  }

  static ModMatrix from_rows(std::int64_t modulus, const std::vector<std::vector<std::int64_t>>& rows,
                             std::size_t cols) {
    ModMatrix m(modulus, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ensure(rows[i].size() == cols, ErrorCode::InvalidSpec, "ragged matrix");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = floor_mod(rows[i][j], modulus);
    }
    return m;
  }

  static ModMatrix identity(std::int64_t modulus, std::size_t n) {
    ModMatrix m(modulus, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % modulus;
    return m;
  }

  std::int64_t modulus() const { return n_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::int64_t> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  ModMatrix transpose() const {
    ModMatrix t(n_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& x) const {
    ensure(x.size() == cols_, ErrorCode::InvalidSpec, "vector length mismatch");
    std::vector<std::int64_t> y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0) acc = floor_mod(acc + mul_mod((*this)(i, j), floor_mod(x[j], n_), n_), n_);
      y[i] = acc;
    }
    return y;
  }

  bool is_zero() const {
    for (auto v : data_)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::int64_t n_ = 1;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> data_;
};

namespace detail {

using ModRow = std::vector<std::int64_t>;

/// A unit u modulo n with u*a == gcd(a, n) (mod n).
inline std::int64_t normalizing_unit(std::int64_t a, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t g = std::gcd(a, n);
  std::int64_t m = n / g;
  std::int64_t w = (a / g) % m;
  std::int64_t base = m == 1 ? 1 : inv_mod(w, m);
  for (std::int64_t k = 0;; ++k) {
    std::int64_t u = base + k * m;
    if (std::gcd(u, n) == 1) return floor_mod(u, n);
  }
}

struct HowellResult {
  std::vector<ModRow> rows;       // in Howell form
  std::vector<std::size_t> pivots;  // pivot column for each row
};

/// Howell form of the rows (Storjohann–Mulders style: unimodular 2x2 row
/// combinations, pivots normalised to divisors of n, and the annihilator
/// multiple (n/p)*row re-inserted so the result spans every leading-zero
/// sub-lattice).
inline HowellResult howell(std::vector<ModRow> work, std::size_t cols, std::int64_t n) {
  HowellResult out;
  if (n == 1) return out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < work.size(); ++c) {
    for (std::size_t i = r + 1; i < work.size(); ++i) {
      if (work[i][c] == 0) continue;
      std::int64_t a = work[r][c], b = work[i][c];
      if (a == 0) {
        std::swap(work[r], work[i]);
        continue;
      }
      std::int64_t s = 0, t = 0;
      std::int64_t g = ext_gcd(a, b, s, t);
      std::int64_t u = -(b / g), v = a / g;
      ModRow& R = work[r];
      ModRow& I = work[i];
      for (std::size_t j = c; j < cols; ++j) {
        std::int64_t x = R[j], y = I[j];
        if (x == 0 && y == 0) continue;
        R[j] = floor_mod(mul_mod(floor_mod(s, n), x, n) + mul_mod(floor_mod(t, n), y, n), n);
        I[j] = floor_mod(mul_mod(floor_mod(u, n), x, n) + mul_mod(floor_mod(v, n), y, n), n);
      }
    }
    if (work[r][c] == 0) continue;
    std::int64_t unit = normalizing_unit(work[r][c], n);
    for (std::size_t j = c; j < cols; ++j) work[r][j] = mul_mod(work[r][j], unit, n);
    std::int64_t p = work[r][c];
    // reduce entries above the pivot into [0, p)
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t q = work[i][c] / p;
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        work[i][j] = floor_mod(work[i][j] - mul_mod(q, work[r][j], n), n);
    }
    // annihilator multiple: zero in column c, possibly nonzero further right
    std::int64_t ann = n / p;
    if (ann != n) {
      ModRow extra(cols, 0);
      bool nonzero = false;
      for (std::size_t j = c + 1; j < cols; ++j) {
        extra[j] = mul_mod(ann, work[r][j], n);
        nonzero = nonzero || extra[j] != 0;
      }
      if (nonzero) work.push_back(std::move(extra));
    }
    out.pivots.push_back(c);
    ++r;
  }
  work.resize(r);
  out.rows = std::move(work);
  return out;
}

}  // namespace detail

/// Canonical Howell form; zero rows are dropped.
inline ModMatrix howell_form(const ModMatrix& M) {
  std::vector<detail::ModRow> rows;
  rows.reserve(M.rows());
  for (std::size_t i = 0; i < M.rows(); ++i) rows.push_back(M.row(i));
  auto h = detail::howell(std::move(rows), M.cols(), M.modulus());
  return ModMatrix::from_rows(M.modulus(), h.rows, M.cols());
}

/// Reduce v against a matrix already in Howell form; the result is zero iff v
/// lies in the row space.
inline std::vector<std::int64_t> howell_reduce(const ModMatrix& H, std::vector<std::int64_t> v) {
  const std::int64_t n = H.modulus();
  for (auto& x : v) x = floor_mod(x, n);
  for (std::size_t i = 0; i < H.rows(); ++i) {
    std::size_t c = 0;
    while (c < H.cols() && H(i, c) == 0) ++c;
    if (c == H.cols()) continue;
    std::int64_t q = v[c] / H(i, c);
    if (q == 0) continue;
    for (std::size_t j = c; j < H.cols(); ++j) v[j] = floor_mod(v[j] - mul_mod(q, H(i, j), n), n);
  }
  return v;
}

inline bool in_row_space(const ModMatrix& H, const std::vector<std::int64_t>& v) {
  for (auto x : howell_reduce(H, v))
    if (x != 0) return false;
  return true;
}

/// Number of elements of the row space of a Howell-form matrix.
inline Int howell_span_size(const ModMatrix& H) {
  Int size = 1;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    std::size_t c = 0;
    while (c < H.cols() && H(i, c) == 0) ++c;
    if (c == H.cols()) continue;
    size *= Int(static_cast<long>(H.modulus() / H(i, c)));
  }
  return size;
}

struct ModSolution {
  std::vector<std::int64_t> particular;
  /// Howell-form basis of {x : A x = 0}.
  ModMatrix kernel;
};

/// Solve A x = b over Z/n. Returns nullopt when no solution exists.
inline std::optional<ModSolution> solve_mod(const ModMatrix& A, const std::vector<std::int64_t>& b) {
  ensure(b.size() == A.rows(), ErrorCode::InvalidSpec, "solve_mod: rhs length mismatch");
  const std::int64_t n = A.modulus();
  const std::size_t r = A.rows(), c = A.cols();
  ModSolution sol;
  sol.particular.assign(c, 0);
  if (n == 1) {
    sol.kernel = ModMatrix(n, 0, c);
    return sol;
  }
  // Howell form of [A^T | I]: rows (y A^T | y); leading-zero rows give the kernel.
  std::vector<detail::ModRow> rows(c, detail::ModRow(r + c, 0));
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t i = 0; i < r; ++i) rows[j][i] = A(i, j);
    rows[j][r + j] = 1;
  }
  auto h = detail::howell(std::move(rows), r + c, n);

  detail::ModRow v(r + c, 0);
  for (std::size_t i = 0; i < r; ++i) v[i] = floor_mod(b[i], n);
  std::vector<detail::ModRow> kernel_rows;
  for (std::size_t k = 0; k < h.rows.size(); ++k) {
    std::size_t pc = h.pivots[k];
    if (pc >= r) {
      kernel_rows.emplace_back(h.rows[k].begin() + static_cast<std::ptrdiff_t>(r), h.rows[k].end());
      continue;
    }
    std::int64_t q = v[pc] / h.rows[k][pc];
    if (q == 0) continue;
    for (std::size_t j = pc; j < r + c; ++j) v[j] = floor_mod(v[j] - mul_mod(q, h.rows[k][j], n), n);
  }
  for (std::size_t i = 0; i < r; ++i)
    if (v[i] != 0) return std::nullopt;

  sol.kernel = ModMatrix::from_rows(n, kernel_rows, c);
  sol.kernel = howell_form(sol.kernel);
  std::vector<std::int64_t> x(c);
  for (std::size_t j = 0; j < c; ++j) x[j] = floor_mod(-v[r + j], n);
  sol.particular = howell_reduce(sol.kernel, x);
  return sol;
}

}  // namespace motivelab
