#pragma once

// The twisted group algebra C_alpha[G]: e_g e_h = zeta_n^{alpha(g,h)} e_{gh}.
// Exact side: alpha-regular classes and the center. Numeric side: Wedderburn
// block dimensions from the spectrum of a random central element.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "motivelab/cohomology.hpp"
#include "motivelab/cyclotomic.hpp"

namespace motivelab {

class TwistedGroupAlgebra {
 public:
  const GroupPtr& group() const { return alpha_.group; }
  const TwoCocycle& cocycle() const { return alpha_; }
  std::size_t dimension() const { return group()->order(); }

  /// Exponent of zeta_n in e_g e_h.
  std::int64_t phase(Elem g, Elem h) const { return alpha_.at(g, h); }

  static TwistedGroupAlgebra build(const TwoCocycle& alpha) {
    const GroupPtr& G = alpha.group;
    const std::size_t n = G->order();
    ensure(alpha.table.size() == n * n, ErrorCode::NotACocycle, "cocycle table does not match the group");
    for (Elem g = 0; g < n; ++g)
      ensure(alpha.at(0, g) == 0 && alpha.at(g, 0) == 0, ErrorCode::NotACocycle,
             "e_1 is not the unit: alpha is not normalized at " + std::to_string(g));
    // (e_t e_r) e_s = e_t (e_r e_s)  <=>  cocycle identity at (t, r, s)
    auto check = [&](Elem t, Elem r, Elem s) {
      std::int64_t left = alpha.at(t, r) + alpha.at(G->mul(t, r), s);
      std::int64_t right = alpha.at(r, s) + alpha.at(t, G->mul(r, s));
      ensure(floor_mod(left - right, alpha.modulus) == 0, ErrorCode::NotACocycle,
             "associativity fails at (" + std::to_string(t) + ", " + std::to_string(r) + ", " + std::to_string(s) +
                 ")");
    };
    if (n <= 64) {
      for (Elem t = 1; t < n; ++t)
        for (Elem r = 1; r < n; ++r)
          for (Elem s = 1; s < n; ++s) check(t, r, s);
    } else {
      std::mt19937_64 rng(0xa55);
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
      for (int i = 0; i < 10000; ++i) check(pick(rng), pick(rng), pick(rng));
    }
    TwistedGroupAlgebra A;
    A.alpha_ = alpha;
    return A;
  }

 private:
  TwoCocycle alpha_;
};

inline TwistedGroupAlgebra build_twisted(const TwoCocycle& alpha) { return TwistedGroupAlgebra::build(alpha); }

inline TwistedGroupAlgebra build_twisted(const GroupPtr& G, const TwoCocycle& alpha) {
  require_same_group(G, alpha.group, "twisted group algebra");
  return TwistedGroupAlgebra::build(alpha);
}

struct RegularityReport {
  std::vector<bool> regular;  // per conjugacy class
  std::size_t count = 0;
};

/// A class <g> is alpha-regular iff alpha(g,h) = alpha(h,g) for all h in C_G(g).
inline RegularityReport alpha_regular(const TwoCocycle& alpha) {
  const GroupPtr& G = alpha.group;
  const std::size_t n = G->order();
  std::vector<bool> elem_regular(n, true);
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n && elem_regular[g]; ++h)
      if (G->mul(g, h) == G->mul(h, g) && floor_mod(alpha.at(g, h) - alpha.at(h, g), alpha.modulus) != 0)
        elem_regular[g] = false;
  RegularityReport rep;
  for (const auto& cls : G->classes()) {
    bool r = elem_regular[cls.representative];
    for (Elem m : cls.members)
      ensure(elem_regular[m] == r, ErrorCode::Internal, "alpha-regularity is not constant on a conjugacy class");
    rep.regular.push_back(r);
    if (r) ++rep.count;
  }
  ensure(rep.regular.empty() || rep.regular.front(), ErrorCode::Internal, "identity class is not alpha-regular");
  return rep;
}

/// Number of copies of E(C) in E(C_alpha[G]) for an additive invariant E.
inline std::size_t invariant_copies(const TwoCocycle& alpha) { return alpha_regular(alpha).count; }

/// Central element supported on one conjugacy class: sum_h zeta_n^{exponents[i]} e_{support[i]}.
struct CenterElement {
  std::size_t conjugacy_class = 0;
  std::vector<Elem> support;
  std::vector<std::int64_t> exponents;
  std::int64_t modulus = 1;

  /// Coefficient vector over the basis {e_g}.
  std::vector<Cyclotomic> coefficients(std::size_t dim) const {
    std::vector<Cyclotomic> c(dim, Cyclotomic::zero(modulus));
    for (std::size_t i = 0; i < support.size(); ++i) c[support[i]] = Cyclotomic::root(modulus, exponents[i]);
    return c;
  }
};

/// Exact basis of Z(C_alpha[G]). Commuting with e_t forces the monomial
/// relations c_{t h t^-1} = zeta^{alpha(t,h) - alpha(t h t^-1, t)} c_h, solved by
/// propagation along each class; inconsistent classes contribute nothing.
inline std::vector<CenterElement> center_basis(const TwistedGroupAlgebra& A) {
  const GroupPtr& G = A.group();
  const std::size_t n = G->order();
  const std::int64_t mod = A.cocycle().modulus;
  std::vector<CenterElement> basis;
  for (std::size_t ci = 0; ci < G->num_classes(); ++ci) {
    const auto& cls = G->classes()[ci];
    std::vector<std::int64_t> coef(n, -1);
    coef[cls.representative] = 0;
    std::vector<Elem> queue{cls.representative};
    bool consistent = true;
    for (std::size_t head = 0; head < queue.size() && consistent; ++head) {
      Elem h = queue[head];
      for (Elem t = 0; t < n && consistent; ++t) {
        Elem target = G->conj(h, t);
        std::int64_t v = floor_mod(coef[h] + A.phase(t, h) - A.phase(target, t), mod);
        if (coef[target] < 0) {
          coef[target] = v;
          queue.push_back(target);
        } else if (coef[target] != v) {
          consistent = false;
        }
      }
    }
    if (!consistent) continue;
    CenterElement z{ci, {}, {}, mod};
    for (Elem m : cls.members) {
      z.support.push_back(m);
      z.exponents.push_back(coef[m]);
    }
    basis.push_back(std::move(z));
  }
  // exact verification: e_s z = z e_s for every basis element e_s
  for (const auto& z : basis) {
    for (Elem s = 0; s < n; ++s) {
      std::vector<std::int64_t> left(n, -1), right(n, -1);
      for (std::size_t i = 0; i < z.support.size(); ++i) {
        Elem h = z.support[i];
        left[G->mul(s, h)] = floor_mod(z.exponents[i] + A.phase(s, h), mod);
        right[G->mul(h, s)] = floor_mod(z.exponents[i] + A.phase(h, s), mod);
      }
      ensure(left == right, ErrorCode::Internal, "center basis element fails to commute");
    }
  }
  ensure(basis.size() == alpha_regular(A.cocycle()).count, ErrorCode::Internal,
         "center dimension differs from the alpha-regular class count");
  return basis;
}

struct WedderburnProfile {
  std::vector<std::int64_t> dims;  // ascending
  double tolerance = 1e-8;
  std::uint64_t seed = 0;
};

/// Block dimensions d_1 <= ... <= d_m with C_alpha[G] = prod M_{d_i}(C).
inline WedderburnProfile wedderburn_dims(const TwistedGroupAlgebra& A, std::uint64_t seed = 0, double tol = 1e-8) {
  const GroupPtr& G = A.group();
  const std::size_t n = G->order();
  ensure(n <= 256, ErrorCode::SizeBound, "spectral Wedderburn path limited to |G| <= 256");
  ensure(tol > 0, ErrorCode::InvalidSpec, "tolerance must be positive");
  const std::int64_t mod = A.cocycle().modulus;
  auto center = center_basis(A);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<std::complex<double>> z(n, 0.0);
  for (const auto& b : center) {
    double r = coeff(rng);
    for (std::size_t i = 0; i < b.support.size(); ++i)
      z[b.support[i]] += r * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(b.exponents[i]) /
                                                 static_cast<double>(mod));
  }
  // left-regular matrix: z e_g = sum_x z_x zeta^{alpha(x,g)} e_{xg}
  Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Elem g = 0; g < n; ++g)
    for (Elem x = 0; x < n; ++x) {
      if (z[x] == 0.0) continue;
      L(G->mul(x, g), g) +=
          z[x] * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(A.phase(x, g)) / static_cast<double>(mod));
    }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(L, false);
  ensure(solver.info() == Eigen::Success, ErrorCode::Internal, "eigenvalue computation failed");
  const auto& ev = solver.eigenvalues();

  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double d = std::abs(ev(static_cast<Eigen::Index>(i)) - ev(static_cast<Eigen::Index>(j)));
      if (d <= tol) {
        parent[find(i)] = find(j);
      } else if (d < 10 * tol) {
        fail(ErrorCode::ClusterAmbiguity, "eigenvalue gap " + std::to_string(d) + " lies in (tol, 10 tol); retry with a new seed");
      }
    }
  std::vector<std::size_t> sizes(n, 0);
  for (std::size_t i = 0; i < n; ++i) ++sizes[find(i)];
  WedderburnProfile prof{{}, tol, seed};
  for (auto s : sizes) {
    if (s == 0) continue;
    auto d = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(s))));
    ensure(static_cast<std::size_t>(d * d) == s, ErrorCode::NonSquareCluster,
           "eigenvalue cluster of size " + std::to_string(s) + " is not a square");
    prof.dims.push_back(d);
  }
  std::sort(prof.dims.begin(), prof.dims.end());
  std::int64_t total = 0;
  for (auto d : prof.dims) total += d * d;
  ensure(total == static_cast<std::int64_t>(n), ErrorCode::Internal, "block dimensions do not sum to |G|");
  ensure(prof.dims.size() == center.size(), ErrorCode::ClusterAmbiguity,
         "block count differs from the center dimension; retry with a new seed");
  return prof;
}

}  // namespace motivelab
