#pragma once

// Exact arithmetic in Q(zeta_e), stored on the power basis 1, z, ..., z^{phi(e)-1}
// modulo the e-th cyclotomic polynomial.

#include <complex>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "motivelab/arith.hpp"

namespace motivelab {

namespace detail {

using Poly = std::vector<Rational>;  // ascending degree

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Integer coefficients of Phi_e, ascending, via (x^e - 1) / prod_{d | e, d < e} Phi_d.
inline const std::vector<Int>& cyclotomic_polynomial(std::int64_t e) {
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<Int>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(e); it != cache.end()) return it->second;

  auto compute = [&](auto&& self, std::int64_t m) -> const std::vector<Int>& {
    if (auto it = cache.find(m); it != cache.end()) return it->second;
    std::vector<Int> num(static_cast<std::size_t>(m) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(m)] = 1;
    for (std::int64_t d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      const std::vector<Int>& den = self(self, d);
      // exact division by a monic integer polynomial
      std::size_t dn = den.size() - 1;
      std::vector<Int> quot(num.size() - dn, 0);
      for (std::size_t i = num.size(); i-- > dn;) {
        Int q = num[i];
        quot[i - dn] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= q * den[j];
      }
      for (std::size_t i = 0; i < dn; ++i)
        ensure(num[i] == 0, ErrorCode::Internal, "cyclotomic division left a remainder");
      num = std::move(quot);
    }
    return cache.emplace(m, std::move(num)).first->second;
  };
  return compute(compute, e);
}

inline void reduce_mod_phi(Poly& p, std::int64_t e) {
  const std::vector<Int>& phi = cyclotomic_polynomial(e);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    for (std::size_t j = 0; j < deg; ++j)
      if (phi[j] != 0) p[i - deg + j] -= c * Rational(phi[j]);
    p[i] = 0;
  }
  p.resize(deg, Rational(0));
}

inline void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  trim(r);
  Poly bb = b;
  trim(bb);
  q.assign(r.size() >= bb.size() ? r.size() - bb.size() + 1 : 0, Rational(0));
  while (!r.empty() && r.size() >= bb.size()) {
    std::size_t shift = r.size() - bb.size();
    Rational c = r.back() / bb.back();
    q[shift] = c;
    for (std::size_t j = 0; j < bb.size(); ++j) r[shift + j] -= c * bb[j];
    trim(r);
  }
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace detail

class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(std::int64_t conductor)
      : e_(conductor), c_(static_cast<std::size_t>(euler_phi(conductor)), Rational(0)) {
    ensure(conductor >= 1, ErrorCode::InvalidSpec, "cyclotomic conductor must be positive");
  }

  static Cyclotomic rational(const Rational& q, std::int64_t conductor = 1) {
    Cyclotomic z(conductor);
    z.c_[0] = q;
    return z;
  }
  static Cyclotomic zero(std::int64_t conductor = 1) { return Cyclotomic(conductor); }
  static Cyclotomic one(std::int64_t conductor = 1) { return rational(1, conductor); }

  /// zeta_e^k
  static Cyclotomic root(std::int64_t conductor, std::int64_t k) {
    k = floor_mod(k, conductor);
    detail::Poly p(static_cast<std::size_t>(k) + 1, Rational(0));
    p[static_cast<std::size_t>(k)] = 1;
    Cyclotomic z(conductor);
    detail::reduce_mod_phi(p, conductor);
    z.c_ = std::move(p);
    return z;
  }

  std::int64_t conductor() const { return e_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& q : c_)
      if (q != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  Rational rational_value() const {
    ensure(is_rational(), ErrorCode::Internal, "cyclotomic value is not rational: " + str());
    return c_[0];
  }

  /// Same value written over conductor L (requires conductor() | L).
  Cyclotomic promote(std::int64_t L) const {
    if (L == e_) return *this;
    ensure(L % e_ == 0, ErrorCode::Internal, "cannot promote conductor");
    std::int64_t step = L / e_;
    detail::Poly p(static_cast<std::size_t>((static_cast<std::int64_t>(c_.size()) - 1) * step + 1), Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) p[k * static_cast<std::size_t>(step)] = c_[k];
    detail::reduce_mod_phi(p, L);
    Cyclotomic z(L);
    z.c_ = std::move(p);
    return z;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    unify(o, [&](Cyclotomic& a, const Cyclotomic& b) {
      for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    });
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    unify(o, [&](Cyclotomic& a, const Cyclotomic& b) {
      for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    });
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) {
    unify(o, [&](Cyclotomic& a, const Cyclotomic& b) {
      detail::Poly p = detail::poly_mul(a.c_, b.c_);
      detail::reduce_mod_phi(p, a.e_);
      a.c_ = std::move(p);
    });
    return *this;
  }
  Cyclotomic& operator*=(const Rational& q) {
    for (auto& c : c_) c *= q;
    return *this;
  }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
  Cyclotomic operator-() const {
    Cyclotomic z = *this;
    for (auto& c : z.c_) c = -c;
    return z;
  }

  /// Multiplicative inverse via extended Euclid against Phi_e.
  Cyclotomic inverse() const {
    ensure(!is_zero(), ErrorCode::DivisionByZero, "inverse of zero cyclotomic");
    const std::vector<Int>& phi = detail::cyclotomic_polynomial(e_);
    detail::Poly m(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) m[i] = Rational(phi[i]);
    detail::Poly a = c_;
    detail::trim(a);
    // invariant: s0 * a == r0 (mod m), s1 * a == r1 (mod m)
    detail::Poly r0 = m, r1 = a, s0{}, s1{Rational(1)};
    while (!r1.empty()) {
      detail::Poly q, r;
      detail::poly_divmod(r0, r1, q, r);
      detail::Poly s = detail::poly_sub(s0, detail::poly_mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    // r0 is a nonzero constant since Phi_e is irreducible
    ensure(r0.size() == 1, ErrorCode::Internal, "gcd with cyclotomic polynomial is not constant");
    Rational scale = 1 / r0[0];
    for (auto& q : s0) q *= scale;
    s0.resize(std::max(s0.size(), c_.size()), Rational(0));
    detail::reduce_mod_phi(s0, e_);
    Cyclotomic z(e_);
    z.c_ = std::move(s0);
    return z;
  }

  /// Complex conjugation zeta -> zeta^{-1}.
  Cyclotomic conj() const {
    detail::Poly p(static_cast<std::size_t>(e_), Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      p[static_cast<std::size_t>(floor_mod(-static_cast<std::int64_t>(k), e_))] += c_[k];
    }
    detail::reduce_mod_phi(p, e_);
    Cyclotomic z(e_);
    z.c_ = std::move(p);
    return z;
  }

  std::complex<double> to_complex() const {
    std::complex<double> acc = 0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(e_);
      acc += c_[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.e_ == b.e_) return a.c_ == b.c_;
    std::int64_t L = lcm64(a.e_, b.e_);
    return a.promote(L).c_ == b.promote(L).c_;
  }

  /// Lexicographic order on coefficient vectors over the common conductor.
  friend int compare(const Cyclotomic& a, const Cyclotomic& b) {
    std::int64_t L = lcm64(a.e_, b.e_);
    Cyclotomic pa = a.promote(L), pb = b.promote(L);
    for (std::size_t i = 0; i < pa.c_.size(); ++i) {
      int s = cmp(pa.c_[i], pb.c_[i]);
      if (s != 0) return s < 0 ? -1 : 1;
    }
    return 0;
  }

  /// Human-readable form, e.g. "1 + 2*z3 - z3^2" (z<e> = primitive e-th root).
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      const Rational& q = c_[k];
      if (q == 0) continue;
      Rational mag = abs(q);
      if (first) {
        if (q < 0) os << "-";
      } else {
        os << (q < 0 ? " - " : " + ");
      }
      first = false;
      if (k == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << "*";
      os << "z" << e_;
      if (k > 1) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  template <class Op>
  void unify(const Cyclotomic& o, Op op) {
    if (o.e_ == e_) {
      op(*this, o);
      return;
    }
    std::int64_t L = lcm64(e_, o.e_);
    *this = promote(L);
    op(*this, o.promote(L));
  }

  std::int64_t e_;
  std::vector<Rational> c_;
};

}  // namespace motivelab
