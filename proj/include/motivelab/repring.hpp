#pragma once

// The representation ring R(G) (and R(G) tensor Q) on the basis of
// irreducible characters.

#include <cstdint>
#include <string>
#include <vector>

#include "motivelab/chartable.hpp"

namespace motivelab {

class VirtualCharacter {
 public:
  VirtualCharacter() = default;
  VirtualCharacter(CharacterTablePtr table, std::vector<Rational> coeffs)
      : table_(std::move(table)), coeffs_(std::move(coeffs)) {
    ensure(coeffs_.size() == table_->size(), ErrorCode::InvalidSpec, "coefficient vector has wrong length");
  }

  static VirtualCharacter zero(CharacterTablePtr t) {
    std::vector<Rational> c(t->size(), Rational(0));
    return {std::move(t), std::move(c)};
  }
  static VirtualCharacter irreducible(CharacterTablePtr t, std::size_t i, Rational mult = 1) {
    VirtualCharacter v = zero(std::move(t));
    v.coeffs_.at(i) = mult;
    return v;
  }
  static VirtualCharacter trivial(CharacterTablePtr t) { return irreducible(std::move(t), 0); }
  static VirtualCharacter one(CharacterTablePtr t) { return trivial(std::move(t)); }
  /// [kG] = sum_i deg_i chi_i
  static VirtualCharacter regular(CharacterTablePtr t) {
    VirtualCharacter v = zero(t);
    for (std::size_t i = 0; i < t->size(); ++i) v.coeffs_[i] = t->degrees[i];
    return v;
  }

  /// Decomposition of a class function; throws NonIntegralDecomposition when
  /// require_integral is set and a multiplicity is not an integer.
  static VirtualCharacter from_class_function(CharacterTablePtr t, const std::vector<Cyclotomic>& f,
                                              bool require_integral = false) {
    ensure(f.size() == t->group->num_classes(), ErrorCode::InvalidSpec, "class function has wrong length");
    VirtualCharacter v = zero(t);
    for (std::size_t i = 0; i < t->size(); ++i) {
      Cyclotomic m = t->inner_with_irrep(f, i);
      ensure(m.is_rational(), ErrorCode::NonIntegralDecomposition,
             "multiplicity of irreducible " + std::to_string(i) + " is not rational: " + m.str());
      v.coeffs_[i] = m.rational_value();
    }
    if (require_integral)
      ensure(v.is_integral(), ErrorCode::NonIntegralDecomposition, "decomposition has non-integral multiplicities");
    // the decomposition must reproduce f exactly
    auto back = v.class_values();
    for (std::size_t c = 0; c < f.size(); ++c)
      ensure(back[c] == f[c], ErrorCode::NonIntegralDecomposition, "class function is not in the character span");
    return v;
  }

  const CharacterTablePtr& table() const { return table_; }
  const GroupPtr& group() const { return table_->group; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_integral() const {
    for (const auto& c : coeffs_)
      if (c.get_den() != 1) return false;
    return true;
  }
  /// Genuine character: integral with nonnegative multiplicities.
  bool is_genuine() const {
    if (!is_integral()) return false;
    for (const auto& c : coeffs_)
      if (c < 0) return false;
    return true;
  }

  std::vector<Cyclotomic> class_values() const {
    const std::size_t k = table_->group->num_classes();
    std::vector<Cyclotomic> out(k, Cyclotomic(table_->exponent));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t c = 0; c < k; ++c) out[c] += table_->values[i][c] * coeffs_[i];
    }
    return out;
  }

  /// Value at the identity: sum coeff_i * deg_i.
  Rational rank() const {
    Rational r = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r += coeffs_[i] * Rational(table_->degrees[i]);
    return r;
  }

  friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
    return same_group(a.group(), b.group()) && a.coeffs_ == b.coeffs_;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      if (!out.empty()) out += coeffs_[i] < 0 ? " - " : " + ";
      else if (coeffs_[i] < 0) out += "-";
      Rational m = abs(coeffs_[i]);
      if (m != 1) out += m.get_str() + "*";
      out += "X" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  CharacterTablePtr table_;
  std::vector<Rational> coeffs_;
};

inline void require_same_ring(const VirtualCharacter& a, const VirtualCharacter& b) {
  require_same_group(a.group(), b.group(), "representation ring operation");
}

inline VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b) {
  require_same_ring(a, b);
  auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
  return {a.table(), std::move(c)};
}

inline VirtualCharacter operator-(const VirtualCharacter& a, const VirtualCharacter& b) {
  require_same_ring(a, b);
  auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs()[i];
  return {a.table(), std::move(c)};
}

inline VirtualCharacter operator*(const Rational& q, const VirtualCharacter& a) {
  auto c = a.coeffs();
  for (auto& x : c) x *= q;
  return {a.table(), std::move(c)};
}

/// Ring product: pointwise class-function product, decomposed exactly.
inline VirtualCharacter operator*(const VirtualCharacter& a, const VirtualCharacter& b) {
  require_same_ring(a, b);
  auto fa = a.class_values(), fb = b.class_values();
  for (std::size_t c = 0; c < fa.size(); ++c) fa[c] *= fb[c];
  return VirtualCharacter::from_class_function(a.table(), fa, a.is_integral() && b.is_integral());
}

inline VirtualCharacter power(const VirtualCharacter& a, unsigned k) {
  VirtualCharacter r = VirtualCharacter::one(a.table());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

/// Unit criterion in the localization at the augmentation ideal: rank != 0.
inline bool is_unit_at_I(const VirtualCharacter& a) { return a.rank() != 0; }

struct RingIdempotents {
  VirtualCharacter e_plus, e_minus;
};

inline RingIdempotents idempotents(const CharacterTablePtr& t) {
  VirtualCharacter reg = VirtualCharacter::regular(t);
  VirtualCharacter ep = Rational(1, t->order()) * reg;
  VirtualCharacter em = VirtualCharacter::one(t) - ep;
  ensure(ep * ep == ep, ErrorCode::Internal, "e+ is not idempotent");
  ensure(em * em == em, ErrorCode::Internal, "e- is not idempotent");
  ensure(ep * em == VirtualCharacter::zero(t), ErrorCode::Internal, "e+ e- is not zero");
  ensure(ep + em == VirtualCharacter::one(t), ErrorCode::Internal, "e+ + e- is not one");
  ensure(ep.rank() == 1 && em.rank() == 0, ErrorCode::Internal, "idempotent ranks are wrong");
  return {ep, em};
}

/// Permutation character of G on G/H: value at g = number of cosets fixed by g.
inline VirtualCharacter permutation_character(const CharacterTablePtr& t, const Subgroup& H) {
  const GroupPtr& G = t->group;
  CosetSpace cs = coset_space(G, H);
  std::vector<Cyclotomic> f;
  for (const auto& cls : G->classes()) {
    std::int64_t fixed = 0;
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (cs.action[cls.representative][i] == i) ++fixed;
    f.push_back(Cyclotomic::rational(fixed));
  }
  VirtualCharacter v = VirtualCharacter::from_class_function(t, f, true);
  ensure(v.is_genuine(), ErrorCode::Internal, "permutation character is not genuine");
  ensure(v.rank() == Rational(static_cast<long>(cs.size())), ErrorCode::Internal, "permutation character rank");
  return v;
}

/// Restriction to H, decomposed over Irr(H); `sub_table` is the table of H.as_group().
inline VirtualCharacter restrict_to(const VirtualCharacter& a, const Subgroup& H, const CharacterTablePtr& sub_table) {
  require_same_group(a.group(), H.parent(), "restriction");
  ensure(sub_table->group->order() == H.order(), ErrorCode::GroupMismatch, "table does not belong to the subgroup");
  auto f = a.class_values();
  std::vector<Cyclotomic> g;
  for (const auto& cls : sub_table->group->classes()) {
    Elem parent_elem = H.members()[cls.representative];
    g.push_back(f[a.group()->class_index(parent_elem)]);
  }
  return VirtualCharacter::from_class_function(sub_table, g, a.is_integral());
}

inline VirtualCharacter restrict_to(const VirtualCharacter& a, const Subgroup& H) {
  return restrict_to(a, H, character_table(H.as_group()));
}

}  // namespace motivelab
