#pragma once

// Equivariant motivic measures: classes in K_0 of noncommutative Chow motives,
// the measure mu_nc on catalog varieties, the blow-up relations, additive
// invariants of skeletons, and the factorization of the Euler-characteristic
// measure through mu_nc.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "motivelab/catalog.hpp"
#include "motivelab/repring.hpp"

namespace motivelab {

/// Integer combination of atoms; terms with coefficient 0 are dropped.
class K0NCClass {
 public:
  K0NCClass() = default;
  explicit K0NCClass(GroupPtr G) : group_(std::move(G)) {}
  static K0NCClass from_skeleton(const MotiveSkeleton& s) {
    K0NCClass c(s.group());
    for (const auto& a : s.atoms()) c.add(a, 1);
    return c;
  }

  const GroupPtr& group() const { return group_; }
  const std::map<MotiveAtom, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const MotiveAtom& a, std::int64_t k) {
    require_same_group(group_, a.group(), "K0 class");
    if (k == 0) return;
    auto it = terms_.find(a);
    if (it == terms_.end()) {
      terms_.emplace(a, k);
    } else if ((it->second += k) == 0) {
      terms_.erase(it);
    }
  }

  friend K0NCClass operator+(const K0NCClass& a, const K0NCClass& b) {
    require_same_group(a.group_, b.group_, "K0 sum");
    K0NCClass c = a;
    for (const auto& [atom, k] : b.terms_) c.add(atom, k);
    return c;
  }
  friend K0NCClass operator*(std::int64_t s, const K0NCClass& a) {
    K0NCClass c(a.group_);
    for (const auto& [atom, k] : a.terms_) c.add(atom, s * k);
    return c;
  }
  friend K0NCClass operator-(const K0NCClass& a, const K0NCClass& b) { return a + (-1) * b; }
  friend bool operator==(const K0NCClass& a, const K0NCClass& b) {
    if (!same_group(a.group_, b.group_) || a.terms_.size() != b.terms_.size()) return false;
    auto i = a.terms_.begin();
    for (auto j = b.terms_.begin(); j != b.terms_.end(); ++i, ++j)
      if (!(i->first == j->first) || i->second != j->second) return false;
    return true;
  }

  std::string str() const {
    std::string s;
    for (const auto& [atom, k] : terms_) {
      if (!s.empty()) s += k < 0 ? " - " : " + ";
      else if (k < 0) s += "-";
      std::int64_t m = k < 0 ? -k : k;
      if (m != 1) s += std::to_string(m) + "*";
      s += atom.str();
    }
    return s.empty() ? "0" : s;
  }

 private:
  GroupPtr group_;
  std::map<MotiveAtom, std::int64_t> terms_;
};

/// Tensor product of atoms, as a list of atoms.
inline std::vector<MotiveAtom> tensor_atoms(const MotiveAtom& a, const MotiveAtom& b) {
  require_same_group(a.group(), b.group(), "atom tensor product");
  const GroupPtr& G = a.group();
  if (a.is_twisted_unit() && b.is_twisted_unit()) {
    const auto& M = schur_multiplier_cached(G);
    return {MotiveAtom::twisted_unit(class_mul(a.cohom_class(), b.cohom_class(), M))};
  }
  if (a.is_twisted_unit() != b.is_twisted_unit()) {
    const MotiveAtom& ind = a.is_twisted_unit() ? b : a;
    const MotiveAtom& tu = a.is_twisted_unit() ? a : b;
    const Subgroup& H = ind.subgroup();
    auto local = H.as_group();
    auto res = restrict_cocycle(tu.cohom_class().representative, H, local);
    ensure(class_of(res, schur_multiplier_cached(local)).is_trivial(), ErrorCode::UnsupportedAtom,
           "tensor of " + ind.str() + " with " + tu.str() + " has a twisted stabilizer");
    return {ind};
  }
  // G/H1 x G/H2 splits into G-orbits indexed by H1-orbits on G/H2
  const Subgroup& H1 = a.subgroup();
  CosetSpace cs = coset_space(G, b.subgroup());
  std::vector<bool> seen(cs.size(), false);
  std::vector<MotiveAtom> out;
  for (std::size_t c = 0; c < cs.size(); ++c) {
    if (seen[c]) continue;
    std::vector<Elem> stab;
    for (Elem h : H1.members()) {
      seen[cs.action[h][c]] = true;
      if (cs.action[h][c] == c) stab.push_back(h);
    }
    out.push_back(MotiveAtom::induced(Subgroup::make(G, stab)));
  }
  return out;
}

inline K0NCClass operator*(const K0NCClass& x, const K0NCClass& y) {
  require_same_group(x.group(), y.group(), "K0 product");
  K0NCClass out(x.group());
  for (const auto& [a, i] : x.terms())
    for (const auto& [b, j] : y.terms())
      for (const auto& t : tensor_atoms(a, b)) out.add(t, i * j);
  return out;
}

/// Unit of K_0: the class of the point with trivial action.
inline K0NCClass k0_unit(const GroupPtr& G) {
  K0NCClass c(G);
  c.add(MotiveAtom::twisted_unit(trivial_class(G)), 1);
  return c;
}

// ---------------------------------------------------------------------------
// The measure

/// A catalog variety with a G-action.
struct VarietySymbol {
  CatalogEntry entry;
  ActionSpec action;
};

/// Product X_1 x ... x X_r with the diagonal action.
using VarietyExpr = std::vector<VarietySymbol>;

inline bool same_action(const ActionSpec& a, const ActionSpec& b) {
  auto same_sub = [](const std::optional<Subgroup>& x, const std::optional<Subgroup>& y) {
    return x.has_value() == y.has_value() && (!x || x->members() == y->members());
  };
  if (!same_group(a.group, b.group) || a.classes != b.classes || !same_sub(a.swap, b.swap) ||
      a.orbits.size() != b.orbits.size())
    return false;
  for (std::size_t i = 0; i < a.orbits.size(); ++i)
    if (a.orbits[i].members() != b.orbits[i].members()) return false;
  return true;
}

inline bool same_expr(const VarietyExpr& a, const VarietyExpr& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].entry.label() != b[i].entry.label() || !same_action(a[i].action, b[i].action)) return false;
  return true;
}

inline std::string expr_label(const VarietyExpr& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "*" : "") + x[i].entry.label();
  return s;
}

inline K0NCClass mu_nc(const VarietySymbol& s) {
  return K0NCClass::from_skeleton(decompose_collection(instantiate(s.entry, s.action)));
}

/// Multiplicative on products: the box product of the factors' collections.
inline K0NCClass mu_nc(const VarietyExpr& x) {
  ensure(!x.empty(), ErrorCode::InvalidSpec, "empty variety expression");
  K0NCClass c = mu_nc(x.front());
  for (std::size_t i = 1; i < x.size(); ++i) c = c * mu_nc(x[i]);
  return c;
}

struct CheckItem {
  std::string name;
  std::string lhs, rhs;
  bool ok = false;
};

struct CheckReport {
  bool ok = true;
  std::vector<CheckItem> items;

  void add(std::string name, std::string lhs, std::string rhs, bool ok_item) {
    items.push_back({std::move(name), std::move(lhs), std::move(rhs), ok_item});
    ok = ok && ok_item;
  }
};

/// [Bl] = [X] + (c-1)[Y] and [E] = c[Y] in K_0.
inline CheckReport blowup_check(const VarietyExpr& X, const VarietyExpr& Y, std::int64_t c, const VarietyExpr& Bl,
                                const VarietyExpr& E) {
  ensure(!same_expr(X, Y), ErrorCode::InvalidSpec, "blow-up center coincides with the ambient variety");
  ensure(c >= 1, ErrorCode::InvalidSpec, "codimension must be positive");
  K0NCClass x = mu_nc(X), y = mu_nc(Y), bl = mu_nc(Bl), e = mu_nc(E);
  CheckReport r;
  K0NCClass rhs1 = x + (c - 1) * y, rhs2 = c * y;
  r.add("[Bl] = [X] + (c-1)[Y]", bl.str(), rhs1.str(), bl == rhs1);
  r.add("[E] = c[Y]", e.str(), rhs2.str(), e == rhs2);
  K0NCClass d1 = bl - e, d2 = x - y;
  r.add("[Bl] - [E] = [X] - [Y]", d1.str(), d2.str(), d1 == d2);
  return r;
}

// ---------------------------------------------------------------------------
// Additive invariants

enum class Invariant { HH, HP, K0rank };

inline Invariant parse_invariant(const std::string& s) {
  if (s == "HH") return Invariant::HH;
  if (s == "HP") return Invariant::HP;
  if (s == "K0rank") return Invariant::K0rank;
  fail(ErrorCode::UnsupportedInvariant, "unsupported invariant '" + s + "' (expected HH, HP or K0rank)");
}

struct InvariantValue {
  Invariant which = Invariant::HH;
  std::map<std::int64_t, std::int64_t> graded;  // HH: degree -> dim; HP: 0 = even, 1 = odd; K0rank: 0 -> rank
  std::int64_t total = 0;
};

/// Copies of E(C) contributed by an atom.
inline std::int64_t invariant_copies(const MotiveAtom& a) {
  if (a.is_twisted_unit()) return static_cast<std::int64_t>(invariant_copies(a.cohom_class().representative));
  return static_cast<std::int64_t>(a.subgroup().as_group()->num_classes());
}

inline InvariantValue evaluate_invariant(const K0NCClass& A, Invariant which) {
  std::int64_t copies = 0;
  for (const auto& [atom, k] : A.terms()) copies += k * invariant_copies(atom);
  InvariantValue v{which, {}, copies};
  v.graded[0] = copies;
  if (which == Invariant::HP) v.graded[1] = 0;
  return v;
}

inline InvariantValue evaluate_invariant(const MotiveSkeleton& A, Invariant which) {
  return evaluate_invariant(K0NCClass::from_skeleton(A), which);
}

inline InvariantValue evaluate_invariant(const MotiveSkeleton& A, const std::string& which) {
  return evaluate_invariant(A, parse_invariant(which));
}

// ---------------------------------------------------------------------------
// Representation-valued Euler characteristics

using EulerRepClass = VirtualCharacter;

/// Per-class values from a map keyed by any element of each class.
inline std::vector<std::int64_t> per_class_values(const GroupPtr& G, const std::map<Elem, std::int64_t>& by_elem) {
  std::vector<std::int64_t> out(G->num_classes(), 0);
  std::vector<bool> hit(G->num_classes(), false);
  for (const auto& [g, v] : by_elem) {
    ensure(g < G->order(), ErrorCode::InvalidSpec, "element " + std::to_string(g) + " out of range");
    std::size_t c = G->class_index(g);
    ensure(!hit[c], ErrorCode::ClassCountMismatch, "conjugacy class of " + std::to_string(g) + " given twice");
    hit[c] = true;
    out[c] = v;
  }
  ensure(by_elem.size() == G->num_classes(), ErrorCode::ClassCountMismatch,
         "expected one value per conjugacy class (" + std::to_string(G->num_classes()) + "), got " +
             std::to_string(by_elem.size()));
  return out;
}

/// Class function sigma -> chi(X^sigma) decomposed over Irr(G).
inline EulerRepClass euler_char_rep(const GroupPtr& G, const std::vector<std::int64_t>& fixed_euler) {
  ensure(fixed_euler.size() == G->num_classes(), ErrorCode::ClassCountMismatch,
         "expected one Euler characteristic per conjugacy class");
  auto t = character_table(G);
  std::vector<Cyclotomic> f;
  for (auto v : fixed_euler) f.push_back(Cyclotomic::rational(v));
  VirtualCharacter chi = VirtualCharacter::zero(t);
  try {
    chi = VirtualCharacter::from_class_function(t, f);
  } catch (const Error& e) {
    fail(ErrorCode::NonIntegralCharacter, std::string("fixed-locus data is not a character: ") + e.what());
  }
  ensure(chi.is_integral(), ErrorCode::NonIntegralCharacter,
         "fixed-locus data decomposes with non-integral multiplicities: " + chi.str());
  return chi;
}

/// Image in R_C(G): twisted units go to the trivial character, Induced(H) to C[G/H].
inline EulerRepClass hh_class(const K0NCClass& A) {
  auto t = character_table(A.group());
  VirtualCharacter out = VirtualCharacter::zero(t);
  for (const auto& [atom, k] : A.terms()) {
    VirtualCharacter v = atom.is_twisted_unit() ? VirtualCharacter::trivial(t) : permutation_character(t, atom.subgroup());
    out = out + Rational(k) * v;
  }
  return out;
}

inline EulerRepClass hh_class(const MotiveSkeleton& A) { return hh_class(K0NCClass::from_skeleton(A)); }

/// Euler characteristic from fixed loci agrees with the image of mu_nc.
inline CheckReport factorization_check(const VarietyExpr& X, const std::vector<std::int64_t>& fixed_euler) {
  ensure(!X.empty(), ErrorCode::InvalidSpec, "empty variety expression");
  const GroupPtr& G = X.front().action.group;
  auto lhs = euler_char_rep(G, fixed_euler);
  auto rhs = hh_class(mu_nc(X));
  CheckReport r;
  r.add("euler_char_rep = hh_class(mu_nc)", lhs.str(), rhs.str(), lhs == rhs);
  return r;
}

/// Component-wise totals of per-class (even, odd) sector dimensions.
inline std::pair<std::int64_t, std::int64_t> orbifold_dims(
    const GroupPtr& G, const std::vector<std::pair<std::int64_t, std::int64_t>>& sectors) {
  ensure(sectors.size() == G->num_classes(), ErrorCode::ClassCountMismatch,
         "expected " + std::to_string(G->num_classes()) + " sectors, got " + std::to_string(sectors.size()));
  std::pair<std::int64_t, std::int64_t> out{0, 0};
  for (const auto& [e, o] : sectors) {
    ensure(e >= 0 && o >= 0, ErrorCode::InvalidSpec, "sector dimensions must be nonnegative");
    out.first += e;
    out.second += o;
  }
  return out;
}

}  // namespace motivelab
