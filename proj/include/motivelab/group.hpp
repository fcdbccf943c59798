#pragma once

// Finite groups materialised as Cayley tables, with conjugacy classes,
// subgroups, coset spaces and abelianization.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "motivelab/arith.hpp"

namespace motivelab {

using Elem = std::uint32_t;

/// Upper bound on group orders; MOTIVELAB_MAX_ORDER overrides the default of 2048.
inline std::size_t max_group_order() {
  if (const char* env = std::getenv("MOTIVELAB_MAX_ORDER")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 2048;
}

struct ConjugacyClass {
  Elem representative;         // smallest member
  std::vector<Elem> members;  // sorted
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
 public:
  /// Validates a Cayley table whose identity is element 0 (use from_cayley for
  /// arbitrary labelling).
  static GroupPtr make(std::vector<Elem> flat_table, std::size_t order, std::string label) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->n_ = order;
    g->table_ = std::move(flat_table);
    g->label_ = std::move(label);
    g->validate();
    g->derive();
    return g;
  }

  std::size_t order() const { return n_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inverses_[a]; }
  /// h g h^{-1}
  Elem conj(Elem g, Elem h) const { return mul(mul(h, g), inv(h)); }
  Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  const std::string& label() const { return label_; }
  const std::vector<Elem>& inverses() const { return inverses_; }

  Elem power(Elem g, std::int64_t k) const {
    std::int64_t o = static_cast<std::int64_t>(element_order(g));
    k = floor_mod(k, o);
    Elem acc = 0;
    for (std::int64_t i = 0; i < k; ++i) acc = mul(acc, g);
    return acc;
  }
  std::size_t element_order(Elem g) const { return orders_[g]; }
  std::int64_t exponent() const { return exponent_; }

  bool is_abelian() const { return classes_.size() == n_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_index(Elem g) const { return class_index_[g]; }
  std::size_t num_classes() const { return classes_.size(); }

  bool same_table(const FiniteGroup& o) const { return n_ == o.n_ && table_ == o.table_; }

 private:
  FiniteGroup() = default;

  void validate() {
    ensure(n_ >= 1, ErrorCode::InvalidSpec, "group order must be positive");
    ensure(n_ <= max_group_order(), ErrorCode::OrderBound,
           "order " + std::to_string(n_) + " exceeds bound " + std::to_string(max_group_order()));
    ensure(table_.size() == n_ * n_, ErrorCode::NotClosed, "Cayley table has wrong size");
    for (Elem v : table_) ensure(v < n_, ErrorCode::NotClosed, "Cayley table entry out of range");
    for (Elem a = 0; a < n_; ++a)
      ensure(mul(0, a) == a && mul(a, 0) == a, ErrorCode::NoIdentity, "element 0 is not a two-sided identity");
    inverses_.assign(n_, 0);
    for (Elem a = 0; a < n_; ++a) {
      bool found = false;
      for (Elem b = 0; b < n_; ++b)
        if (mul(a, b) == 0 && mul(b, a) == 0) {
          inverses_[a] = b;
          found = true;
          break;
        }
      ensure(found, ErrorCode::NotClosed, "element " + std::to_string(a) + " has no inverse");
    }
    auto check = [&](Elem a, Elem b, Elem c) {
      ensure(mul(mul(a, b), c) == mul(a, mul(b, c)), ErrorCode::NonAssociative,
             "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                 ")");
    };
    if (n_ <= 64) {
      for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b)
          for (Elem c = 0; c < n_; ++c) check(a, b, c);
    } else {
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n_ - 1));
      for (int t = 0; t < 10000; ++t) check(pick(rng), pick(rng), pick(rng));
    }
  }

  void derive() {
    orders_.assign(n_, 1);
    exponent_ = 1;
    for (Elem g = 0; g < n_; ++g) {
      Elem x = g;
      std::size_t o = 1;
      while (x != 0) {
        x = mul(x, g);
        ++o;
      }
      orders_[g] = o;
      exponent_ = lcm64(exponent_, static_cast<std::int64_t>(o));
    }
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> raw(n_, unset);
    std::vector<ConjugacyClass> found;
    for (Elem g = 0; g < n_; ++g) {
      if (raw[g] != unset) continue;
      std::set<Elem> orbit;
      for (Elem h = 0; h < n_; ++h) orbit.insert(conj(g, h));
      ConjugacyClass cls{g, {orbit.begin(), orbit.end()}};
      for (Elem m : cls.members) raw[m] = found.size();
      found.push_back(std::move(cls));
    }
    std::sort(found.begin(), found.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
      if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
      return a.representative < b.representative;
    });
    class_index_.assign(n_, 0);
    for (std::size_t i = 0; i < found.size(); ++i)
      for (Elem m : found[i].members) class_index_[m] = i;
    classes_ = std::move(found);
  }

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverses_;
  std::string label_;
  std::vector<std::size_t> orders_;
  std::int64_t exponent_ = 1;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_index_;
};

inline bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && a->same_table(*b));
}

inline void require_same_group(const GroupPtr& a, const GroupPtr& b, const std::string& where) {
  ensure(same_group(a, b), ErrorCode::GroupMismatch, where + ": operands live on different groups");
}

// ---------------------------------------------------------------------------
// Constructors

inline GroupPtr cyclic_group(std::size_t n) {
  ensure(n >= 1, ErrorCode::InvalidSpec, "cyclic group needs n >= 1");
  ensure(n <= max_group_order(), ErrorCode::OrderBound, "order exceeds bound");
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>((a + b) % n);
  return FiniteGroup::make(std::move(t), n, "C" + std::to_string(n));
}

/// Dihedral group of the given order 2m; element r^i s^j has index i + m*j,
/// with s r s = r^{-1}.
inline GroupPtr dihedral_group(std::size_t order) {
  ensure(order >= 2 && order % 2 == 0, ErrorCode::InvalidSpec, "dihedral order must be even and >= 2");
  ensure(order <= max_group_order(), ErrorCode::OrderBound, "order exceeds bound");
  const std::size_t m = order / 2;
  std::vector<Elem> t(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t i1 = x % m, j1 = x / m, i2 = y % m, j2 = y / m;
      // r^i1 s^j1 r^i2 s^j2 = r^{i1 + (-1)^j1 i2} s^{j1+j2}
      std::size_t i = j1 == 0 ? (i1 + i2) % m : (i1 + m - i2) % m;
      std::size_t j = (j1 + j2) % 2;
      t[x * order + y] = static_cast<Elem>(i + m * j);
    }
  return FiniteGroup::make(std::move(t), order, "D" + std::to_string(order));
}

/// (Z/p)^k with index sum_i a_i p^i.
inline GroupPtr elementary_abelian_group(std::size_t p, std::size_t k) {
  ensure(is_prime(static_cast<std::int64_t>(p)), ErrorCode::InvalidSpec, "elementary abelian group needs prime p");
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= p;
    ensure(n <= max_group_order(), ErrorCode::OrderBound, "order exceeds bound");
  }
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t x = a, y = b, out = 0, place = 1;
      for (std::size_t i = 0; i < k; ++i) {
        out += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      t[a * n + b] = static_cast<Elem>(out);
    }
  return FiniteGroup::make(std::move(t), n, "E" + std::to_string(n));
}

/// A x B with (a, b) at index a*|B| + b.
inline GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B) {
  const std::size_t na = A->order(), nb = B->order(), n = na * nb;
  ensure(n <= max_group_order(), ErrorCode::OrderBound, "order exceeds bound");
  std::vector<Elem> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Elem a = A->mul(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb));
      Elem b = B->mul(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb));
      t[x * n + y] = static_cast<Elem>(a * nb + b);
    }
  return FiniteGroup::make(std::move(t), n, A->label() + "x" + B->label());
}

/// Arbitrary Cayley table; relabels so the identity becomes element 0 (by
/// swapping labels 0 and e).
inline GroupPtr from_cayley(const std::vector<std::vector<std::int64_t>>& table, std::string label = "G") {
  const std::size_t n = table.size();
  ensure(n >= 1, ErrorCode::NotClosed, "empty Cayley table");
  ensure(n <= max_group_order(), ErrorCode::OrderBound, "order exceeds bound");
  for (const auto& row : table) {
    ensure(row.size() == n, ErrorCode::NotClosed, "Cayley table must be square");
    for (auto v : row)
      ensure(v >= 0 && static_cast<std::size_t>(v) < n, ErrorCode::NotClosed, "Cayley entry out of range");
  }
  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      ok = static_cast<std::size_t>(table[c][a]) == a && static_cast<std::size_t>(table[a][c]) == a;
    if (ok) e = c;
  }
  ensure(e != n, ErrorCode::NoIdentity, "Cayley table has no two-sided identity");
  auto relabel = [&](std::size_t x) -> std::size_t { return x == e ? 0 : (x == 0 ? e : x); };
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[relabel(a) * n + relabel(b)] = static_cast<Elem>(relabel(static_cast<std::size_t>(table[a][b])));
  return FiniteGroup::make(std::move(t), n, std::move(label));
}

using Permutation = std::vector<std::uint8_t>;

/// Group generated by permutations of {0..degree-1}; elements sorted
/// lexicographically by image list (identity first). Composition (pq)(i) = p(q(i)).
inline GroupPtr from_permutations(std::size_t degree, const std::vector<std::vector<std::int64_t>>& gens,
                                  std::string label = "G") {
  ensure(degree >= 1 && degree <= 16, ErrorCode::InvalidSpec, "permutation degree must be in 1..16");
  std::vector<Permutation> g;
  for (const auto& raw : gens) {
    ensure(raw.size() == degree, ErrorCode::InvalidSpec, "generator has wrong degree");
    Permutation p(degree);
    std::vector<bool> seen(degree, false);
    for (std::size_t i = 0; i < degree; ++i) {
      ensure(raw[i] >= 0 && static_cast<std::size_t>(raw[i]) < degree && !seen[static_cast<std::size_t>(raw[i])],
             ErrorCode::InvalidSpec, "generator is not a permutation");
      seen[static_cast<std::size_t>(raw[i])] = true;
      p[i] = static_cast<std::uint8_t>(raw[i]);
    }
    g.push_back(std::move(p));
  }
  auto compose = [&](const Permutation& p, const Permutation& q) {
    Permutation r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = p[q[i]];
    return r;
  };
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> elements{id};
  std::vector<Permutation> frontier{id};
  const std::size_t bound = max_group_order();
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& s : g) {
        Permutation y = compose(s, x);
        if (elements.insert(y).second) {
          ensure(elements.size() <= bound, ErrorCode::OrderBound, "generated group exceeds order bound");
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  std::vector<Permutation> list(elements.begin(), elements.end());
  std::map<Permutation, Elem> index;
  for (std::size_t i = 0; i < list.size(); ++i) index[list[i]] = static_cast<Elem>(i);
  const std::size_t n = list.size();
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = index.at(compose(list[a], list[b]));
  return FiniteGroup::make(std::move(t), n, std::move(label));
}

inline GroupPtr symmetric_group(std::size_t n) {
  ensure(n >= 1 && n <= 6, ErrorCode::InvalidSpec, "symmetric group supported for n <= 6");
  std::vector<std::vector<std::int64_t>> gens;
  if (n >= 2) {
    std::vector<std::int64_t> transposition(n), cycle(n);
    std::iota(transposition.begin(), transposition.end(), 0);
    std::swap(transposition[0], transposition[1]);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::int64_t>((i + 1) % n);
    gens = {transposition, cycle};
  }
  return from_permutations(n, gens, "S" + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Subgroups

class Subgroup {
 public:
  /// Validates closure; members need not be sorted.
  static Subgroup make(GroupPtr parent, std::vector<Elem> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup h;
    h.parent_ = std::move(parent);
    h.members_ = std::move(members);
    h.mask_.assign(h.parent_->order(), false);
    for (Elem m : h.members_) {
      ensure(m < h.parent_->order(), ErrorCode::NotASubgroup, "element out of range");
      h.mask_[m] = true;
    }
    ensure(!h.members_.empty() && h.members_.front() == 0, ErrorCode::NotASubgroup, "subset lacks the identity");
    for (Elem a : h.members_) {
      ensure(h.mask_[h.parent_->inv(a)], ErrorCode::NotASubgroup, "subset not closed under inverses");
      for (Elem b : h.members_)
        ensure(h.mask_[h.parent_->mul(a, b)], ErrorCode::NotASubgroup, "subset not closed under multiplication");
    }
    return h;
  }

  static Subgroup generated(GroupPtr parent, const std::vector<Elem>& gens) {
    std::vector<bool> in(parent->order(), false);
    std::vector<Elem> members{0}, frontier{0};
    in[0] = true;
    while (!frontier.empty()) {
      std::vector<Elem> next;
      for (Elem x : frontier)
        for (Elem s : gens) {
          Elem y = parent->mul(x, s);
          if (!in[y]) {
            in[y] = true;
            members.push_back(y);
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
    return make(std::move(parent), std::move(members));
  }

  static Subgroup whole(GroupPtr parent) {
    std::vector<Elem> all(parent->order());
    std::iota(all.begin(), all.end(), 0);
    return make(std::move(parent), std::move(all));
  }
  static Subgroup trivial(GroupPtr parent) { return make(std::move(parent), {0}); }

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Elem>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  std::size_t index() const { return parent_->order() / members_.size(); }
  bool contains(Elem g) const { return mask_[g]; }
  bool is_whole() const { return members_.size() == parent_->order(); }

  /// Subgroup as an abstract group; local index i corresponds to members()[i].
  GroupPtr as_group() const {
    const std::size_t n = members_.size();
    std::vector<Elem> local(parent_->order(), 0);
    for (std::size_t i = 0; i < n; ++i) local[members_[i]] = static_cast<Elem>(i);
    std::vector<Elem> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t[a * n + b] = local[parent_->mul(members_[a], members_[b])];
    return FiniteGroup::make(std::move(t), n, parent_->label() + "_sub" + std::to_string(n));
  }

  Subgroup conjugate(Elem g) const {
    std::vector<Elem> out;
    out.reserve(members_.size());
    for (Elem h : members_) out.push_back(parent_->conj(h, g));
    return make(parent_, std::move(out));
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return same_group(a.parent_, b.parent_) && a.members_ == b.members_;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) { return a.members_ < b.members_; }

 private:
  GroupPtr parent_;
  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

inline Subgroup centralizer(const GroupPtr& G, Elem g) {
  ensure(g < G->order(), ErrorCode::InvalidSpec, "element out of range");
  std::vector<Elem> members;
  for (Elem h = 0; h < G->order(); ++h)
    if (G->mul(h, g) == G->mul(g, h)) members.push_back(h);
  Subgroup c = Subgroup::make(G, std::move(members));
  ensure(c.order() * G->classes()[G->class_index(g)].members.size() == G->order(), ErrorCode::Internal,
         "orbit-stabilizer law violated for centralizer");
  return c;
}

/// All subgroups of G (brute force over generated subgroups; intended for small groups).
inline std::vector<Subgroup> all_subgroups(const GroupPtr& G) {
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> out;
  std::vector<Subgroup> frontier{Subgroup::trivial(G)};
  seen.insert(frontier.front().members());
  out.push_back(frontier.front());
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& h : frontier)
      for (Elem g = 0; g < G->order(); ++g) {
        if (h.contains(g)) continue;
        std::vector<Elem> gens = h.members();
        gens.push_back(g);
        Subgroup k = Subgroup::generated(G, gens);
        if (seen.insert(k.members()).second) {
          out.push_back(k);
          next.push_back(k);
        }
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return out;
}

/// Lexicographically least conjugate of H (by sorted member list).
inline Subgroup canonical_conjugate(const Subgroup& H) {
  Subgroup best = H;
  for (Elem g = 0; g < H.parent()->order(); ++g) {
    Subgroup c = H.conjugate(g);
    if (c.members() < best.members()) best = std::move(c);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Cosets

struct CosetSpace {
  Subgroup subgroup;
  std::vector<std::vector<Elem>> cosets;  // left cosets gH, ordered by least member
  std::vector<std::size_t> coset_of;      // element -> coset index
  /// action[g][i] = index of g * (coset i)
  std::vector<std::vector<std::size_t>> action;

  std::size_t size() const { return cosets.size(); }
};

inline CosetSpace coset_space(const GroupPtr& G, const Subgroup& H) {
  ensure(same_group(G, H.parent()), ErrorCode::NotASubgroup, "subgroup belongs to another group");
  CosetSpace cs{H, {}, std::vector<std::size_t>(G->order(), static_cast<std::size_t>(-1)), {}};
  for (Elem g = 0; g < G->order(); ++g) {
    if (cs.coset_of[g] != static_cast<std::size_t>(-1)) continue;
    std::vector<Elem> c;
    for (Elem h : H.members()) c.push_back(G->mul(g, h));
    std::sort(c.begin(), c.end());
    for (Elem x : c) cs.coset_of[x] = cs.cosets.size();
    cs.cosets.push_back(std::move(c));
  }
  cs.action.assign(G->order(), std::vector<std::size_t>(cs.cosets.size()));
  for (Elem g = 0; g < G->order(); ++g)
    for (std::size_t i = 0; i < cs.cosets.size(); ++i) cs.action[g][i] = cs.coset_of[G->mul(g, cs.cosets[i][0])];
  ensure(cs.cosets.size() * H.order() == G->order(), ErrorCode::Internal, "cosets do not partition G");
  for (Elem g = 0; g < G->order(); ++g)
    ensure((cs.action[g][0] == 0) == H.contains(g), ErrorCode::Internal, "stabilizer of the base coset is not H");
  return cs;
}

// ---------------------------------------------------------------------------
// Generating sets and abelianization

/// Deterministic small generating set: repeatedly adds the element whose
/// inclusion generates the largest subgroup (ties -> smallest index).
inline std::vector<Elem> small_generating_set(const GroupPtr& G) {
  std::vector<Elem> gens;
  Subgroup current = Subgroup::trivial(G);
  while (!current.is_whole()) {
    Elem best = 0;
    std::size_t best_size = 0;
    for (Elem g = 1; g < G->order(); ++g) {
      if (current.contains(g)) continue;
      std::vector<Elem> trial = gens;
      trial.push_back(g);
      std::size_t s = Subgroup::generated(G, trial).order();
      if (s > best_size) {
        best_size = s;
        best = g;
        if (s == G->order()) break;
      }
    }
    gens.push_back(best);
    current = Subgroup::generated(G, gens);
  }
  return gens;
}

struct Abelianization {
  Subgroup commutator_subgroup;
  std::vector<std::int64_t> invariant_factors;       // d1 | d2 | ..., all > 1
  std::vector<std::vector<std::int64_t>> projection;  // element -> coordinates mod d_i

  std::int64_t order() const {
    std::int64_t o = 1;
    for (auto d : invariant_factors) o *= d;
    return o;
  }
  std::int64_t exponent() const {
    std::int64_t e = 1;
    for (auto d : invariant_factors) e = lcm64(e, d);
    return e;
  }
};

inline Abelianization abelianization(const GroupPtr& G) {
  const std::size_t n = G->order();
  std::set<Elem> comm;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) comm.insert(G->commutator(a, b));
  Subgroup K = Subgroup::generated(G, {comm.begin(), comm.end()});

  // quotient G/K: coset labels of the normal subgroup K
  CosetSpace cs = coset_space(G, K);
  const std::size_t m = cs.size();
  auto qmul = [&](std::size_t x, std::size_t y) { return cs.coset_of[G->mul(cs.cosets[x][0], cs.cosets[y][0])]; };

  // generators of the quotient, lifted to coset indices
  std::vector<std::size_t> gens;
  {
    std::vector<bool> reached(m, false);
    reached[0] = true;
    std::vector<std::size_t> span{0};
    for (std::size_t cand = 1; cand < m; ++cand) {
      if (reached[cand]) continue;
      gens.push_back(cand);
      std::vector<std::size_t> frontier = span;
      while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t x : frontier)
          for (std::size_t s : gens) {
            std::size_t y = qmul(x, s);
            if (!reached[y]) {
              reached[y] = true;
              span.push_back(y);
              next.push_back(y);
            }
          }
        frontier = std::move(next);
      }
    }
  }
  const std::size_t r = gens.size();
  // spanning tree words as exponent vectors, then relations from non-tree edges
  std::vector<std::vector<std::int64_t>> word(m);
  word[0].assign(r, 0);
  std::vector<std::size_t> order{0};
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::size_t x = order[head];
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t y = qmul(x, gens[i]);
      if (!word[y].empty()) continue;
      word[y] = word[x];
      word[y][i] += 1;
      order.push_back(y);
    }
  }
  std::vector<std::vector<std::int64_t>> rels;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t y = qmul(x, gens[i]);
      std::vector<std::int64_t> rel(r);
      bool nonzero = false;
      for (std::size_t k = 0; k < r; ++k) {
        rel[k] = word[x][k] + (k == i ? 1 : 0) - word[y][k];
        nonzero = nonzero || rel[k] != 0;
      }
      if (nonzero) rels.push_back(std::move(rel));
    }
  IntMatrix R = rels.empty() ? IntMatrix(0, r) : IntMatrix::from_rows(rels);
  AbelianPresentation pres = abelian_presentation(R, r);

  Abelianization ab{K, pres.invariant_factors, {}};
  for (auto d : ab.invariant_factors)
    ensure(d > 1, ErrorCode::Internal, "abelianization of a finite group has a free part");
  ab.projection.resize(n);
  for (Elem g = 0; g < n; ++g) ab.projection[g] = pres.coordinates(word[cs.coset_of[g]]);
  return ab;
}

}  // namespace motivelab
