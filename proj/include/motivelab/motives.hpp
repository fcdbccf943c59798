#pragma once

// Motive skeletons: formal direct sums of atoms U^G(G acting on k twisted by
// alpha) and U^G(G acting on the coset set G/H), with hom ranks, restriction,
// localized comparison, the block decomposition of G-stable exceptional
// collections, and the Lefschetz (Chow-side) skeleton.

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "motivelab/cohomology.hpp"
#include "motivelab/twisted.hpp"

namespace motivelab {

/// Memoized Schur multiplier for groups appearing in skeletons.
inline const SchurMultiplier& schur_multiplier_cached(const GroupPtr& G) {
  static std::mutex mu;
  static std::vector<std::shared_ptr<const SchurMultiplier>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& m : cache)
      if (same_group(m->group(), G)) return *m;
  }
  auto m = std::make_shared<const SchurMultiplier>(schur_multiplier(G, 128));
  std::lock_guard<std::mutex> lock(mu);
  cache.push_back(m);
  return *m;
}

inline CohomClass trivial_class(const GroupPtr& G) {
  const auto& M = schur_multiplier_cached(G);
  return class_from_coordinates(M, std::vector<std::int64_t>(M.invariant_factors().size(), 0));
}

/// Restriction of a cocycle on G to H, as a cocycle on H.as_group().
inline TwoCocycle restrict_cocycle(const TwoCocycle& a, const Subgroup& H, const GroupPtr& local) {
  require_same_group(a.group, H.parent(), "cocycle restriction");
  ensure(local->order() == H.order(), ErrorCode::GroupMismatch, "local group does not match the subgroup");
  TwoCocycle r = trivial_cocycle(local, a.modulus);
  const auto& m = H.members();
  for (Elem i = 0; i < H.order(); ++i)
    for (Elem j = 0; j < H.order(); ++j) r.at(i, j) = a.at(m[i], m[j]);
  return r;
}

class MotiveAtom {
 public:
  enum class Kind { TwistedUnit, Induced };

  static MotiveAtom twisted_unit(CohomClass c) {
    MotiveAtom a;
    a.kind_ = Kind::TwistedUnit;
    a.group_ = c.group;
    a.class_ = std::move(c);
    return a;
  }
  static MotiveAtom twisted_unit(const TwoCocycle& alpha) {
    return twisted_unit(class_of(alpha, schur_multiplier_cached(alpha.group)));
  }
  /// Induced(G) is normalized to TwistedUnit(trivial); H is replaced by its least conjugate.
  static MotiveAtom induced(const Subgroup& H) {
    if (H.is_whole()) return twisted_unit(trivial_class(H.parent()));
    MotiveAtom a;
    a.kind_ = Kind::Induced;
    a.group_ = H.parent();
    a.subgroup_ = canonical_conjugate(H);
    return a;
  }

  Kind kind() const { return kind_; }
  bool is_twisted_unit() const { return kind_ == Kind::TwistedUnit; }
  const GroupPtr& group() const { return group_; }
  const CohomClass& cohom_class() const {
    ensure(kind_ == Kind::TwistedUnit, ErrorCode::UnsupportedAtom, "atom is not a twisted unit");
    return *class_;
  }
  const Subgroup& subgroup() const {
    ensure(kind_ == Kind::Induced, ErrorCode::UnsupportedAtom, "atom is not induced");
    return *subgroup_;
  }

  std::string str() const {
    if (kind_ == Kind::Induced) {
      std::string s = "Induced(H=<";
      const auto& m = subgroup_->members();
      for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
      return s + ">, index " + std::to_string(subgroup_->index()) + ")";
    }
    if (class_->is_trivial()) return "TwistedUnit(1)";
    std::string s = "TwistedUnit[";
    for (std::size_t i = 0; i < class_->coordinates.size(); ++i)
      s += (i ? "," : "") + std::to_string(class_->coordinates[i]);
    return s + "]";
  }

  friend bool operator==(const MotiveAtom& a, const MotiveAtom& b) {
    if (a.kind_ != b.kind_ || !same_group(a.group_, b.group_)) return false;
    return a.kind_ == Kind::TwistedUnit ? a.class_->coordinates == b.class_->coordinates
                                        : a.subgroup_->members() == b.subgroup_->members();
  }
  /// Canonical order: twisted units by class coordinates, then induced atoms by
  /// decreasing index and member list.
  friend bool operator<(const MotiveAtom& a, const MotiveAtom& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    if (a.kind_ == Kind::TwistedUnit) return a.class_->coordinates < b.class_->coordinates;
    if (a.subgroup_->order() != b.subgroup_->order()) return a.subgroup_->order() < b.subgroup_->order();
    return a.subgroup_->members() < b.subgroup_->members();
  }

 private:
  Kind kind_ = Kind::TwistedUnit;
  GroupPtr group_;
  std::optional<CohomClass> class_;
  std::optional<Subgroup> subgroup_;
};

class MotiveSkeleton {
 public:
  MotiveSkeleton() = default;
  MotiveSkeleton(GroupPtr G, std::vector<MotiveAtom> atoms) : group_(std::move(G)), atoms_(std::move(atoms)) {
    for (const auto& a : atoms_) require_same_group(group_, a.group(), "motive skeleton");
    std::sort(atoms_.begin(), atoms_.end());
  }
  const GroupPtr& group() const { return group_; }
  const std::vector<MotiveAtom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  MotiveSkeleton operator+(const MotiveSkeleton& o) const {
    require_same_group(group_, o.group_, "skeleton sum");
    auto all = atoms_;
    all.insert(all.end(), o.atoms_.begin(), o.atoms_.end());
    return {group_, std::move(all)};
  }
  friend bool operator==(const MotiveSkeleton& a, const MotiveSkeleton& b) {
    return same_group(a.group_, b.group_) && a.atoms_ == b.atoms_;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < atoms_.size(); ++i) s += (i ? " + " : "") + atoms_[i].str();
    return s.empty() ? "0" : s;
  }

 private:
  GroupPtr group_;
  std::vector<MotiveAtom> atoms_;
};

// ---------------------------------------------------------------------------
// Exceptional collections

struct CollectionBlock {
  std::size_t length = 1;
  Subgroup stabilizer;
  std::optional<std::vector<std::int64_t>> cocycle_class;  // required iff stabilizer = G
};

struct CollectionSpec {
  GroupPtr group;
  std::vector<CollectionBlock> blocks;

  std::size_t total_length() const {
    std::size_t s = 0;
    for (const auto& b : blocks) s += b.length;
    return s;
  }
};

/// One atom per block: TwistedUnit(alpha_i) when the block is G-invariant,
/// Induced(H_i) when G permutes its objects transitively.
inline MotiveSkeleton decompose_collection(const CollectionSpec& spec) {
  std::vector<MotiveAtom> atoms;
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    const auto& b = spec.blocks[i];
    const std::string where = "block " + std::to_string(i);
    require_same_group(spec.group, b.stabilizer.parent(), where);
    ensure(b.length == b.stabilizer.index(), ErrorCode::StabilizerIndexMismatch,
           where + ": length " + std::to_string(b.length) + " differs from the stabilizer index " +
               std::to_string(b.stabilizer.index()));
    if (b.stabilizer.is_whole()) {
      ensure(b.cocycle_class.has_value(), ErrorCode::InvalidSpec, where + ": a G-invariant block needs a cocycle class");
      atoms.push_back(MotiveAtom::twisted_unit(class_from_coordinates(schur_multiplier_cached(spec.group), *b.cocycle_class)));
    } else {
      ensure(!b.cocycle_class.has_value(), ErrorCode::InvalidSpec,
             where + ": a cocycle class is only meaningful for G-invariant blocks");
      const auto& MH = schur_multiplier_cached(b.stabilizer.as_group());
      ensure(MH.order() == 1, ErrorCode::NonTrivialStabilizerH2,
             where + ": stabilizer has Schur multiplier " + format_invariant_factors(MH.invariant_factors()));
      atoms.push_back(MotiveAtom::induced(b.stabilizer));
    }
  }
  MotiveSkeleton sk(spec.group, std::move(atoms));
  return sk;
}

// ---------------------------------------------------------------------------
// Hom ranks

inline std::size_t hom_rank(const MotiveAtom& a, const MotiveAtom& b) {
  require_same_group(a.group(), b.group(), "hom rank");
  using K = MotiveAtom::Kind;
  if (a.kind() == K::TwistedUnit && b.kind() == K::TwistedUnit) {
    const auto& alpha = a.cohom_class().representative;
    const auto& beta = b.cohom_class().representative;
    return alpha_regular(cocycle_mul(alpha, cocycle_inverse(beta))).count;
  }
  if (a.kind() != b.kind()) {
    const Subgroup& H = a.kind() == K::Induced ? a.subgroup() : b.subgroup();
    const auto& beta = a.kind() == K::Induced ? b.cohom_class().representative : a.cohom_class().representative;
    return alpha_regular(restrict_cocycle(beta, H, H.as_group())).count;
  }
  // Induced(H1) -> Induced(H2): H1-orbits on G/H2, each contributing #classes of its stabilizer
  const Subgroup& H1 = a.subgroup();
  const Subgroup& H2 = b.subgroup();
  CosetSpace cs = coset_space(a.group(), H2);
  std::vector<bool> seen(cs.size(), false);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cs.size(); ++c) {
    if (seen[c]) continue;
    std::vector<Elem> stab;
    for (Elem h : H1.members()) {
      seen[cs.action[h][c]] = true;
      if (cs.action[h][c] == c) stab.push_back(h);
    }
    rank += Subgroup::make(a.group(), stab).as_group()->num_classes();
  }
  return rank;
}

inline std::size_t skeleton_hom_rank(const MotiveSkeleton& A, const MotiveSkeleton& B) {
  if (A.group() && B.group()) require_same_group(A.group(), B.group(), "skeleton hom rank");
  std::size_t r = 0;
  for (const auto& a : A.atoms())
    for (const auto& b : B.atoms()) r += hom_rank(a, b);
  return r;
}

/// Number of non-equivariant unit atoms after forgetting the G-action.
inline std::size_t restrict_skeleton(const MotiveSkeleton& A) {
  std::size_t r = 0;
  for (const auto& a : A.atoms()) r += a.is_twisted_unit() ? 1 : a.subgroup().index();
  return r;
}

/// Isomorphism after localization at the augmentation ideal (twisted units only).
inline bool localized_isomorphic(const MotiveSkeleton& A, const MotiveSkeleton& B) {
  for (const auto* S : {&A, &B})
    for (const auto& a : S->atoms())
      ensure(a.is_twisted_unit(), ErrorCode::UnsupportedAtom,
             "localized comparison is only available for twisted units, got " + a.str());
  if (A.group() && B.group()) require_same_group(A.group(), B.group(), "localized comparison");
  return A.size() == B.size();
}

/// Atoms with identical hom ranks against every twisted unit and every
/// induced atom of G; such pairs are reported, never identified.
inline bool possibly_isomorphic(const MotiveAtom& a, const MotiveAtom& b) {
  require_same_group(a.group(), b.group(), "hom profile");
  const GroupPtr& G = a.group();
  const auto& M = schur_multiplier_cached(G);
  std::vector<MotiveAtom> battery;
  std::vector<std::int64_t> coords(M.invariant_factors().size(), 0);
  while (true) {
    battery.push_back(MotiveAtom::twisted_unit(class_from_coordinates(M, coords)));
    std::size_t i = 0;
    while (i < coords.size() && ++coords[i] == M.invariant_factors()[i]) coords[i++] = 0;
    if (i == coords.size()) break;
  }
  for (const auto& H : all_subgroups(G))
    if (!H.is_whole() && canonical_conjugate(H) == H) battery.push_back(MotiveAtom::induced(H));
  for (const auto& t : battery)
    if (hom_rank(a, t) != hom_rank(b, t) || hom_rank(t, a) != hom_rank(t, b)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Chow side

struct ChowSkeleton {
  std::vector<std::int64_t> exponents;  // ascending Lefschetz exponents

  friend bool operator==(const ChowSkeleton&, const ChowSkeleton&) = default;
  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < exponents.size(); ++i) s += (i ? "," : "") + std::to_string(exponents[i]);
    return s + "}";
  }
};

/// Exponent r occurs with multiplicity b_{2r}; betti = (b_0, ..., b_{2d}).
inline ChowSkeleton chow_skeleton(const std::vector<std::int64_t>& betti) {
  ChowSkeleton c;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    ensure(betti[i] >= 0, ErrorCode::InvalidSpec, "Betti numbers must be nonnegative");
    if (i % 2 == 1) continue;
    for (std::int64_t k = 0; k < betti[i]; ++k) c.exponents.push_back(static_cast<std::int64_t>(i / 2));
  }
  return c;
}

/// Odd cohomology must vanish and the total Betti number must equal the
/// length of the exceptional collection.
inline void check_via(const std::vector<std::int64_t>& betti, std::size_t collection_length) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    ensure(i % 2 == 0 || betti[i] == 0, ErrorCode::OddCohomology,
           "b_" + std::to_string(i) + " = " + std::to_string(betti[i]) +
               " is nonzero; no full exceptional collection can exist");
    total += betti[i];
  }
  ensure(total == static_cast<std::int64_t>(collection_length), ErrorCode::LengthMismatch,
         "total Betti number " + std::to_string(total) + " differs from collection length " +
             std::to_string(collection_length));
}

}  // namespace motivelab
