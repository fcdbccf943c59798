#include <gtest/gtest.h>

#include <bit>

#include "motivelab/catalog.hpp"

using namespace motivelab;

namespace {

// Schubert cells of Gr(n, d): n-subsets {i_1 < ... < i_n} of {0..d-1}, cell dimension sum(i_j - (j-1)).
std::vector<std::int64_t> schubert_betti(std::int64_t n, std::int64_t d) {
  std::vector<std::int64_t> b(static_cast<std::size_t>(2 * n * (d - n) + 1), 0);
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    if (std::popcount(mask) != n) continue;
    std::int64_t dim = 0, j = 0;
    for (std::int64_t i = 0; i < d; ++i)
      if (mask >> i & 1u) dim += i - j++;
    ++b[static_cast<std::size_t>(2 * dim)];
  }
  return b;
}

std::int64_t binom(std::int64_t d, std::int64_t n) {
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= n; ++i) r = r * (d - n + i) / i;
  return r;
}

Subgroup index_two(const GroupPtr& G) {
  for (const auto& H : all_subgroups(G))
    if (H.index() == 2) return H;
  throw std::logic_error("no index-two subgroup");
}

std::vector<CatalogEntry> whole_catalog() {
  std::vector<CatalogEntry> out{catalog_lookup("point"), catalog_lookup("del_pezzo_bl2"),
                                catalog_lookup("del_pezzo_bl1")};
  for (std::int64_t k = 1; k <= 5; ++k) out.push_back(catalog_lookup("disjoint_points", {k}));
  for (std::int64_t n = 0; n <= 12; ++n) out.push_back(catalog_lookup("projective_space", {n}));
  for (std::int64_t d = 1; d <= 9; d += 2) out.push_back(catalog_lookup("quadric_odd", {d}));
  for (std::int64_t d = 2; d <= 10; d += 2) out.push_back(catalog_lookup("quadric_even", {d}));
  for (std::int64_t d = 1; d <= 8; ++d)
    for (std::int64_t n = 1; n <= d; ++n) out.push_back(catalog_lookup("grassmannian", {n, d}));
  return out;
}

}  // namespace

TEST(Catalog, LookupExamples) {
  auto p2 = catalog_lookup("projective_space:2");
  EXPECT_EQ(p2.collection_length(), 3u);
  EXPECT_EQ(p2.betti, (std::vector<std::int64_t>{1, 0, 1, 0, 1}));
  auto dp = catalog_lookup("del_pezzo_bl2");
  EXPECT_EQ(dp.collection_length(), 5u);
  EXPECT_EQ(dp.betti, (std::vector<std::int64_t>{1, 0, 3, 0, 1}));
  EXPECT_EQ(catalog_lookup("quadric_even:2").collection_length(), 4u);
  EXPECT_EQ(catalog_lookup("quadric_odd:3").collection_length(), 4u);
  EXPECT_EQ(catalog_lookup("grassmannian:2,4").collection_length(), 6u);
  EXPECT_EQ(catalog_lookup("grassmannian:2,4").betti, (std::vector<std::int64_t>{1, 0, 1, 0, 2, 0, 1, 0, 1}));
  EXPECT_EQ(catalog_lookup("grassmannian:2,4").label(), "grassmannian:2,4");
}

TEST(Catalog, Errors) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  EXPECT_EQ(code([] { catalog_lookup("k3_surface"); }), ErrorCode::UnknownEntry);
  EXPECT_EQ(code([] { catalog_lookup("projective_space:13"); }), ErrorCode::ParamRange);
  EXPECT_EQ(code([] { catalog_lookup("quadric_odd:4"); }), ErrorCode::ParamRange);
  EXPECT_EQ(code([] { catalog_lookup("quadric_even:12"); }), ErrorCode::ParamRange);
  EXPECT_EQ(code([] { catalog_lookup("grassmannian:2,9"); }), ErrorCode::ParamRange);
  EXPECT_EQ(code([] { catalog_lookup("grassmannian:2"); }), ErrorCode::ParamRange);
  EXPECT_EQ(code([] { catalog_lookup("projective_space:x"); }), ErrorCode::ParamRange);
}

TEST(Catalog, GrassmannianBettiMatchesSchubertCells) {
  for (std::int64_t d = 1; d <= 8; ++d)
    for (std::int64_t n = 1; n <= d; ++n) {
      auto e = catalog_lookup("grassmannian", {n, d});
      EXPECT_EQ(e.betti, schubert_betti(n, d)) << e.label();
      EXPECT_EQ(static_cast<std::int64_t>(e.collection_length()), binom(d, n));
    }
}

TEST(Catalog, WholeCatalogInvariants) {
  for (const auto& e : whole_catalog()) {
    EXPECT_NO_THROW(check_via(e)) << e.label();
    std::int64_t sum = 0, diag = 0, even = 0;
    for (std::size_t i = 0; i < e.betti.size(); ++i) {
      sum += e.betti[i];
      if (i % 2 == 0) even += e.betti[i];
    }
    for (std::size_t p = 0; p < e.hodge.size(); ++p)
      for (std::size_t q = 0; q < e.hodge.size(); ++q) {
        if (p == q) diag += e.hodge[p][q];
        else EXPECT_EQ(e.hodge[p][q], 0);
      }
    EXPECT_EQ(diag, even);
    EXPECT_EQ(static_cast<std::size_t>(sum), e.collection_length()) << e.label();
    EXPECT_EQ(e.betti.size(), static_cast<std::size_t>(2 * e.dimension + 1));
    EXPECT_EQ(chow_skeleton(e).exponents.size(), e.collection_length());
    for (auto r : chow_skeleton(e).exponents) EXPECT_LE(r, e.dimension);
  }
}

TEST(Catalog, TrivialActionInstantiation) {
  auto S3 = symmetric_group(3);
  for (const auto& e : whole_catalog()) {
    auto spec = instantiate(e, ActionSpec::trivial(S3));
    EXPECT_EQ(spec.total_length(), e.collection_length());
    auto sk = decompose_collection(spec);
    for (const auto& a : sk.atoms()) {
      ASSERT_TRUE(a.is_twisted_unit());
      EXPECT_TRUE(a.cohom_class().is_trivial());
    }
    EXPECT_EQ(sk.size(), e.collection_length());
  }
}

TEST(Catalog, ProjectiveSpaceWithClass) {
  auto E4 = elementary_abelian_group(2, 2);
  ActionSpec act{E4, {{"alpha", {1}}}, std::nullopt, {}};
  auto sk = decompose_collection(instantiate(catalog_lookup("projective_space:3"), act));
  // 1, alpha, alpha^2 = 1, alpha^3 = alpha
  std::size_t trivial = 0;
  for (const auto& a : sk.atoms()) trivial += a.cohom_class().is_trivial();
  EXPECT_EQ(trivial, 2u);
  EXPECT_EQ(sk.size(), 4u);

  auto E9 = elementary_abelian_group(3, 2);
  ActionSpec act9{E9, {{"alpha", {1}}}, std::nullopt, {}};
  auto sk9 = decompose_collection(instantiate(catalog_lookup("projective_space:2"), act9));
  std::vector<std::vector<std::int64_t>> coords;
  for (const auto& a : sk9.atoms()) coords.push_back(a.cohom_class().coordinates);
  EXPECT_EQ(coords, (std::vector<std::vector<std::int64_t>>{{0}, {1}, {2}}));
}

TEST(Catalog, EvenQuadricSwap) {
  auto C2 = cyclic_group(2);
  ActionSpec act{C2, {}, Subgroup::trivial(C2), {}};
  auto spec = instantiate(catalog_lookup("quadric_even:2"), act);
  ASSERT_EQ(spec.blocks.size(), 3u);
  EXPECT_EQ(spec.blocks[0].length, 2u);
  EXPECT_EQ(spec.blocks[0].stabilizer.order(), 1u);
  auto sk = decompose_collection(spec);
  EXPECT_EQ(restrict_skeleton(sk), 4u);
  EXPECT_EQ(sk.atoms().back(), MotiveAtom::induced(Subgroup::trivial(C2)));
}

TEST(Catalog, DelPezzoCases) {
  auto E4 = elementary_abelian_group(2, 2);
  auto H = index_two(E4);
  // latter case: E1, E2 swapped
  ActionSpec swapped{E4, {{"alpha", {1}}}, H, {}};
  auto sk = decompose_collection(instantiate(catalog_lookup("del_pezzo_bl2"), swapped));
  const auto& M = schur_multiplier_cached(E4);
  auto u = [&](std::int64_t c) { return MotiveAtom::twisted_unit(class_from_coordinates(M, {c})); };
  EXPECT_EQ(sk, MotiveSkeleton(E4, {MotiveAtom::induced(H), u(0), u(1), u(0)}));
  EXPECT_EQ(restrict_skeleton(sk), 5u);
  // former case: both invariant, classes gamma, beta
  ActionSpec fixed{E4, {{"alpha", {1}}, {"beta", {1}}, {"gamma", {0}}}, std::nullopt, {}};
  auto sk2 = decompose_collection(instantiate(catalog_lookup("del_pezzo_bl2"), fixed));
  EXPECT_EQ(sk2, MotiveSkeleton(E4, {u(0), u(1), u(0), u(1), u(0)}));
}

TEST(Catalog, DisjointPoints) {
  auto C2 = cyclic_group(2);
  ActionSpec swap{C2, {}, std::nullopt, {Subgroup::trivial(C2)}};
  auto sk = decompose_collection(instantiate(catalog_lookup("disjoint_points:2"), swap));
  EXPECT_EQ(sk, MotiveSkeleton(C2, {MotiveAtom::induced(Subgroup::trivial(C2))}));
  auto sk3 = decompose_collection(instantiate(catalog_lookup("disjoint_points:3"), swap));
  EXPECT_EQ(sk3.size(), 2u);
  EXPECT_EQ(restrict_skeleton(sk3), 3u);
}

TEST(Catalog, InconsistentActions) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  auto C2 = cyclic_group(2);
  auto E4 = elementary_abelian_group(2, 2);
  EXPECT_EQ(code([&] { instantiate(catalog_lookup("projective_space:2"), {C2, {}, Subgroup::trivial(C2), {}}); }),
            ErrorCode::InconsistentAction);
  EXPECT_EQ(code([&] { instantiate(catalog_lookup("quadric_even:2"), {E4, {}, Subgroup::trivial(E4), {}}); }),
            ErrorCode::InconsistentAction);
  EXPECT_EQ(code([&] { instantiate(catalog_lookup("projective_space:2"), {E4, {{"beta", {1}}}, std::nullopt, {}}); }),
            ErrorCode::InconsistentAction);
  EXPECT_EQ(code([&] { instantiate(catalog_lookup("projective_space:2"), {E4, {{"alpha", {1, 0}}}, std::nullopt, {}}); }),
            ErrorCode::InconsistentAction);
  EXPECT_EQ(code([&] {
              instantiate(catalog_lookup("disjoint_points:1"), {C2, {}, std::nullopt, {Subgroup::trivial(C2)}});
            }),
            ErrorCode::InconsistentAction);
  EXPECT_EQ(code([&] {
              instantiate(catalog_lookup("point"), {C2, {}, std::nullopt, {Subgroup::trivial(C2)}});
            }),
            ErrorCode::InconsistentAction);
}

TEST(Catalog, ChowVersusNoncommutative) {
  auto C2 = cyclic_group(2);
  auto p1 = catalog_lookup("projective_space:1");
  auto pts = catalog_lookup("disjoint_points:2");
  EXPECT_EQ(decompose_collection(instantiate(p1, ActionSpec::trivial(C2))),
            decompose_collection(instantiate(pts, ActionSpec::trivial(C2))));
  EXPECT_EQ(chow_skeleton(p1).exponents, (std::vector<std::int64_t>{0, 1}));
  EXPECT_EQ(chow_skeleton(pts).exponents, (std::vector<std::int64_t>{0, 0}));
  EXPECT_EQ(chow_skeleton(catalog_lookup("del_pezzo_bl2")).exponents, (std::vector<std::int64_t>{0, 1, 1, 1, 2}));
}
