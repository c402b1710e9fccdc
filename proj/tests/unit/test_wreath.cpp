#include <gtest/gtest.h>

#include "noether/catalog.hpp"
#include "noether/error.hpp"
#include "noether/regular_embedding.hpp"
#include "noether/wreath.hpp"
#include "properties.hpp"

using namespace noether;

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST(Wreath, PointIndexingRoundTrip) {
  PointIndexing idx{3, 4};
  for (Point i = 1; i <= 3; ++i) {
    for (Point j = 1; j <= 4; ++j) {
      Point p = idx.point(j, i);
      EXPECT_EQ(p, (i - 1) * 4 + j);
      EXPECT_EQ(idx.coords(p), std::make_pair(j, i));
    }
  }
}

TEST(Wreath, OrderFormula) {
  const std::pair<PermGroup, PermGroup> fixtures[] = {
      {PermGroup::symmetric(3), PermGroup::symmetric(2)}, {PermGroup::cyclic(2), PermGroup::cyclic(3)},
      {PermGroup::cyclic(2), PermGroup::symmetric(3)},    {PermGroup::cyclic(3), PermGroup::cyclic(2)},
      {PermGroup::cyclic(2), PermGroup::cyclic(2)},       {PermGroup::trivial(1), PermGroup::symmetric(4)},
  };
  for (const auto& [g, h] : fixtures) {
    WreathSpec spec{g, h};
    PermGroup w = wreath_product(spec);
    EXPECT_EQ(w.degree(), g.degree() * h.degree());
    EXPECT_EQ(w.order(), ipow(h.order(), g.degree()) * g.order());
    EXPECT_TRUE(w.is_transitive() == (g.is_transitive() && h.is_transitive()));
  }
}

TEST(Wreath, BuildingBlocks) {
  WreathSpec spec{PermGroup::symmetric(2), PermGroup::cyclic(3)};
  Permutation a = alpha_generator(2, Permutation::parse("(1,2,3)", 3), spec);
  EXPECT_EQ(a, Permutation::parse("(4,5,6)", 6));
  EXPECT_EQ(block_permutation(Permutation::parse("(1,2)", 2), 3), Permutation::parse("(1,4)(2,5)(3,6)", 6));
  EXPECT_EQ(direct_product(PermGroup::symmetric(2), PermGroup::cyclic(3)).order(), 6u);
}

TEST(Wreath, SemidirectProductMatchesPermutationAction) {
  WreathSpec spec{PermGroup::symmetric(3), PermGroup::cyclic(3)};
  PointIndexing idx{3, 3};
  std::uint64_t state = 5;
  const auto& hs = spec.h.elements();
  const auto& gs = spec.g.elements();
  auto random_element = [&] {
    WreathElement e;
    for (int i = 0; i < 3; ++i) e.alpha.push_back(hs[noether::testing::random_permutation(hs.size(), state)(1) - 1]);
    e.g = gs[noether::testing::random_permutation(gs.size(), state)(1) - 1];
    return e;
  };
  PermGroup w = wreath_product(spec);
  for (int t = 0; t < 100; ++t) {
    WreathElement a = random_element(), b = random_element();
    Permutation pa = to_permutation(a, idx), pb = to_permutation(b, idx);
    EXPECT_EQ(to_permutation(wreath_multiply(a, b), idx), pa * pb);
    EXPECT_TRUE(w.contains(pa));
  }
}

TEST(Wreath, LegendreValuation) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t n = 0; n <= 30; ++n) {
      std::uint64_t v = 0;
      for (std::uint64_t k = 2; k <= n; ++k) {
        for (std::uint64_t x = k; x % p == 0; x /= p) ++v;
      }
      EXPECT_EQ(legendre_valuation(p, n), v) << p << " " << n;
    }
  }
}

TEST(Wreath, SylowSubgroups) {
  EXPECT_EQ(sylow_tower(2, 1).order(), 2u);
  EXPECT_EQ(sylow_tower(2, 2).order(), 8u);
  EXPECT_EQ(sylow_tower(3, 2).order(), 81u);
  EXPECT_EQ(sylow_tower(2, 3).order(), 128u);
  const std::pair<std::uint64_t, std::size_t> cases[] = {{2, 4}, {2, 6}, {3, 9}, {2, 8}, {3, 7}, {5, 10}, {2, 1}, {7, 6}};
  for (auto [p, n] : cases) {
    PermGroup s = sylow_subgroup_sn(p, n);
    EXPECT_EQ(s.degree(), n);
    EXPECT_EQ(s.order(), ipow(p, legendre_valuation(p, n))) << p << " " << n;
    if (n <= 8) EXPECT_TRUE(is_subgroup(s, PermGroup::symmetric(n)));
  }
}

TEST(Wreath, ProductEmbeddingHasOneDimensionalKernel) {
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{2, 3}, {1, 1}, {3, 3}, {1, 4}}) {
    ProductEmbeddingReport r = product_embedding_check(PermGroup::symmetric(m), PermGroup::symmetric(n));
    EXPECT_TRUE(r.equivariant);
    EXPECT_EQ(r.rank, m + n - 1);
    EXPECT_FALSE(r.injective);
    ASSERT_EQ(r.matrix.size(), m + n);
    EXPECT_EQ(r.matrix[0].size(), m * n);
  }
}

TEST(RegularEmbedding, CatalogEntries) {
  for (const auto& e : catalog()) {
    RegularEmbedding r = regular_embedding(e.group());
    EXPECT_TRUE(r.equivariant) << e.id;
    EXPECT_TRUE(r.injective) << e.id;
    EXPECT_EQ(r.coset_reps.size(), 6u);
    EXPECT_EQ(r.stabilizer.size() * 6, e.order);
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(r.coset_reps[i](1), i + 1);
    // Each row holds one stabilizer coset.
    for (const auto& row : r.matrix) {
      std::size_t ones = 0;
      for (int v : row) ones += static_cast<std::size_t>(v);
      EXPECT_EQ(ones, r.stabilizer.size());
    }
  }
}

TEST(RegularEmbedding, RejectsIntransitiveGroups) {
  EXPECT_THROW(regular_embedding(PermGroup::parse("degree=6; (1,2)")), NotTransitive);
  EXPECT_THROW(regular_embedding(PermGroup::trivial(2)), NotTransitive);
  EXPECT_NO_THROW(regular_embedding(PermGroup::trivial(1)));
}
