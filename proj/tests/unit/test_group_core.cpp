#include <gtest/gtest.h>

#include <set>

#include "noether/catalog.hpp"
#include "noether/error.hpp"
#include "noether/perm_group.hpp"
#include "properties.hpp"

using namespace noether;

namespace {

// Closure by repeated multiplication of a sorted set, independent of the library's BFS.
std::size_t naive_order(const std::vector<Permutation>& gens, std::size_t degree) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Permutation> current(seen.begin(), seen.end());
    for (const auto& x : current) {
      for (const auto& g : gens) {
        if (seen.insert(g * x).second) grew = true;
      }
    }
  }
  return seen.size();
}

}  // namespace

TEST(Permutation, ProductOfCyclesActsRightToLeft) {
  EXPECT_EQ(Permutation::parse("(1,2)(2,3)", 3), Permutation::parse("(1,2,3)", 3));
  Permutation a = Permutation::parse("(1,2)", 3), b = Permutation::parse("(2,3)", 3);
  EXPECT_EQ((a * b)(1), 2u);
  EXPECT_EQ((a * b)(3), 1u);
}

TEST(Permutation, PrintsDisjointCycles) {
  EXPECT_EQ(Permutation::parse("(3,1,2)(5,4)", 6).to_string(), "(1,2,3)(4,5)");
  EXPECT_EQ(Permutation::identity(4).to_string(), "()");
  EXPECT_EQ(Permutation::parse("()", 4), Permutation::identity(4));
}

TEST(Permutation, Invariants) {
  Permutation p = Permutation::parse("(1,2,3)(4,5)", 6);
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(p.sign(), -1);
  EXPECT_EQ(p.fixed_points(), 1u);
  EXPECT_EQ(p.cycle_type(), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(p * p.inverse(), Permutation::identity(6));
  EXPECT_EQ(power(p, -1), p.inverse());
  EXPECT_EQ(conjugate(Permutation::parse("(1,2)", 3), Permutation::parse("(2,3)", 3)), Permutation::parse("(1,3)", 3));
}

TEST(Permutation, RejectsMalformedText) {
  EXPECT_THROW(Permutation::parse("(1,2", 3), ParseError);
  EXPECT_THROW(Permutation::parse("1,2)", 3), ParseError);
  EXPECT_THROW(Permutation::parse("(1,1)", 3), ParseError);
  EXPECT_THROW(Permutation::parse("(1,,2)", 3), ParseError);
  EXPECT_THROW(Permutation::parse("(1,7)", 6), Error);
  EXPECT_THROW(Permutation::parse("(1,2)", 0), DomainError);
  std::vector<Point> bad{1, 1, 2};
  EXPECT_THROW(Permutation::from_images(bad), DomainError);
}

TEST(Permutation, LabeledCycles) {
  std::vector<std::string> labels{"0", "1", "2", "3", "4", "oo"};
  EXPECT_EQ(Permutation::parse_labeled("(0,oo)(1,4)", labels), Permutation::parse("(1,6)(2,5)", 6));
  EXPECT_THROW(Permutation::parse_labeled("(0,7)", labels), Error);
}

TEST(PermGroup, StandardFamilies) {
  std::uint64_t fact = 1;
  for (std::size_t n = 1; n <= 7; ++n) {
    fact *= n;
    EXPECT_EQ(PermGroup::symmetric(n).order(), fact) << n;
    EXPECT_EQ(PermGroup::cyclic(n).order(), n) << n;
    EXPECT_EQ(PermGroup::trivial(n).order(), 1u);
  }
  EXPECT_TRUE(PermGroup::symmetric(3).elements().front().is_identity());
}

TEST(PermGroup, SpecRoundTrip) {
  PermGroup g = PermGroup::parse("degree=6; (1,2,3)(4,5,6) (1,4)");
  EXPECT_EQ(g.degree(), 6u);
  EXPECT_EQ(g.order(), 24u);
  EXPECT_TRUE(same_elements(PermGroup::parse(g.to_spec()), g));
  EXPECT_THROW(PermGroup::parse("(1,2)"), ParseError);
  EXPECT_THROW(PermGroup::parse("degree=x; (1,2)"), ParseError);
  EXPECT_THROW(PermGroup(0, {}), DomainError);
  EXPECT_THROW(PermGroup(3, {Permutation::parse("(1,2)", 4)}), DomainError);
}

TEST(PermGroup, EnumerationCap) {
  EXPECT_THROW(PermGroup::symmetric(8).elements(1000), CapExceeded);
}

TEST(PermGroup, OrbitsAndStabilizers) {
  PermGroup g = PermGroup::parse("degree=6; (1,2,3) (4,5)");
  EXPECT_FALSE(g.is_transitive());
  EXPECT_EQ(g.orbits().size(), 3u);
  EXPECT_EQ(g.orbit(4), (std::vector<Point>{4, 5}));
  for (const auto& e : catalog()) {
    PermGroup h = e.group();
    for (Point p = 1; p <= 6; ++p) EXPECT_EQ(h.orbit(p).size() * h.stabilizer(p).size(), h.order()) << e.id;
  }
}

TEST(PermGroup, Conjugacy) {
  PermGroup a(4, {Permutation::parse("(1,2)(3,4)", 4)});
  PermGroup b(4, {Permutation::parse("(1,3)(2,4)", 4)});
  ConjugacyResult c = are_conjugate(4, a, b);
  ASSERT_TRUE(c.conjugate);
  for (const auto& x : a.elements()) EXPECT_TRUE(b.contains(conjugate(x, *c.witness)));
  PermGroup d(4, {Permutation::parse("(1,2)", 4)});
  EXPECT_FALSE(are_conjugate(4, a, d).conjugate);
  EXPECT_THROW(are_conjugate(10, PermGroup::trivial(10), PermGroup::trivial(10)), DomainError);
}

TEST(PermGroup, SubgroupsAndEvenPart) {
  EXPECT_TRUE(is_subgroup(PermGroup::cyclic(5), PermGroup::symmetric(5)));
  EXPECT_FALSE(is_subgroup(PermGroup::symmetric(5), PermGroup::cyclic(5)));
  EXPECT_EQ(even_part(PermGroup::symmetric(5)).order(), 60u);
}

TEST(Catalog, OrdersAgreeWithNaiveClosure) {
  // Frozen from naive_order, the independent closure above.
  const std::uint64_t orders[16] = {6, 6, 12, 48, 24, 24, 12, 24, 72, 36, 36, 18, 120, 60, 360, 720};
  const auto& cat = catalog();
  ASSERT_EQ(cat.size(), 16u);
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_EQ(cat[i].id, "G" + std::to_string(i + 1));
    EXPECT_EQ(cat[i].order, orders[i]) << cat[i].id;
    if (orders[i] <= 120) EXPECT_EQ(naive_order(cat[i].generators, 6), orders[i]) << cat[i].id;
    EXPECT_TRUE(cat[i].group().is_transitive()) << cat[i].id;
  }
}

TEST(Catalog, Lookup) {
  EXPECT_EQ(catalog_entry("g13").id, "G13");
  EXPECT_THROW(catalog_entry("G17"), DomainError);
  EXPECT_TRUE(relabeled_generators("G5").empty());
}

TEST(Catalog, ProjectiveEntriesMatchTheirRelabeling) {
  for (const char* id : {"G13", "G14"}) {
    PermGroup relabeled(6, relabeled_generators(id));
    EXPECT_TRUE(same_elements(relabeled, catalog_entry(id).group())) << id;
  }
  // The non-disjoint printed product (0,oo)(1,4)(1,2,4,3) equals the stored generator.
  std::vector<std::string> labels{"0", "1", "2", "3", "4", "oo"};
  EXPECT_EQ(Permutation::parse_labeled("(0,oo)(1,4)(1,2,4,3)", labels), catalog_entry("G13").generators[1]);
  EXPECT_EQ(projective_line_permutation(1, 1, 0, 1, 5), Permutation::parse("(1,2,3,4,5)", 6));
}

TEST(Properties, GroupAxioms) {
  auto r = noether::testing::group_axioms(200, 11);
  EXPECT_GE(r.trials, 100u);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}
