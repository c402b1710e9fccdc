#include <gtest/gtest.h>

#include <set>

#include "noether/catalog.hpp"
#include "noether/character.hpp"

using namespace noether;

namespace {

// Orbits on ordered pairs, counted directly; equals <chi, chi> by Burnside.
std::size_t pair_orbits(const PermGroup& g) {
  std::set<std::pair<Point, Point>> seen;
  std::size_t orbits = 0;
  for (Point a = 1; a <= g.degree(); ++a) {
    for (Point b = 1; b <= g.degree(); ++b) {
      if (seen.count({a, b})) continue;
      ++orbits;
      for (const auto& s : g.elements()) seen.insert({s(a), s(b)});
    }
  }
  return orbits;
}

}  // namespace

TEST(Rho, StandardImagesSatisfyTheCoxeterRelations) {
  Report r = verify_presentation_hom(PresentationImages::standard());
  EXPECT_EQ(r.claims.size(), 10u);
  EXPECT_TRUE(r.ok()) << to_text(r);
}

TEST(Rho, Image) {
  Report r = verify_rho_image(PresentationImages::standard());
  EXPECT_TRUE(r.ok()) << to_text(r);
  EXPECT_EQ(r.claims.size(), 7u);
}

TEST(Rho, PerturbedImageFails) {
  PresentationImages bad = PresentationImages::standard();
  bad.images[0] = Permutation::parse("(1,6)(2,3)", 6);
  EXPECT_FALSE(verify_presentation_hom(bad).ok());
  EXPECT_FALSE(verify_rho_image(bad).ok());
}

TEST(Characters, InnerProductsCountOrbits) {
  for (const auto& e : catalog()) {
    PermGroup g = e.group();
    InnerProducts ip = character_inner_products(g);
    EXPECT_EQ(ip.with_trivial, g.orbits().size()) << e.id;
    EXPECT_EQ(ip.with_self, pair_orbits(g)) << e.id;
    EXPECT_EQ(is_two_transitive(g), pair_orbits(g) == 2) << e.id;
    EXPECT_TRUE(is_class_function(g));
    EXPECT_TRUE(character_report(e.id).ok()) << e.id;
  }
}

TEST(Characters, ProjectiveGroupsAreTwoTransitive) {
  for (const char* id : {"G13", "G14"}) {
    InnerProducts ip = character_inner_products(catalog_entry(id).group());
    EXPECT_EQ(ip.with_trivial, 1);
    EXPECT_EQ(ip.with_self, 2);
    Report r = character_report(id);
    EXPECT_EQ(r.claims.size(), 4u);
  }
  EXPECT_FALSE(is_two_transitive(catalog_entry("G1").group()));
}

TEST(Characters, IntransitiveGroup) {
  PermGroup g = PermGroup::parse("degree=4; (1,2)");
  auto chi = permutation_character(g);
  EXPECT_EQ(chi, (std::vector<std::size_t>{4, 2}));
  EXPECT_EQ(character_inner_products(g).with_trivial, 3);
}

TEST(Moebius, Orders) {
  EXPECT_EQ(moebius_group(5, false).order(), 120u);
  EXPECT_EQ(moebius_group(5, true).order(), 60u);
  EXPECT_EQ(moebius_group(7, false).order(), 336u);
  EXPECT_EQ(moebius_group(7, true).order(), 168u);
  EXPECT_EQ(moebius_group(3, false).order(), 24u);
}
