#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "noether/catalog.hpp"
#include "noether/error.hpp"
#include "noether/invariants.hpp"
#include "noether/parse.hpp"
#include "properties.hpp"

using namespace noether;

namespace {

LinearAction example_action() {
  Field f7 = Field::prime(7);
  auto h = LinearAction::from_images(f7, VarList::indexed("y", 3), {{"y1", "w*y2", "w^2*y3"}}, {"tau"}, {{"w", 2}});
  return LinearAction::wreath(PermGroup::symmetric(2), h);
}

// Average trace on degree-d monomials with F7 roots of unity lifted to complex ones (2 -> e^{2 pi i/3}).
std::size_t lifted_invariant_dimension(const LinearAction& action, int d) {
  const double pi = std::acos(-1.0);
  auto lift = [&](const Scalar& c) {
    long v = c.get_num().get_si();
    for (int k = 0; k < 3; ++k) {
      long r = 1;
      for (int i = 0; i < k; ++i) r = r * 2 % 7;
      if (v == r) return std::polar(1.0, 2 * pi * k / 3);
      if (v == 7 - r) return -std::polar(1.0, 2 * pi * k / 3);
    }
    ADD_FAILURE() << "coefficient " << v << " is not a sixth root of unity";
    return std::complex<double>(0);
  };
  std::complex<double> total = 0;
  auto monomials = monomials_of_degree(action.nvars(), d);
  for (const auto& g : action.elements()) {
    for (const auto& e : monomials) {
      std::complex<double> c = 1;
      Exponent img(e.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t k = 0; k < e.size(); ++k) {
          if (Field::is_zero(g.rows[i][k])) continue;
          img[k] += e[i];
          c *= std::pow(lift(g.rows[i][k]), static_cast<int>(e[i]));
        }
      }
      if (img == e) total += c;
    }
  }
  return static_cast<std::size_t>(std::lround(total.real() / static_cast<double>(action.order())));
}

const char* kPublished[] = {"x11+x21",
                            "x12^3+x22^3",
                            "x12*x13+x22*x23",
                            "x13^3+x23^3",
                            "x11*x21",
                            "x12^3*x22^3",
                            "x12*x13*x22*x23",
                            "x13^3*x23^3",
                            "x11*x22^3+x21*x12^3",
                            "x11*x22*x23+x21*x12*x13",
                            "x11*x23^3+x21*x13^3",
                            "x12^3*x22*x23+x22^3*x12*x13",
                            "x12^3*x23^3+x22^3*x13^3",
                            "x12*x13*x23^3+x22*x23*x13^3"};

}  // namespace

TEST(Symmetric, ElementaryPolynomials) {
  ExprParser p(Field(), VarList::indexed("x", 3));
  EXPECT_EQ(elementary_symmetric(3, 3), p.parse_poly("x1*x2*x3"));
  EXPECT_EQ(elementary_symmetric(3, 2), p.parse_poly("x1*x2 + x1*x3 + x2*x3"));
  EXPECT_EQ(elementary_symmetric(2, 2).to_string(), "x1*x2");
  EXPECT_THROW(elementary_symmetric(3, 0), DomainError);
  EXPECT_THROW(elementary_symmetric(3, 4), DomainError);
}

TEST(Symmetric, Multidegrees) {
  auto m = multidegrees(2, 2);
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m[0], (std::vector<unsigned>{2, 0}));
  EXPECT_EQ(m[1], (std::vector<unsigned>{1, 1}));
  EXPECT_EQ(m[2], (std::vector<unsigned>{0, 2}));
  EXPECT_EQ(multidegrees(4, 2).size(), 10u);
}

TEST(Polarization, EdgeCases) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t d = 1; d <= m; ++d) {
      auto one = polarize_elementary(m, 1, d);
      ASSERT_EQ(one.size(), 1u);
      EXPECT_EQ(one[0], elementary_symmetric(m, d));
    }
  }
  EXPECT_EQ(polarize_elementary(2, 4, 2).size(), 10u);
  EXPECT_THROW(polarize_elementary(2, 2, 3), DomainError);
  // Each component is multihomogeneous of its multidegree.
  auto comps = polarize_elementary(3, 2, 2);
  EXPECT_EQ(comps[1].to_string(VarList({"X11", "X12", "X21", "X22", "X31", "X32"})),
            "X12*X21 + X11*X22 + X12*X31 + X22*X31 + X11*X32 + X21*X32");
}

TEST(Reynolds, ModularObstruction) {
  LinearAction s3 = LinearAction::from_perm_group(PermGroup::symmetric(3), Field::prime(3));
  MultiPoly x1 = MultiPoly::variable(Field::prime(3), 3, 0);
  EXPECT_THROW(reynolds(s3, x1), ModularObstruction);
  LinearAction s3_5 = LinearAction::from_perm_group(PermGroup::symmetric(3), Field::prime(5));
  MultiPoly y1 = MultiPoly::variable(Field::prime(5), 3, 0);
  EXPECT_EQ(reynolds(s3_5, y1), elementary_symmetric(3, 1, Field::prime(5)).scaled(Field::prime(5).inv(3)));
}

TEST(Reynolds, Properties) {
  auto r = noether::testing::reynolds_properties(120, 17);
  EXPECT_GE(r.trials, 100u);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Molien, AgreesWithOrbitCountsOnTheCatalog) {
  auto r = noether::testing::molien_vs_orbits(6);
  EXPECT_EQ(r.trials, 16u * 7u);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Molien, SymmetricGroupCountsPartitions) {
  // dim k[x1..x4]^{S4} in degree d = partitions of d into at most 4 parts.
  EXPECT_EQ(molien_coefficients(PermGroup::symmetric(4), 6), (std::vector<std::uint64_t>{1, 1, 2, 3, 5, 6, 9}));
}

TEST(InvariantDimension, MatchesMolienInCharacteristicZero) {
  for (const char* id : {"G1", "G2", "G12"}) {
    PermGroup g = catalog_entry(id).group();
    LinearAction a = LinearAction::from_perm_group(g, Field());
    auto coeffs = molien_coefficients(g, 4);
    for (int d = 0; d <= 4; ++d) EXPECT_EQ(invariant_dimension(a, d), coeffs[static_cast<std::size_t>(d)]) << id << " " << d;
  }
}

TEST(Verify, ElementarySymmetricGenerate) {
  for (std::uint64_t c : {0ull, 5ull}) {
    Field f = Field::of_characteristic(c);
    LinearAction s3 = LinearAction::from_perm_group(PermGroup::symmetric(3), f);
    std::vector<MultiPoly> gens{elementary_symmetric(3, 1, f), elementary_symmetric(3, 2, f), elementary_symmetric(3, 3, f)};
    GradedReport r = verify_invariant_generators(gens, s3, 6);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.invariant_method, c == 0 ? "molien" : "reynolds");
    for (const auto& row : r.rows) EXPECT_LE(row.dim_subalgebra, row.dim_invariants);
    gens.pop_back();
    GradedReport short_list = verify_invariant_generators(gens, s3, 6);
    EXPECT_FALSE(short_list.pass);
    EXPECT_EQ(short_list.first_failure, 3);
  }
}

TEST(Verify, NonInvariantGeneratorIsNamed) {
  LinearAction s3 = LinearAction::from_perm_group(PermGroup::symmetric(3), Field());
  std::vector<MultiPoly> gens{elementary_symmetric(3, 1), MultiPoly::variable(Field(), 3, 0)};
  try {
    verify_invariant_generators(gens, s3, 3);
    FAIL() << "expected NotInvariant";
  } catch (const NotInvariant& e) {
    EXPECT_EQ(e.generator_index(), 1u);
    EXPECT_FALSE(e.group_element().empty());
  }
}

TEST(Verify, InhomogeneousGeneratorsAreSplit) {
  LinearAction s2 = LinearAction::from_perm_group(PermGroup::symmetric(2), Field());
  ExprParser p(Field(), VarList::indexed("x", 2));
  std::vector<MultiPoly> gens{p.parse_poly("x1 + x2 + x1*x2")};
  GradedReport r = verify_invariant_generators(gens, s2, 4);
  EXPECT_TRUE(r.pass);
}

TEST(WreathPipeline, TrivialCases) {
  Field q;
  ExprParser py(q, VarList::indexed("y", 2));
  std::vector<MultiPoly> F{py.parse_poly("y1 + y2"), py.parse_poly("y1*y2")};
  // m = 1: Hgens are the coordinates X11, X12, so the output is F.
  auto same = wreath_invariant_generators(F, polarize_elementary(1, 2, 1), 1, 2, 2);
  EXPECT_EQ(same, F);
  // F = coordinates: Phi(X_it) = x_it.
  std::vector<MultiPoly> coords{py.parse_poly("y1"), py.parse_poly("y2")};
  auto h = polarize_elementary(2, 2, 2);
  EXPECT_EQ(wreath_invariant_generators(coords, h, 2, 2, 2), h);
}

TEST(Example, InvariantDimensionsMatchLiftedTraces) {
  LinearAction a = example_action();
  ASSERT_EQ(a.order(), 18u);
  for (int d = 0; d <= 6; ++d) EXPECT_EQ(invariant_dimension(a, d), lifted_invariant_dimension(a, d)) << d;
}

TEST(Example, PipelineAndPublishedListAgree) {
  Field f7 = Field::prime(7);
  LinearAction a = example_action();
  ExprParser py(f7, VarList::indexed("y", 3));
  std::vector<MultiPoly> F{py.parse_poly("y1"), py.parse_poly("y2^3"), py.parse_poly("y2*y3"), py.parse_poly("y3^3")};
  std::vector<MultiPoly> H = polarize_elementary(2, 4, 1, f7);
  for (auto& f : polarize_elementary(2, 4, 2, f7)) H.push_back(f);
  auto pipeline = wreath_invariant_generators(F, H, 2, 3, 4);
  EXPECT_EQ(pipeline.size(), 14u);
  GradedReport r = verify_invariant_generators(pipeline, a, 6);
  EXPECT_TRUE(r.pass);

  ExprParser px(f7, VarList({"x11", "x12", "x13", "x21", "x22", "x23"}));
  std::vector<MultiPoly> published;
  for (const char* s : kPublished) published.push_back(px.parse_poly(s));
  for (const auto& f : published) EXPECT_FALSE(a.moving_generator(f).has_value()) << f.to_string();
  EXPECT_TRUE(verify_invariant_generators(published, a, 6).pass);
  published.pop_back();
  GradedReport control = verify_invariant_generators(published, a, 6);
  EXPECT_FALSE(control.pass);
  EXPECT_EQ(control.first_failure, 5);
}
