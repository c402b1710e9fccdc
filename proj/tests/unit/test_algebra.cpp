#include <gtest/gtest.h>

#include "noether/error.hpp"
#include "noether/linalg.hpp"
#include "noether/parse.hpp"
#include "noether/ratfunc.hpp"
#include "properties.hpp"

using namespace noether;

TEST(Field, PrimeArithmetic) {
  Field f = Field::prime(7);
  EXPECT_EQ(f.characteristic(), 7u);
  EXPECT_EQ(f.name(), "F7");
  EXPECT_EQ(f.add(5, 4), 2);
  EXPECT_EQ(f.neg(3), 4);
  EXPECT_EQ(f.inv(3), 5);
  EXPECT_EQ(f.normalize(mpq_class(1, 2)), 4);
  EXPECT_EQ(f.pow(2, 3), 1);
  EXPECT_EQ(f.pow(3, -1), 5);
  EXPECT_THROW(f.inv(0), DomainError);
  EXPECT_THROW(f.normalize(mpq_class(1, 7)), DomainError);
}

TEST(Field, Rationals) {
  Field q;
  EXPECT_TRUE(q.is_rational());
  EXPECT_EQ(q.name(), "Q");
  EXPECT_EQ(q.div(1, 3), mpq_class(1, 3));
  EXPECT_EQ(q.to_string(q.normalize(mpq_class(-2, 4))), "-1/2");
}

TEST(Field, RejectsComposites) {
  EXPECT_THROW(Field::prime(1), DomainError);
  EXPECT_THROW(Field::of_characteristic(4), DomainError);
  EXPECT_TRUE(is_prime(101));
  EXPECT_FALSE(is_prime(91));
}

TEST(MultiPoly, Arithmetic) {
  ExprParser p(Field(), VarList::indexed("x", 3));
  MultiPoly f = p.parse_poly("(x1 + x2)^2");
  EXPECT_EQ(f, p.parse_poly("x1^2 + 2*x1*x2 + x2^2"));
  EXPECT_EQ(f.degree(), 2);
  EXPECT_TRUE(f.is_homogeneous());
  EXPECT_FALSE(p.parse_poly("x1 + 1").is_homogeneous());
  EXPECT_EQ(MultiPoly(Field(), 3).degree(), -1);
  EXPECT_EQ(f.divide_exact(p.parse_poly("x1 + x2")), p.parse_poly("x1 + x2"));
  EXPECT_FALSE(f.divide_exact(p.parse_poly("x3")).has_value());
  EXPECT_EQ(f.derivative(0), p.parse_poly("2*x1 + 2*x2"));
  std::vector<Scalar> pt{1, 2, 3};
  EXPECT_EQ(f.evaluate(pt), 9);
  EXPECT_EQ((f - f).is_zero(), true);
  EXPECT_EQ(p.parse_poly("x1^2*x2 + x3").homogeneous_components().size(), 2u);
}

TEST(MultiPoly, ComposeAndRemap) {
  ExprParser p(Field(), VarList::indexed("x", 2));
  MultiPoly f = p.parse_poly("x1*x2 + x2");
  std::vector<MultiPoly> images{p.parse_poly("x1 + x2"), p.parse_poly("x1 - x2")};
  EXPECT_EQ(f.compose(images), p.parse_poly("x1^2 - x2^2 + x1 - x2"));
  std::vector<std::size_t> map{2, 0};
  MultiPoly g = f.remap(3, map);
  EXPECT_EQ(g.to_string(), "x1*x3 + x1");
}

TEST(MultiPoly, FieldReduction) {
  ExprParser p(Field::prime(2), VarList::indexed("x", 2));
  EXPECT_EQ(p.parse_poly("(x1 + x2)^2"), p.parse_poly("x1^2 + x2^2"));
  EXPECT_EQ(p.parse_poly("3*x1 - x1"), MultiPoly(Field::prime(2), 2));
}

TEST(Parser, ConstantsAndErrors) {
  ExprParser p(Field::prime(7), VarList::indexed("y", 3), {{"w", 2}});
  EXPECT_EQ(p.parse_poly("w^3*y1"), p.parse_poly("y1"));
  EXPECT_EQ(p.parse_poly("w^2 - 4"), MultiPoly(Field::prime(7), 3));
  EXPECT_THROW(p.parse_poly("y1/y2"), ParseError);
  EXPECT_THROW(p.parse("y4"), ParseError);
  EXPECT_THROW(p.parse("y1 +"), ParseError);
  EXPECT_THROW(p.parse("(y1"), ParseError);
  EXPECT_THROW(p.parse("y1^y2"), ParseError);
  EXPECT_THROW(p.parse("1/(y1 - y1)"), Error);
}

TEST(RatFunc, Normalization) {
  ExprParser p(Field(), VarList::indexed("x", 2));
  RatFunc a = p.parse("(x1^2 - x2^2)/(x1 - x2)");
  EXPECT_TRUE(a.is_polynomial());
  EXPECT_EQ(a, p.parse("x1 + x2"));
  RatFunc b = p.parse("x1/x2");
  EXPECT_EQ(b * b.inverse(), p.parse("1"));
  EXPECT_EQ(b.pow(-2), p.parse("x2^2/x1^2"));
  EXPECT_EQ(b.derivative(1), p.parse("-x1/x2^2"));
  EXPECT_THROW(p.parse("0").inverse(), ZeroDenominator);
  std::vector<Scalar> pt{1, 0};
  EXPECT_THROW(b.evaluate(pt), ZeroDenominator);
}

TEST(Substitution, RespectsComposition) {
  Field q;
  auto sigma = SubstitutionAction::from_permutation(q, std::vector<std::uint32_t>{2, 3, 1}, "sigma");
  ExprParser p(q, VarList::indexed("x", 3));
  EXPECT_EQ(substitute(p.parse("x1 + 2*x2"), sigma), p.parse("x2 + 2*x3"));
  SubstitutionAction s3 = compose(sigma, compose(sigma, sigma));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(s3.images[i], RatFunc::variable(q, 3, i));
  std::vector<RatFunc> collapse{p.parse("x1"), p.parse("x1"), p.parse("x3")};
  EXPECT_THROW(substitute(p.parse("1/(x1 - x2)"), collapse), ZeroDenominator);
}

TEST(Substitution, DegreeCap) {
  ExprParser p(Field(), VarList::indexed("x", 1));
  std::vector<RatFunc> images{p.parse("x1^5")};
  EXPECT_THROW(substitute(p.parse("x1^4"), images, 12), CapExceeded);
  EXPECT_NO_THROW(substitute(p.parse("x1^2"), images, 12));
}

TEST(LinearAlgebra, RankAndDeterminant) {
  Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank(Field(), m), 2u);
  Matrix m7{{1, 2}, {4, 1}};  // det = -7
  EXPECT_EQ(rank(Field(), m7), 2u);
  EXPECT_EQ(rank(Field::prime(7), m7), 1u);
  EXPECT_EQ(rank(Field(), Matrix{}), 0u);
  EXPECT_EQ(determinant({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}}), 0);
  EXPECT_EQ(determinant({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant({{4, 3}, {6, 3}}), -6);
}

TEST(LinearAlgebra, GradedSpan) {
  ExprParser p(Field(), VarList::indexed("x", 2));
  std::vector<MultiPoly> polys{p.parse_poly("x1^2"), p.parse_poly("x1^2 + x1*x2"), p.parse_poly("x1*x2"), MultiPoly(Field(), 2)};
  EXPECT_EQ(graded_span_dim(polys, 2), 2u);
  std::vector<MultiPoly> bad{p.parse_poly("x1")};
  EXPECT_THROW(graded_span_dim(bad, 2), DomainError);
}

TEST(Properties, SubstitutionHomomorphism) {
  auto r = noether::testing::substitution_homomorphism(150, 3);
  EXPECT_GE(r.trials, 100u);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}
