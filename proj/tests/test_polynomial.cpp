#include <gtest/gtest.h>

#include <random>

#include "nkt/expr_parser.hpp"
#include "nkt/polynomial.hpp"

using namespace nkt;

namespace {

Polynomial poly(std::string_view text) {
  RationalExpr e = parse_expr(text);
  EXPECT_TRUE(e.denominator().is_constant()) << text;
  return scale(e.numerator(), Rational(1) / e.denominator().constant_value());
}

Polynomial random_poly(std::mt19937& rng, std::initializer_list<Var> vars, unsigned max_degree, int terms) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    Exponents e{};
    for (Var v : vars) e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(deg(rng));
    p.add_term(e, coef(rng));
  }
  return p;
}

}  // namespace

TEST(Polynomial, ArithmeticAndRendering) {
  Polynomial p = poly("(n + 1)*(n - 1)");
  EXPECT_EQ(p.to_string(), "n^2 - 1");
  EXPECT_EQ(poly("2*n*kappa - 2*n + 2").to_string(), "2*n*kappa - 2*n + 2");
  EXPECT_EQ(poly("kappa - kappa"), Polynomial());
  EXPECT_EQ(poly("1/2*n").to_string(), "1/2*n");
  EXPECT_EQ(p.degree(Var::n), 2u);
  EXPECT_EQ(p.degree(Var::kappa), 0u);
}

TEST(Polynomial, CoefficientsInVariable) {
  Polynomial p = poly("a1*kappa^2 + (n + 1)*kappa + 3");
  auto cs = p.coefficients_in(Var::kappa);
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(cs[0], Polynomial(3));
  EXPECT_EQ(cs[1], poly("n + 1"));
  EXPECT_EQ(cs[2], poly("a1"));
}

TEST(Polynomial, ExactDivision) {
  auto q = divide_exact(poly("n^3 - kappa^3"), poly("n - kappa"));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, poly("n^2 + n*kappa + kappa^2"));
  EXPECT_FALSE(divide_exact(poly("n^2 + 1"), poly("n - 1")));
  EXPECT_THROW(divide_exact(poly("n"), Polynomial()), error);
}

TEST(Polynomial, GcdMultivariate) {
  EXPECT_EQ(gcd(poly("n^2 - 1"), poly("n^2 - 2*n + 1")), poly("n - 1"));
  EXPECT_EQ(gcd(poly("(n + kappa)*(n - a0)"), poly("(n + kappa)^2*(a1 + 1)")), poly("n + kappa"));
  EXPECT_EQ(gcd(poly("2*n"), poly("3")), Polynomial(1));
  EXPECT_EQ(gcd(Polynomial(), poly("2*n + 4")), poly("n + 2"));
  EXPECT_EQ(gcd(poly("(2*n*kappa - 2*n + 2)*(a0 + 2*n*a1 - a1)"), poly("(n*kappa - n + 1)*(2*n + 1)")),
            poly("n*kappa - n + 1"));
}

TEST(Polynomial, GcdDividesBothOperandsRandomized) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 150; ++trial) {
    Polynomial common = random_poly(rng, {Var::n, Var::kappa}, 2, 3);
    Polynomial x = random_poly(rng, {Var::n, Var::kappa, Var::a0}, 2, 3) * common;
    Polynomial y = random_poly(rng, {Var::n, Var::a0}, 2, 3) * common;
    if (x.is_zero() || y.is_zero()) continue;
    Polynomial g = gcd(x, y);
    ASSERT_TRUE(divide_exact(x, g)) << x.to_string() << " / " << g.to_string();
    ASSERT_TRUE(divide_exact(y, g));
    if (!common.is_zero()) {
      EXPECT_TRUE(divide_exact(g, common)) << g.to_string() << " vs " << common.to_string();
    }
  }
}

TEST(Polynomial, SquareRoot) {
  auto root = sqrt_exact(poly("4*n^2 - 8*n*kappa + 4*kappa^2"));
  ASSERT_TRUE(root);
  EXPECT_EQ(*root * *root, poly("4*n^2 - 8*n*kappa + 4*kappa^2"));
  EXPECT_FALSE(sqrt_exact(poly("n^2 + 1")));
  EXPECT_FALSE(sqrt_exact(poly("n")));
  EXPECT_FALSE(sqrt_exact(poly("-4")));
  EXPECT_EQ(*sqrt_exact(poly("9/4")), Polynomial(Rational(3, 2)));
}

TEST(Polynomial, EvaluateRequiresBindings) {
  Polynomial p = poly("n*kappa + 1");
  EXPECT_EQ(p.evaluate({{Var::n, 2}, {Var::kappa, Rational(1, 4)}}), Rational(3, 2));
  try {
    p.evaluate({{Var::n, 2}});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::unbound_indeterminate);
  }
}
