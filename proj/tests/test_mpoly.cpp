#include <gtest/gtest.h>

#include "support.hpp"

using namespace netml;
using namespace netml::testing;

namespace {

const VarList& xyz() {
  static const VarList v = make_vars({"x", "y", "z"});
  return v;
}

Poly random_poly(std::mt19937_64& rng, const VarList& v, unsigned max_deg = 3, int terms = 4) {
  std::uniform_int_distribution<int> e(0, static_cast<int>(max_deg));
  Poly p(v);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (std::size_t i = 0; i < v->size(); ++i) m.e[i] = static_cast<std::uint16_t>(e(rng) / static_cast<int>(v->size() - 1));
    p.add_term(m, small_rat(rng, 4));
  }
  return p;
}

}  // namespace

TEST(Poly, ParseAndPrintRoundTrip) {
  Poly p = parse_poly("3/2*x^2*y - z + 1", xyz());
  EXPECT_EQ(parse_poly(to_string(p), xyz()), p);
  EXPECT_EQ(p.total_degree(), 3);
  EXPECT_EQ(p.coefficient(Monomial::var(2)), Rat(-1));
}

TEST(Poly, ParserRejectsUnknownNames) {
  EXPECT_THROW(parse_poly("x + w", xyz()), Error);
  EXPECT_THROW(parse_poly("x +", xyz()), FormatError);
}

TEST(Poly, RingAxioms) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    Poly a = random_poly(rng, xyz()), b = random_poly(rng, xyz()), c = random_poly(rng, xyz());
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * Poly::constant(xyz(), 1), a);
  }
}

TEST(Poly, LeadingTermIsMultiplicative) {
  std::mt19937_64 rng(22);
  for (auto ord : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block(1)}) {
    for (int trial = 0; trial < 100; ++trial) {
      Poly a = random_poly(rng, xyz()), b = random_poly(rng, xyz());
      if (a.is_zero() || b.is_zero()) continue;
      auto [ma, ca] = leading_term(a, ord);
      auto [mb, cb] = leading_term(b, ord);
      auto [mab, cab] = leading_term(a * b, ord);
      EXPECT_EQ(mab, ma * mb) << ord.name();
      EXPECT_EQ(cab, ca * cb) << ord.name();
    }
  }
}

TEST(Poly, LeadingTermOfZeroThrows) {
  EXPECT_THROW(leading_term(Poly(xyz()), MonomialOrder::grevlex()), UndefinedLeadingTermError);
}

TEST(Poly, OrdersDisagreeWhereExpected) {
  Monomial x = Monomial::var(0), y2 = Monomial::var(1, 2);
  EXPECT_GT(MonomialOrder::lex().compare(x, y2, 3), 0);
  EXPECT_LT(MonomialOrder::grevlex().compare(x, y2, 3), 0);
  // grevlex: x*z < y^2
  EXPECT_LT(MonomialOrder::grevlex().compare(Monomial::var(0) * Monomial::var(2), y2, 3), 0);
}

TEST(Poly, SubstitutionIsAHomomorphism) {
  std::mt19937_64 rng(23);
  const VarList& v = xyz();
  VarList st = make_vars({"s", "t"});
  for (int trial = 0; trial < 50; ++trial) {
    std::map<std::string, Poly> img{{"x", random_poly(rng, st, 2, 3)},
                                    {"y", random_poly(rng, st, 2, 3)},
                                    {"z", random_poly(rng, st, 2, 3)}};
    Poly a = random_poly(rng, v), b = random_poly(rng, v);
    EXPECT_EQ(substitute(a * b, img, st), substitute(a, img, st) * substitute(b, img, st));
    EXPECT_EQ(substitute(a + b, img, st), substitute(a, img, st) + substitute(b, img, st));
  }
}

TEST(Poly, EvaluateAgreesWithConstantSubstitution) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    Poly a = random_poly(rng, xyz());
    std::vector<Rat> pt{small_rat(rng), small_rat(rng), small_rat(rng)};
    Poly s = substitute(a, std::map<std::string, Rat>{{"x", pt[0]}, {"y", pt[1]}, {"z", pt[2]}});
    ASSERT_TRUE(s.is_constant());
    EXPECT_EQ(s.coefficient(Monomial{}), evaluate(a, pt));
  }
}

TEST(Poly, MixingRingsThrows) {
  Poly a = Poly::variable(xyz(), "x");
  Poly b = Poly::variable(make_vars({"s", "t"}), "s");
  EXPECT_THROW(a + b, ContextError);
}

TEST(Poly, DerivativeAndHomogeneity) {
  Poly p = parse_poly("x^3 + 2*x*y*z - z^3", xyz());
  EXPECT_TRUE(is_homogeneous(p));
  EXPECT_EQ(derivative(p, 0), parse_poly("3*x^2 + 2*y*z", xyz()));
  Poly q = parse_poly("x^2 + y + 1", xyz());
  EXPECT_FALSE(is_homogeneous(q));
  EXPECT_EQ(homogeneous_components(q).size(), 3u);
}
