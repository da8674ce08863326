#include <random>

#include <gtest/gtest.h>

#include "meshclust/laurent.hpp"

using namespace meshclust;

namespace {

const std::vector<std::string> kY = default_names(3);

LaurentPoly P(const std::string& s) { return parse_laurent<BigInt>(s, kY); }

LaurentPoly random_poly(std::mt19937& rng, std::size_t n, int terms, int lo, int hi) {
  std::uniform_int_distribution<int> ex(lo, hi), co(-5, 5), nt(1, terms);
  LaurentPoly p(n);
  for (int k = nt(rng); k > 0; --k) {
    Exponents e(n);
    for (auto& x : e) x = ex(rng);
    p.add_term(e, BigInt(co(rng)));
  }
  return p;
}

}  // namespace

TEST(Laurent, RingOperations) {
  EXPECT_EQ((P("y1 + y2") * P("y1 - y2")).to_string(kY), "y1^2 - y2^2");
  EXPECT_EQ(P("3*y1*y2^-1 - 7") * LaurentPoly::one(3), P("3*y1*y2^-1 - 7"));
  EXPECT_EQ(LaurentPoly::variable(3, 0, -1) * LaurentPoly::variable(3, 0), LaurentPoly::one(3));
  EXPECT_TRUE((P("y1") - P("y1")).is_zero());
  EXPECT_EQ(P("y1 + 1").pow(3), P("y1^3 + 3*y1^2 + 3*y1 + 1"));
  EXPECT_EQ(-P("y1 - y3"), P("y3 - y1"));
}

TEST(Laurent, ArityMismatch) {
  EXPECT_THROW(LaurentPoly::one(2) + LaurentPoly::one(3), ArityMismatchError);
  EXPECT_THROW(LaurentPoly::one(2) * LaurentPoly::one(3), ArityMismatchError);
}

TEST(Laurent, CanonicalText) {
  EXPECT_EQ(P("y2 + 1 + y1").to_string(kY), "y1 + y2 + 1");
  EXPECT_EQ(P("0").to_string(kY), "0");
  EXPECT_EQ(P("-2*y1^2*y3^-1 + y2").to_string(kY), "-2*y1^2*y3^-1 + y2");
  EXPECT_EQ(LaurentPoly::constant(3, BigInt(-4)).to_string(kY), "-4");
  EXPECT_THROW(P("y1 +"), ParseError);
  EXPECT_THROW(P("y4"), ParseError);
}

TEST(Laurent, ExactDivision) {
  EXPECT_EQ(exact_div(P("y2 + 1"), P("y1")).to_string(kY), "y1^-1*y2 + y1^-1");
  EXPECT_EQ(exact_div(P("y1^2 - y2^2"), P("y1 - y2")), P("y1 + y2"));
  EXPECT_THROW(exact_div(P("y1 + 1"), P("y2 + 1")), NotDivisibleError);
  EXPECT_THROW(exact_div(P("y1"), P("0")), NotDivisibleError);
  EXPECT_EQ(exact_div(P("y1^-2*y3 + y1^-1"), P("y1^-1*y3 + 1")), P("y1^-1"));
}

TEST(Laurent, DivisionInvertsMultiplication) {
  std::mt19937 rng(7);
  for (int k = 0; k < 10000; ++k) {
    auto p = random_poly(rng, 3, 4, -2, 2);
    auto q = random_poly(rng, 3, 3, -1, 2);
    if (q.is_zero()) continue;
    ASSERT_EQ(exact_div(p * q, q), p) << p.to_string(kY) << " / " << q.to_string(kY);
  }
}

TEST(Laurent, ParsePrintRoundTrip) {
  std::mt19937 rng(11);
  for (int k = 0; k < 500; ++k) {
    auto p = random_poly(rng, 3, 6, -3, 3);
    ASSERT_EQ(P(p.to_string(kY)), p);
  }
}

TEST(Laurent, Substitution) {
  auto p = P("y1^2*y2 - 3*y3");
  std::vector<std::optional<LaurentPoly>> id(3);
  EXPECT_EQ(substitute(p, id, 3), p);

  auto x = default_names(10, "x");
  auto det = parse_laurent<BigInt>("x5*x9 - x7", x);
  std::vector<std::optional<LaurentPoly>> img(3);
  img[0] = det;
  img[1] = LaurentPoly::one(10);
  img[2] = LaurentPoly::one(10);
  EXPECT_EQ(substitute(P("y1"), img, 10).to_string(x), "x5*x9 - x7");

  std::vector<std::optional<LaurentPoly>> ones(3, LaurentPoly::one(3));
  EXPECT_EQ(substitute(P("2*y1*y2 + 3*y3^2 - y1"), ones, 3), LaurentPoly::constant(3, BigInt(4)));

  std::vector<std::optional<LaurentPoly>> bad(3);
  bad[0] = P("y2 + 1");
  EXPECT_THROW(substitute(P("y1^-1"), bad, 3), NegativeExponentSubstitutionError);
  bad[0] = P("y2^-1");
  EXPECT_EQ(substitute(P("y1^-1"), bad, 3), P("y2"));
}

TEST(Laurent, RationalCoefficients) {
  auto r = to_rational(P("2*y1 + 4"));
  RationalPoly half = RationalPoly::constant(3, BigRational(1, 2));
  EXPECT_EQ((r * half).to_string(kY), "y1 + 2");
  auto q = parse_laurent<BigRational>("1/3*y1 - 2/5", kY);
  EXPECT_EQ(parse_laurent<BigRational>(q.to_string(kY), kY), q);
}

TEST(Laurent, BigCoefficients) {
  auto p = P("y1 + 1").pow(80);
  EXPECT_EQ(p.coeff({40, 0, 0}).str(), "107507208733336176461620");
  EXPECT_EQ(exact_div(p, P("y1 + 1").pow(79)), P("y1 + 1"));
}
