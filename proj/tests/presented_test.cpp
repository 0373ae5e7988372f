#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "ringstar/errors.hpp"
#include "ringstar/presented.hpp"
#include "ringstar/star.hpp"

using namespace ringstar;

TEST(Presented, UnitLists) {
  const PresentedRing Z = PresentedRing::integers();
  ASSERT_EQ(Z.unit_list().size(), 2u);
  EXPECT_EQ(Z.format(Z.unit_list()[0]), "1");
  EXPECT_EQ(Z.format(Z.unit_list()[1]), "-1");
  const PresentedRing k = PresentedRing::polynomials(3);
  ASSERT_EQ(k.unit_list().size(), 2u);
  EXPECT_EQ(k.format(k.unit_list()[0]), "1");
  EXPECT_EQ(k.format(k.unit_list()[1]), "2");
  EXPECT_TRUE(k.is_unit(k.parse_element("2")));
  EXPECT_FALSE(k.is_unit(k.parse_element("x+1")));
}

TEST(Presented, Parsing) {
  EXPECT_EQ(parse_presented_ring("Z"), PresentedRing::integers());
  EXPECT_EQ(parse_presented_ring("GF(5)[x]"), PresentedRing::polynomials(5));
  EXPECT_THROW(parse_presented_ring("GF(4)[x]"), Error);
  EXPECT_THROW(parse_presented_ring("Q"), Error);
  EXPECT_EQ(parse_presented_ring("Z").name(), "Z");
  EXPECT_EQ(parse_presented_ring("GF(2)[x]").name(), "GF(2)[x]");
}

TEST(Presented, QuotientImage) {
  const PresentedRing Z = PresentedRing::integers();
  const PresentedQuotient q = Z.quotient(PresentedElement{std::int64_t{5}});
  EXPECT_EQ(q.target().size(), 5u);
  EXPECT_EQ(q.image(PresentedElement{std::int64_t{-1}}), Element{4});
  EXPECT_EQ(q.image(PresentedElement{std::int64_t{13}}), Element{3});

  const PresentedRing k = PresentedRing::polynomials(2);
  const PresentedQuotient qk = k.quotient(k.parse_element("x^2"));
  EXPECT_EQ(qk.target().size(), 4u);
  EXPECT_EQ(qk.image(k.parse_element("x^3+x+1")), qk.target().parse_element("x+1"));
  EXPECT_THROW(k.quotient(k.parse_element("1")), PreconditionError);
  EXPECT_THROW(Z.quotient(PresentedElement{std::int64_t{1}}), PreconditionError);
}

TEST(PresentedStar, IntegerExamples) {
  const PresentedRing Z = PresentedRing::integers();
  const auto five = presented_star_check(Z, PresentedElement{std::int64_t{5}});
  EXPECT_FALSE(five.has_star);
  ASSERT_TRUE(five.witness.has_value());
  EXPECT_EQ(*five.witness, Element{2});
  EXPECT_EQ(oracle::to_set(five.unit_image), (oracle::Set{1, 4}));
  EXPECT_TRUE(presented_star_check(Z, PresentedElement{std::int64_t{3}}).has_star);
}

TEST(PresentedStar, PolynomialExamples) {
  const PresentedRing k = PresentedRing::polynomials(2);
  EXPECT_TRUE(presented_star_check(k, k.parse_element("x")).has_star);
  const auto sq = presented_star_check(k, k.parse_element("x^2"));
  EXPECT_FALSE(sq.has_star);
  EXPECT_EQ(sq.quotient.format(*sq.witness), "x+1");
  EXPECT_EQ(sq.quotient.mul(*sq.witness, *sq.witness_inverse), sq.quotient.one());
}

// Z -> Z/n has (*) iff the image {1, n-1} covers all phi(n) units.
TEST(PresentedStarProperty, IntegerTableMatchesTotient) {
  const PresentedRing Z = PresentedRing::integers();
  for (std::int64_t n = 2; n <= 50; ++n) {
    std::int64_t phi = 0;
    for (std::int64_t a = 1; a <= n; ++a) phi += std::gcd(a, n) == 1;
    const bool expected = phi <= 2;
    EXPECT_EQ(presented_star_check(Z, PresentedElement{n}).has_star, expected) << n;
  }
}

// GF(p)[x] -> GF(p)[x]/(f) has (*) iff every unit of the quotient is a constant.
TEST(PresentedStarProperty, PolynomialTableMatchesConstants) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PresentedRing k = PresentedRing::polynomials(p);
    for (std::uint32_t low = 0; low < p * p; ++low) {
      const Coefficients f{low % p, low / p, 1};
      const auto result = presented_star_check(k, PresentedElement{Polynomial{f}});
      const std::size_t units = result.quotient.units().size();
      EXPECT_EQ(result.has_star, units == p - 1) << p << " " << low;
      if (!result.has_star) {
        EXPECT_FALSE(result.unit_image.contains(*result.witness));
        EXPECT_TRUE(result.quotient.is_unit(*result.witness));
      }
    }
    EXPECT_TRUE(presented_star_check(k, k.parse_element("x")).has_star);
  }
}
