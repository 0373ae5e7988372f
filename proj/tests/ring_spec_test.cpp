#include <gtest/gtest.h>

#include "ringstar/errors.hpp"
#include "ringstar/ring_spec.hpp"

using namespace ringstar;

TEST(RingSpec, ParsesModular) {
  const RingSpec s = parse_ring_spec("Z/12");
  EXPECT_EQ(s.kind, RingSpec::Kind::modular);
  EXPECT_EQ(s.modulus, 12u);
}

TEST(RingSpec, ParsesPolynomialQuotient) {
  const RingSpec s = parse_ring_spec("GF(2)[x]/(x^2+x+1)");
  EXPECT_EQ(s.kind, RingSpec::Kind::polynomial_quotient);
  EXPECT_EQ(s.prime, 2u);
  EXPECT_EQ(s.polynomial, (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(RingSpec, ParsesProduct) {
  const RingSpec s = parse_ring_spec("prod(Z/2,Z/3)");
  EXPECT_EQ(s.kind, RingSpec::Kind::product);
  ASSERT_EQ(s.children.size(), 2u);
  EXPECT_EQ(s.children[0], RingSpec::modular_ring(2));
  EXPECT_EQ(s.children[1], RingSpec::modular_ring(3));
}

TEST(RingSpec, ParsesQuotientWithGenerators) {
  const RingSpec s = parse_ring_spec("quot(prod(Z/4,Z/2);(2,0),(0,1))");
  EXPECT_EQ(s.kind, RingSpec::Kind::quotient);
  ASSERT_EQ(s.children.size(), 1u);
  EXPECT_EQ(s.children[0].kind, RingSpec::Kind::product);
  EXPECT_EQ(s.generators, (std::vector<std::string>{"(2,0)", "(0,1)"}));
}

TEST(RingSpec, NestedProducts) {
  const RingSpec s = parse_ring_spec("prod(prod(Z/2,Z/2),GF(3)[x]/(x^2+1))");
  ASSERT_EQ(s.children.size(), 2u);
  EXPECT_EQ(s.children[0].children.size(), 2u);
}

TEST(RingSpec, ToleratesWhitespace) {
  EXPECT_EQ(parse_ring_spec(" prod( Z/2 , Z/3 ) "), parse_ring_spec("prod(Z/2,Z/3)"));
}

TEST(RingSpec, RoundTripsThroughCanonicalText) {
  for (const char* text : {"Z/12", "GF(2)[x]/(x^2+x+1)", "GF(3)[x]/(x^3+2*x+1)", "prod(Z/2,Z/3)",
                           "prod(Z/4,GF(2)[x]/(x^2),Z/3)", "quot(Z/12;4)", "quot(prod(Z/2,Z/4);(0,2))"}) {
    const RingSpec s = parse_ring_spec(text);
    EXPECT_EQ(parse_ring_spec(s.to_string()), s) << text;
  }
}

TEST(RingSpec, RejectsMalformedInput) {
  for (const char* text : {"", "Z/", "Z/1", "Z/0", "Z/x", "GF(4)[x]/(x^2)", "GF(2)[x]/(2*x)",
                           "GF(2)[x]/(1)", "prod(Z/2)", "prod(Z/2,", "quot(Z/12)", "Q/3", "Z/12 trailing"}) {
    EXPECT_THROW(parse_ring_spec(text), SpecError) << text;
  }
}

TEST(RingSpec, ErrorsCarryAPosition) {
  try {
    parse_ring_spec("prod(Z/2,Q/3)");
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_EQ(e.position(), 9u);
  }
}

TEST(RingSpec, SplitTopLevelRespectsNesting) {
  EXPECT_EQ(split_top_level("(1,0), (0,1),2", ','), (std::vector<std::string>{"(1,0)", "(0,1)", "2"}));
  EXPECT_EQ(split_top_level("a,b;c,d", ';'), (std::vector<std::string>{"a,b", "c,d"}));
}

TEST(RingSpec, PrimalityMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 500; ++n) {
    bool expected = n >= 2;
    for (std::uint64_t d = 2; d < n; ++d) expected = expected && n % d != 0;
    EXPECT_EQ(is_prime(n), expected) << n;
  }
}
