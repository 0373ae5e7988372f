#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ringstar/errors.hpp"
#include "ringstar/star.hpp"

using namespace ringstar;

namespace {
Ideal principal(const FiniteRing& R, const char* gen) {
  const Element g = R.parse_element(gen);
  return ideal_closure(R, std::span<const Element>(&g, 1));
}
}  // namespace

TEST(Saturate, Examples) {
  const FiniteRing R = make_ring("Z/12");
  ElementSet one(R.size());
  one.insert(R.one());
  EXPECT_EQ(saturate(R, one), R.units());

  const ElementSet w(R.size(), std::vector<Element>{Element{1}, Element{5}, Element{9}});
  EXPECT_EQ(oracle::to_set(saturate(R, w)), (oracle::Set{1, 3, 5, 7, 9, 11}));
  EXPECT_TRUE(saturate(R, ElementSet(R.size())).empty());
  EXPECT_EQ(oracle::to_set(units_plus(R, principal(R, "4"))), (oracle::Set{1, 3, 5, 7, 9, 11}));
}

TEST(StarCheck, Z12ModFour) {
  const FiniteRing R = make_ring("Z/12");
  for (StarMethod m : kStarMethods) EXPECT_TRUE(star_check(R, principal(R, "4"), m).holds);
}

TEST(StarCheck, TruncatedPolynomials) {
  const FiniteRing R = make_ring("GF(2)[x]/(x^4)");
  const StarReport report = star_report(R, principal(R, "x^2"));
  EXPECT_TRUE(report.holds());
  const Quotient q = quotient_ring(R, principal(R, "x^2"));
  const Element target = q.projection(R.parse_element("1+x"));
  EXPECT_TRUE(R.is_unit(crt_unit_lift(R, principal(R, "x^2"), target)));
}

TEST(StarCheck, ZeroIdealAlwaysHolds) {
  for (const auto& spec : oracle::small_specs()) {
    const FiniteRing R = make_ring(spec);
    EXPECT_TRUE(star_report(R, zero_ideal(R)).holds()) << spec;
  }
}

TEST(StarCheck, ImproperIdealIsRejected) {
  const FiniteRing R = make_ring("Z/12");
  EXPECT_THROW(star_check(R, unit_ideal(R), StarMethod::direct), PreconditionError);
}

TEST(StarCheck, MethodNames) {
  EXPECT_EQ(to_string(StarMethod::direct), "direct");
  EXPECT_EQ(to_string(StarMethod::saturated_sum), "saturatedSum");
  EXPECT_EQ(to_string(StarMethod::saturation_equality), "satEquality");
  EXPECT_EQ(to_string(StarMethod::witness), "witness");
}

TEST(RingHasStar, Examples) {
  EXPECT_TRUE(ring_has_star(make_ring("Z/12")).holds);
  EXPECT_TRUE(ring_has_star(make_ring("prod(Z/4,GF(2)[x]/(x^2+x+1))")).holds);
  EXPECT_TRUE(ring_has_star(make_ring("GF(3)[x]/(x^3)")).holds);
  const RingStarReport r = ring_has_star(make_ring("Z/12"));
  EXPECT_EQ(r.ideals.size(), 5u);
  EXPECT_EQ(r.verdicts.size(), 5u);
}

TEST(CrtUnitLift, Examples) {
  const FiniteRing R = make_ring("Z/12");
  const Ideal four = principal(R, "4");
  const Quotient q = quotient_ring(R, four);
  EXPECT_EQ(crt_unit_lift(R, four, q.projection(Element{3})), Element{7});

  const Ideal six = principal(R, "6");
  const Quotient q6 = quotient_ring(R, six);
  for (Element v : q6.ring.units().elements()) {
    const Element u = crt_unit_lift(R, six, v);
    EXPECT_TRUE(R.is_unit(u));
    EXPECT_EQ(q6.projection(u), v);
  }

  const Quotient q0 = quotient_ring(R, zero_ideal(R));
  EXPECT_EQ(crt_unit_lift(R, zero_ideal(R), q0.projection(Element{5})), Element{5});
}

TEST(ProductFieldsAdjust, Examples) {
  const FiniteRing R = make_ring("prod(Z/2,Z/3)");
  const Ideal I = principal(R, "(0,1)");
  const Element a = R.parse_element("(1,0)");
  EXPECT_EQ(product_fields_adjust(R, I, a, a), R.parse_element("(1,1)"));

  const Element unit = R.parse_element("(1,2)");
  EXPECT_EQ(product_fields_adjust(R, zero_ideal(R), unit, *R.inverse(unit)), unit);

  const FiniteRing S = make_ring("prod(Z/2,Z/2,Z/3)");
  const Ideal J = principal(S, "(0,1,0)");
  const Element a3 = S.parse_element("(1,0,2)");
  const Element adjusted = product_fields_adjust(S, J, a3, a3);
  EXPECT_TRUE(S.is_unit(adjusted));
  EXPECT_EQ(adjusted, S.parse_element("(1,1,2)"));

  EXPECT_THROW(product_fields_adjust(make_ring("Z/4"), zero_ideal(make_ring("Z/4")), Element{1}, Element{1}),
               PreconditionError);
}

TEST(ReduceModRad, Examples) {
  const FiniteRing R = make_ring("Z/12");
  const ReductionPair p = reduce_mod_rad_equiv(R, principal(R, "4"));
  EXPECT_TRUE(p.original);
  EXPECT_TRUE(p.reduced);
  const FiniteRing T = make_ring("GF(2)[x]/(x^4)");
  const ReductionPair t = reduce_mod_rad_equiv(T, principal(T, "x^2"));
  EXPECT_TRUE(t.original && t.reduced);
  const ReductionPair z = reduce_mod_rad_equiv(R, zero_ideal(R));
  EXPECT_TRUE(z.original && z.reduced);
}

// The four formulations against the unit-lifting oracle.
TEST(StarProperty, MethodsMatchLiftingOracle) {
  for (const auto& spec : oracle::small_specs()) {
    const FiniteRing R = make_ring(spec);
    for (const Ideal& I : enumerate_ideals(R)) {
      if (!I.is_proper()) continue;
      const bool expected = oracle::has_star(R, oracle::to_set(I.elements()));
      for (StarMethod m : kStarMethods) {
        const StarVerdict v = star_check(R, I, m);
        EXPECT_EQ(v.holds, expected) << spec << " " << to_string(m);
        EXPECT_EQ(v.witness.has_value(), !v.holds);
      }
    }
  }
}

TEST(StarProperty, SaturationIsAClosure) {
  std::mt19937 rng(11);
  for (const auto& spec : oracle::small_specs()) {
    const FiniteRing R = make_ring(spec);
    std::bernoulli_distribution coin(0.3);
    for (int i = 0; i < 20; ++i) {
      ElementSet w(R.size()), wider(R.size());
      for (Element e : R.elements()) {
        const bool in = coin(rng);
        if (in) w.insert(e);
        if (in || coin(rng)) wider.insert(e);
      }
      const ElementSet s = saturate(R, w);
      EXPECT_TRUE(w.is_subset_of(s));
      EXPECT_TRUE(s.is_subset_of(saturate(R, wider)));
      EXPECT_EQ(saturate(R, s), s);
      oracle::Set brute;
      for (Element r : R.elements()) {
        for (Element t : R.elements()) {
          if (w.contains(R.mul(t, r))) {
            brute.insert(r.index);
            break;
          }
        }
      }
      EXPECT_EQ(oracle::to_set(s), brute);
    }
  }
}

TEST(StarProperty, PassesToQuotients) {
  for (const auto& spec : oracle::small_specs()) {
    const FiniteRing R = make_ring(spec);
    ASSERT_TRUE(ring_has_star(R).holds);
    for (const Ideal& I : enumerate_ideals(R)) {
      if (!I.is_proper()) continue;
      EXPECT_TRUE(ring_has_star(quotient_ring(R, I).ring).holds) << spec;
    }
  }
}

TEST(StarProperty, CrtLiftOnEveryQuotient) {
  for (const auto& spec_text : oracle::small_specs()) {
    const FiniteRing R = make_ring(spec_text);
    const Spectrum spec = spectrum(R);
    for (const Ideal& I : enumerate_ideals(R)) {
      if (!I.is_proper()) continue;
      const Quotient q = quotient_ring(R, I);
      q.ring.units().for_each([&](Element v) {
        const Element u = crt_unit_lift(spec, q.projection, v);
        EXPECT_TRUE(R.is_unit(u));
        EXPECT_EQ(q.projection(u), v);
      });
    }
  }
}
