#include "ringstar/star.hpp"

#include <algorithm>

#include "ringstar/errors.hpp"

namespace ringstar {

std::string_view to_string(StarMethod method) {
  switch (method) {
    case StarMethod::direct: return "direct";
    case StarMethod::saturated_sum: return "saturatedSum";
    case StarMethod::saturation_equality: return "satEquality";
    case StarMethod::witness: return "witness";
  }
  return "?";
}

ElementSet saturate(const FiniteRing& ring, const ElementSet& w) {
  ElementSet out(ring.size());
  if (w.empty()) return out;
  for (Element r : ring.elements()) {
    for (Element s : ring.elements()) {
      if (w.contains(ring.mul(s, r))) {
        out.insert(r);
        break;
      }
    }
  }
  return out;
}

ElementSet units_plus(const FiniteRing& ring, const Ideal& ideal) {
  ElementSet out(ring.size());
  const auto members = ideal.elements().elements();
  ring.units().for_each([&](Element u) {
    for (Element i : members) out.insert(ring.add(u, i));
  });
  return out;
}

namespace {

void require_proper(const Ideal& ideal) {
  if (!ideal.is_proper()) throw PreconditionError("property (*) is only defined for proper ideals");
}

StarVerdict check_direct(const FiniteRing& ring, const Quotient& q) {
  const ElementSet image = q.projection.image(ring.units());
  const ElementSet& target = q.ring.units();
  StarVerdict v{.method = StarMethod::direct};
  v.witness = target.first_not_in(image);
  v.holds = !v.witness.has_value();
  return v;
}

StarVerdict check_saturated_sum(const FiniteRing& ring, const ElementSet& sum) {
  const ElementSet closure = saturate(ring, sum);
  StarVerdict v{.method = StarMethod::saturated_sum};
  v.witness = closure.first_not_in(sum);
  v.holds = !v.witness.has_value();
  return v;
}

StarVerdict check_saturation_equality(const FiniteRing& ring, const Ideal& ideal,
                                      const ElementSet& sum) {
  ElementSet one_plus(ring.size());
  ideal.elements().for_each([&](Element i) { one_plus.insert(ring.add(ring.one(), i)); });
  const ElementSet closure = saturate(ring, one_plus);
  StarVerdict v{.method = StarMethod::saturation_equality};
  v.witness = closure.first_not_in(sum);
  if (!v.witness) v.witness = sum.first_not_in(closure);
  v.holds = !v.witness.has_value();
  return v;
}

StarVerdict check_witness(const FiniteRing& ring, const Ideal& ideal) {
  const auto units = ring.units().elements();
  StarVerdict v{.method = StarMethod::witness};
  for (Element a : ring.elements()) {
    bool has_b = false;
    for (Element b : ring.elements()) {
      if (ideal.contains(ring.sub(ring.one(), ring.mul(a, b)))) {
        has_b = true;
        break;
      }
    }
    if (!has_b) continue;
    bool has_u = false;
    for (Element u : units) {
      if (ideal.contains(ring.sub(ring.one(), ring.mul(a, u)))) {
        has_u = true;
        break;
      }
    }
    if (!has_u) {
      v.holds = false;
      v.witness = a;
      return v;
    }
  }
  return v;
}

}  // namespace

StarVerdict star_check(const FiniteRing& ring, const Ideal& ideal, StarMethod method) {
  require_proper(ideal);
  switch (method) {
    case StarMethod::direct:
      return check_direct(ring, quotient_ring(ring, ideal));
    case StarMethod::saturated_sum:
      return check_saturated_sum(ring, units_plus(ring, ideal));
    case StarMethod::saturation_equality:
      return check_saturation_equality(ring, ideal, units_plus(ring, ideal));
    case StarMethod::witness:
      return check_witness(ring, ideal);
  }
  throw PreconditionError("unknown method");
}

StarReport star_report(const FiniteRing& ring, const Ideal& ideal) {
  require_proper(ideal);
  Quotient q = quotient_ring(ring, ideal);
  const ElementSet sum = units_plus(ring, ideal);
  StarReport report{ideal, q.ring,
                    {check_direct(ring, q), check_saturated_sum(ring, sum),
                     check_saturation_equality(ring, ideal, sum), check_witness(ring, ideal)}};
  for (const auto& v : report.verdicts) {
    if (v.holds != report.verdicts[0].holds) {
      throw DefectError("characterizations of (*) disagree on " + ring.spec().to_string() +
                        " (method " + std::string(to_string(v.method)) + ")");
    }
  }
  return report;
}

RingStarReport ring_has_star(const FiniteRing& ring, std::span<const Ideal> ideals) {
  RingStarReport report;
  for (const Ideal& ideal : ideals) {
    if (!ideal.is_proper()) continue;
    StarVerdict v = check_direct(ring, quotient_ring(ring, ideal));
    report.holds = report.holds && v.holds;
    report.ideals.push_back(ideal);
    report.verdicts.push_back(v);
  }
  return report;
}

RingStarReport ring_has_star(const FiniteRing& ring, const Limits& limits) {
  const auto ideals = enumerate_ideals(ring, limits);
  return ring_has_star(ring, ideals);
}

Element crt_unit_lift(const Spectrum& spec, const SurjectiveHom& projection, Element v) {
  const FiniteRing& R = spec.ring;
  if (!projection.source().same_as(R)) throw PreconditionError("projection does not start at R");
  if (!projection.target().is_unit(v)) {
    throw PreconditionError(projection.target().format(v) + " is not a unit of the quotient");
  }
  const Ideal& ideal = projection.kernel();
  const Element r = projection.min_preimage(v);

  CongruenceSystem system{{ideal, R.zero()}};
  for (const Ideal& m : spec.maximal.ideals) {
    if (!ideal.is_subset_of(m)) system.push_back({m, R.sub(R.one(), r)});
  }
  const Element a = crt_solve(R, system);
  const Element lifted = R.add(r, a);
  if (!R.is_unit(lifted) || projection(lifted) != v) {
    throw DefectError("CRT lift " + R.format(lifted) + " of " + projection.target().format(v) +
                      " is not a unit preimage in " + R.spec().to_string());
  }
  return lifted;
}

Element crt_unit_lift(const FiniteRing& ring, const Ideal& ideal, Element v) {
  const Quotient q = quotient_ring(ring, ideal);
  return crt_unit_lift(spectrum(ring), q.projection, v);
}

Element product_fields_adjust(const FiniteRing& ring, const Ideal& ideal, Element a, Element b) {
  const auto factors = ring.factors();
  if (factors.empty() ? !ring.is_field()
                      : !std::all_of(factors.begin(), factors.end(),
                                     [](const FiniteRing& f) { return f.is_field(); })) {
    throw PreconditionError(ring.spec().to_string() + " is not a product of fields");
  }
  const Element defect = ring.sub(ring.one(), ring.mul(a, b));
  if (!ideal.contains(defect)) throw PreconditionError("1 - ab is not in the ideal");

  std::vector<Element> indicator;
  const auto parts = ring.components(a);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const FiniteRing& f = factors.empty() ? ring : factors[i];
    indicator.push_back(parts[i] == f.zero() ? f.one() : f.zero());
  }
  const Element e_j = ring.from_components(indicator);
  const Element adjusted = ring.add(a, ring.mul(e_j, defect));
  if (!ring.is_unit(adjusted) || !ideal.contains(ring.sub(adjusted, a))) {
    throw DefectError("product-of-fields adjustment of " + ring.format(a) + " failed");
  }
  return adjusted;
}

ReductionPair reduce_mod_rad_equiv(const Spectrum& spec, const Ideal& ideal) {
  require_proper(ideal);
  const FiniteRing& R = spec.ring;
  ReductionPair pair;
  pair.original = check_direct(R, quotient_ring(R, ideal)).holds;

  const Quotient& reduced = spec.reduced();
  const Ideal image = image_ideal(reduced.projection, ideal);
  if (!image.is_proper()) {
    pair.degenerate = true;
    pair.reduced = true;
  } else {
    pair.reduced = check_direct(reduced.ring, quotient_ring(reduced.ring, image)).holds;
  }
  if (pair.original != pair.reduced) {
    throw DefectError("(*) differs before and after reduction mod rad in " + R.spec().to_string());
  }
  return pair;
}

ReductionPair reduce_mod_rad_equiv(const FiniteRing& ring, const Ideal& ideal) {
  return reduce_mod_rad_equiv(spectrum(ring), ideal);
}

PresentedStarResult presented_star_check(const PresentedRing& ring, const PresentedElement& modulus,
                                         const Limits& limits) {
  const PresentedQuotient q = ring.quotient(modulus, limits);
  const FiniteRing& target = q.target();
  PresentedStarResult result{true, target, ElementSet(target.size()), std::nullopt, std::nullopt};
  for (const auto& u : ring.unit_list()) result.unit_image.insert(q.image(u));
  result.witness = target.units().first_not_in(result.unit_image);
  if (result.witness) {
    result.has_star = false;
    result.witness_inverse = target.inverse(*result.witness);
  }
  return result;
}

}  // namespace ringstar
