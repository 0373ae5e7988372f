#include "ringstar/semiunit.hpp"

#include <algorithm>

#include "ringstar/errors.hpp"

namespace ringstar {

std::string_view to_string(Rho value) {
  switch (value) {
    case Rho::zero: return "0";
    case Rho::one: return "1";
    case Rho::infinity: return "infinity";
  }
  return "?";
}

namespace {

/// r(1 - s r) lies in rad(R).
bool semi_inverts(const Spectrum& spec, Element r, Element s) {
  const FiniteRing& R = spec.ring;
  return spec.in_radical(R.mul(r, R.sub(R.one(), R.mul(s, r))));
}

std::optional<Element> first_semi_inverse(const Spectrum& spec, Element r) {
  for (Element s : spec.ring.elements()) {
    if (semi_inverts(spec, r, s)) return s;
  }
  return std::nullopt;
}

}  // namespace

bool is_semi_inverse_set(const Spectrum& spec, Element r, std::span<const Element> candidates) {
  const FiniteRing& R = spec.ring;
  for (const Ideal& m : spec.maximal.ideals) {
    if (m.contains(r)) continue;
    const bool covered = std::any_of(candidates.begin(), candidates.end(), [&](Element s) {
      return m.contains(R.sub(R.one(), R.mul(s, r)));
    });
    if (!covered) return false;
  }
  return true;
}

Rho rho(const Spectrum& spec, Element r) {
  if (spec.in_radical(r)) return Rho::zero;
  if (first_semi_inverse(spec, r)) return Rho::one;
  throw DefectError("rho = infinity for " + spec.ring.format(r) + " in finite ring " +
                    spec.ring.spec().to_string());
}

Rho rho(const FiniteRing& ring, Element r) { return rho(spectrum(ring), r); }

Rho rho(const PresentedRing& ring, const PresentedElement& r) {
  // Both presented rings are domains with rad = 0, so r(1 - sr) = 0 forces r = 0 or sr = 1.
  if (ring.is_zero(r)) return Rho::zero;
  if (ring.is_unit(r)) return Rho::one;
  return Rho::infinity;
}

Element collapse_semi_inverse_set(const Spectrum& spec, Element r,
                                  std::span<const Element> candidates) {
  std::vector<Element> set(candidates.begin(), candidates.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (!is_semi_inverse_set(spec, r, set)) {
    throw PreconditionError("not a semi-inverse set for " + spec.ring.format(r));
  }
  if (set.size() == 1) return set.front();

  const FiniteRing& R = spec.ring;
  Element product = R.one();
  for (Element s : set) product = R.mul(product, R.sub(R.one(), R.mul(s, r)));
  for (Element s : R.elements()) {
    if (R.sub(R.one(), R.mul(s, r)) != product) continue;
    if (!is_semi_inverse_set(spec, r, std::span<const Element>(&s, 1))) {
      throw DefectError("collapsed semi-inverse " + R.format(s) + " is not a semi-inverse set");
    }
    return s;
  }
  throw DefectError("no s with 1 - s*r equal to the product of the (1 - s_i*r)");
}

ElementSet semi_inverses(const Spectrum& spec, Element r) {
  if (rho(spec, r) != Rho::one) {
    throw PreconditionError(spec.ring.format(r) + " is not a semi-unit");
  }
  ElementSet out(spec.ring.size());
  for (Element s : spec.ring.elements()) {
    if (semi_inverts(spec, r, s)) out.insert(s);
  }
  return out;
}

Ideal colon_into_radical(const Spectrum& spec, Element r) {
  const FiniteRing& R = spec.ring;
  const Element r2 = R.mul(r, r);
  ElementSet by_r(R.size());
  ElementSet by_r2(R.size());
  for (Element a : R.elements()) {
    if (spec.in_radical(R.mul(a, r))) by_r.insert(a);
    if (spec.in_radical(R.mul(a, r2))) by_r2.insert(a);
  }
  if (!(by_r == by_r2)) {
    throw DefectError("rad : r differs from rad : r^2 for r = " + R.format(r));
  }
  return ideal_from_elements(R, by_r);
}

SemiUnitDecomposition::Certificates certify_decomposition(const Spectrum& spec, Element r,
                                                          Element u, Element e, Element t) {
  const FiniteRing& R = spec.ring;
  SemiUnitDecomposition::Certificates c;
  c.u_is_unit = R.is_unit(u);
  c.e_idempotent_mod_rad = spec.in_radical(R.sub(e, R.mul(e, e)));
  c.t_in_radical = spec.in_radical(t);
  c.recombines = R.add(R.mul(u, e), t) == r;
  if (const auto u_inv = R.inverse(u)) c.u_inverse_is_semi_inverse = semi_inverts(spec, r, *u_inv);
  return c;
}

SemiUnitDecomposition semi_unit_decomposition(const Spectrum& spec, Element r) {
  if (rho(spec, r) != Rho::one) {
    throw PreconditionError(spec.ring.format(r) + " is not a semi-unit");
  }
  const FiniteRing& R = spec.ring;
  const Quotient& reduced = spec.reduced();
  const FiniteRing& S = reduced.ring;
  const auto& pi = reduced.projection;

  const Element s = *first_semi_inverse(spec, r);
  const Element r_bar = pi(r);
  const Element e_bar = S.mul(r_bar, pi(s));
  const Element u_bar = S.add(S.mul(r_bar, e_bar), S.sub(S.one(), e_bar));

  const Element u = pi.min_preimage(u_bar);
  if (!R.is_unit(u)) {
    throw DefectError("lift " + R.format(u) + " of a unit mod rad is not a unit in " +
                      R.spec().to_string());
  }
  const Element e = pi.min_preimage(e_bar);
  const Element t = R.sub(r, R.mul(u, e));

  SemiUnitDecomposition out{u, e, t, *R.inverse(u), certify_decomposition(spec, r, u, e, t)};
  if (!out.certificates.all()) {
    throw DefectError("decomposition of " + R.format(r) + " failed certification");
  }
  return out;
}

bool is_von_neumann_regular(const FiniteRing& ring) {
  for (Element a : ring.elements()) {
    bool found = false;
    for (Element x : ring.elements()) {
      if (ring.mul(ring.mul(a, x), a) == a) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool is_semifield(const Spectrum& spec) {
  bool elementwise = true;
  for (Element r : spec.ring.elements()) {
    if (!spec.in_radical(r) && !first_semi_inverse(spec, r)) {
      elementwise = false;
      break;
    }
  }
  const bool regular = is_von_neumann_regular(spec.reduced().ring);
  if (elementwise != regular) {
    throw DefectError("semi-field tests disagree on " + spec.ring.spec().to_string());
  }
  return elementwise;
}

bool is_semifield(const FiniteRing& ring) { return is_semifield(spectrum(ring)); }

bool is_semifield(const PresentedRing& ring) {
  const PresentedElement witness = ring.kind() == PresentedRing::Kind::integers
                                       ? PresentedElement{std::int64_t{2}}
                                       : PresentedElement{Polynomial{{0, 1}}};
  return rho(ring, witness) != Rho::infinity;
}

}  // namespace ringstar
