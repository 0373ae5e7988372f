#include "ringstar/spectrum.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "ringstar/errors.hpp"

namespace ringstar {

bool is_nilpotent(const FiniteRing& ring, Element a) {
  // a^(2^k) with 2^k >= |R| is zero iff a is nilpotent.
  const int steps = std::bit_width(ring.size()) + 1;
  for (int i = 0; i <= steps; ++i) {
    if (a == ring.zero()) return true;
    a = ring.mul(a, a);
  }
  return a == ring.zero();
}

ElementSet nilpotent_elements(const FiniteRing& ring) {
  ElementSet out(ring.size());
  for (Element a : ring.elements()) {
    if (is_nilpotent(ring, a)) out.insert(a);
  }
  return out;
}

ElementSet idempotents(const FiniteRing& ring) {
  ElementSet out(ring.size());
  for (Element e : ring.elements()) {
    if (ring.mul(e, e) == e) out.insert(e);
  }
  return out;
}

MaximalIdealList maximal_ideals(const FiniteRing& ring, const Limits& limits) {
  if (ring.size() > limits.max_carrier) {
    throw GuardError("carrier guard " + std::to_string(limits.max_carrier) + " exceeded");
  }
  Ideal nilradical = ideal_from_elements(ring, nilpotent_elements(ring));
  Quotient reduced = quotient_ring(ring, nilradical);
  const FiniteRing& s = reduced.ring;

  const auto idem = idempotents(s).elements();
  std::vector<Element> atoms;
  for (Element e : idem) {
    if (e == s.zero()) continue;
    bool atom = true;
    for (Element f : idem) {
      const Element ef = s.mul(e, f);
      if (ef != s.zero() && ef != e) {
        atom = false;
        break;
      }
    }
    if (atom) atoms.push_back(e);
  }

  std::vector<Ideal> ideals;
  for (Element e : atoms) {
    ElementSet members(ring.size());
    for (Element r : ring.elements()) {
      if (s.mul(reduced.projection(r), e) == s.zero()) members.insert(r);
    }
    Ideal m = ideal_from_elements(ring, members);
    if (!quotient_ring(ring, m).ring.is_field()) {
      throw DefectError("primitive idempotent " + s.format(e) + " of " + ring.spec().to_string() +
                        " produced a non-maximal ideal");
    }
    ideals.push_back(std::move(m));
  }
  return MaximalIdealList{ring, std::move(reduced), std::move(ideals), std::move(atoms)};
}

Spectrum spectrum(const FiniteRing& ring, const Limits& limits) {
  MaximalIdealList maximal = maximal_ideals(ring, limits);
  ElementSet meet = ElementSet::full(ring.size());
  for (const Ideal& m : maximal.ideals) meet = meet.set_intersection(m.elements());
  if (!(meet == maximal.reduced.projection.kernel().elements())) {
    throw DefectError("intersection of maximal ideals differs from the nilradical in " +
                      ring.spec().to_string());
  }
  Ideal radical = maximal.reduced.projection.kernel();
  return Spectrum{ring, std::move(radical), std::move(maximal)};
}

Ideal jacobson_radical(const FiniteRing& ring) { return spectrum(ring).radical; }

bool is_connected_mod_rad(const FiniteRing& ring) {
  return idempotents(spectrum(ring).reduced().ring).size() == 2;
}

bool comaximal(const Ideal& a, const Ideal& b) {
  return ideal_sum(a, b).contains(a.ring().one());
}

namespace {

/// Smallest positive integer in the ideal of Z/n, or n for the zero ideal.
std::uint64_t modular_generator(const Ideal& ideal, std::uint64_t n) {
  for (std::uint32_t d = 1; d < n; ++d) {
    if (ideal.contains(Element{d})) return d;
  }
  return n;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = ((a % m) + m) % m, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  return ((t0 % m) + m) % m;
}

Element crt_modular(const FiniteRing& ring, const CongruenceSystem& system) {
  const std::uint64_t n = ring.size();
  std::int64_t x = 0;
  std::int64_t m = 1;
  for (const auto& c : system) {
    const auto d = static_cast<std::int64_t>(modular_generator(c.ideal, n));
    const auto t = static_cast<std::int64_t>(c.target.index) % d;
    // x + m*k == t (mod d), gcd(m, d) = 1 by comaximality.
    const std::int64_t k = d == 1 ? 0 : ((t - x) % d + d) % d * inverse_mod(m, d) % d;
    x += m * k;
    m *= d;
    x %= m;
  }
  return Element{static_cast<std::uint32_t>(x % static_cast<std::int64_t>(n))};
}

Element crt_scan(const FiniteRing& ring, const CongruenceSystem& system) {
  for (Element a : ring.elements()) {
    bool ok = true;
    for (const auto& c : system) {
      if (!c.ideal.contains(ring.sub(a, c.target))) {
        ok = false;
        break;
      }
    }
    if (ok) return a;
  }
  throw DefectError("comaximal congruence system without solution in " + ring.spec().to_string());
}

}  // namespace

Element crt_solve(const FiniteRing& ring, const CongruenceSystem& system, CrtStrategy strategy) {
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (!system[i].ideal.ring().same_as(ring)) {
      throw PreconditionError("congruence " + std::to_string(i) + " uses an ideal of another ring");
    }
    for (std::size_t j = i + 1; j < system.size(); ++j) {
      if (!comaximal(system[i].ideal, system[j].ideal)) {
        throw PreconditionError("ideals " + std::to_string(i) + " and " + std::to_string(j) +
                                " are not comaximal");
      }
    }
  }
  const bool modular = ring.spec().kind == RingSpec::Kind::modular;
  if (strategy == CrtStrategy::modular && !modular) {
    throw PreconditionError("modular CRT path requires a ring Z/n");
  }
  const bool fast = strategy == CrtStrategy::modular || (strategy == CrtStrategy::automatic && modular);
  const Element a = fast ? crt_modular(ring, system) : crt_scan(ring, system);
  for (const auto& c : system) {
    if (!c.ideal.contains(ring.sub(a, c.target))) {
      throw DefectError("CRT solution " + ring.format(a) + " violates a congruence");
    }
  }
  return a;
}

}  // namespace ringstar
