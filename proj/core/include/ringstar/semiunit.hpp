#pragma once

#include <span>
#include <string_view>

#include "ringstar/presented.hpp"
#include "ringstar/spectrum.hpp"

namespace ringstar {

/// Minimum size of a finite semi-inverse set, which can only be 0, 1 or infinity.
enum class Rho { zero, one, infinity };

std::string_view to_string(Rho value);

/// For every maximal m: r in m, or 1 - s*r in m for some s in `candidates`.
bool is_semi_inverse_set(const Spectrum& spec, Element r, std::span<const Element> candidates);

/// 0 on rad(R), 1 when some s has r(1 - sr) in rad(R). On a finite ring the value
/// infinity cannot occur and raises DefectError.
Rho rho(const Spectrum& spec, Element r);
Rho rho(const FiniteRing& ring, Element r);

/// On Z and GF(p)[x] (domains, rad = 0): 0 for zero, 1 for units, infinity otherwise.
Rho rho(const PresentedRing& ring, const PresentedElement& r);

/// Replaces a finite semi-inverse set by a single semi-inverse s, where
/// 1 - s*r equals the product of the (1 - s_i*r). Duplicates are ignored.
Element collapse_semi_inverse_set(const Spectrum& spec, Element r,
                                  std::span<const Element> candidates);

/// {s : r(1 - sr) in rad(R)} by full scan. Requires rho(r) = 1.
ElementSet semi_inverses(const Spectrum& spec, Element r);

/// rad(R) : r. Also checks that it equals rad(R) : r^2.
Ideal colon_into_radical(const Spectrum& spec, Element r);

/// r = u*e + t with u a unit, e idempotent modulo rad(R), t in rad(R).
struct SemiUnitDecomposition {
  Element u;
  Element e;
  Element t;
  Element u_inverse;

  struct Certificates {
    bool u_is_unit = false;
    bool e_idempotent_mod_rad = false;
    bool t_in_radical = false;
    bool recombines = false;               // r == u*e + t
    bool u_inverse_is_semi_inverse = false;  // r(1 - u^{-1} r) in rad(R)

    bool all() const {
      return u_is_unit && e_idempotent_mod_rad && t_in_radical && recombines &&
             u_inverse_is_semi_inverse;
    }
  } certificates;
};

/// Recomputes every certificate for a candidate triple.
SemiUnitDecomposition::Certificates certify_decomposition(const Spectrum& spec, Element r,
                                                          Element u, Element e, Element t);

/// Constructive decomposition of a semi-unit. Requires rho(r) = 1.
SemiUnitDecomposition semi_unit_decomposition(const Spectrum& spec, Element r);

/// Every a admits x with a = a*x*a.
bool is_von_neumann_regular(const FiniteRing& ring);

/// rho(R) in {0, 1}; computed elementwise and via von Neumann regularity of R/rad(R),
/// disagreement raises DefectError.
bool is_semifield(const Spectrum& spec);
bool is_semifield(const FiniteRing& ring);

/// Z and GF(p)[x] are never semi-fields: 2 (resp. x) has rho = infinity.
bool is_semifield(const PresentedRing& ring);

}  // namespace ringstar
