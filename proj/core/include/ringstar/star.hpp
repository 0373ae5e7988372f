#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "ringstar/presented.hpp"
#include "ringstar/spectrum.hpp"

namespace ringstar {

/// W~ = {r : s*r in W for some s}.
ElementSet saturate(const FiniteRing& ring, const ElementSet& w);

/// R^x + I as a set.
ElementSet units_plus(const FiniteRing& ring, const Ideal& ideal);

/// The four equivalent formulations of "every unit of R/I lifts to a unit of R".
enum class StarMethod {
  direct,               // p(R^x) = (R/I)^x
  saturated_sum,        // R^x + I is saturated
  saturation_equality,  // R^x + I = (1 + I)~
  witness,              // 1 - ab in I  =>  1 - au in I for some unit u
};

inline constexpr std::array<StarMethod, 4> kStarMethods = {
    StarMethod::direct, StarMethod::saturated_sum, StarMethod::saturation_equality,
    StarMethod::witness};

std::string_view to_string(StarMethod method);

struct StarVerdict {
  StarMethod method;
  bool holds = true;
  /// On failure: for `direct` a unit of R/I with no unit preimage (an element of the
  /// quotient ring); otherwise an element of R violating the formulation.
  std::optional<Element> witness{};
};

/// Throws PreconditionError for an improper ideal.
StarVerdict star_check(const FiniteRing& ring, const Ideal& ideal, StarMethod method);

struct StarReport {
  Ideal ideal;
  FiniteRing quotient;
  std::array<StarVerdict, 4> verdicts;

  bool holds() const { return verdicts[0].holds; }
};

/// All four methods; disagreement raises DefectError.
StarReport star_report(const FiniteRing& ring, const Ideal& ideal);

struct RingStarReport {
  bool holds = true;
  std::vector<Ideal> ideals;          // proper ideals, enumeration order
  std::vector<StarVerdict> verdicts;  // direct method, parallel to `ideals`
};

RingStarReport ring_has_star(const FiniteRing& ring, const Limits& limits = {});
RingStarReport ring_has_star(const FiniteRing& ring, std::span<const Ideal> ideals);

/// A unit of R mapping to the unit v of R/I, via a CRT correction at the maximal
/// ideals not containing I. Failure raises DefectError.
Element crt_unit_lift(const Spectrum& spec, const SurjectiveHom& projection, Element v);
Element crt_unit_lift(const FiniteRing& ring, const Ideal& ideal, Element v);

/// For R a product of fields and 1 - ab in I: a + e_J(1 - ab), where e_J is the
/// indicator of the coordinates where a vanishes. Always a unit congruent to a mod I.
Element product_fields_adjust(const FiniteRing& ring, const Ideal& ideal, Element a, Element b);

/// Direct verdicts for R -> R/I and R/rad -> R/(rad + I); they must agree.
struct ReductionPair {
  bool original = true;
  bool reduced = true;
  bool degenerate = false;  // rad(R) + I = R
};

ReductionPair reduce_mod_rad_equiv(const Spectrum& spec, const Ideal& ideal);
ReductionPair reduce_mod_rad_equiv(const FiniteRing& ring, const Ideal& ideal);

struct PresentedStarResult {
  bool has_star = true;
  FiniteRing quotient;
  ElementSet unit_image;                  // image of the presented unit list
  std::optional<Element> witness;         // unit of the quotient outside the image
  std::optional<Element> witness_inverse;
};

PresentedStarResult presented_star_check(const PresentedRing& ring, const PresentedElement& modulus,
                                         const Limits& limits = {});

}  // namespace ringstar
