#pragma once

#include <vector>

#include "ringstar/hom.hpp"
#include "ringstar/ideal.hpp"

namespace ringstar {

bool is_nilpotent(const FiniteRing& ring, Element a);
ElementSet nilpotent_elements(const FiniteRing& ring);

/// {e : e^2 = e}, by full scan.
ElementSet idempotents(const FiniteRing& ring);

/// The maximal ideals of R, indexed by the primitive idempotents of R/rad(R).
struct MaximalIdealList {
  FiniteRing ring;
  Quotient reduced;                          // R -> R/rad(R)
  std::vector<Ideal> ideals;
  std::vector<Element> primitive_idempotents;  // elements of reduced.ring
};

MaximalIdealList maximal_ideals(const FiniteRing& ring, const Limits& limits = {});

/// Intersection of the maximal ideals, cross-checked against the nilpotent scan.
/// Disagreement throws DefectError.
Ideal jacobson_radical(const FiniteRing& ring);

/// Everything about Spec(R) the higher modules need, computed once.
struct Spectrum {
  FiniteRing ring;
  Ideal radical;
  MaximalIdealList maximal;

  const Quotient& reduced() const noexcept { return maximal.reduced; }
  bool in_radical(Element a) const { return radical.contains(a); }
};

Spectrum spectrum(const FiniteRing& ring, const Limits& limits = {});

/// True iff R/rad(R) has only the idempotents 0 and 1.
bool is_connected_mod_rad(const FiniteRing& ring);

struct Congruence {
  Ideal ideal;
  Element target;
};

/// A list of congruences a == target_i (mod I_i) with pairwise comaximal ideals.
using CongruenceSystem = std::vector<Congruence>;

enum class CrtStrategy { automatic, scan, modular };

/// Smallest-index a with a - target_i in I_i for every i. `automatic` takes the
/// integer fast path when R is Z/n and the carrier scan otherwise.
/// Throws PreconditionError naming the first non-comaximal pair.
Element crt_solve(const FiniteRing& ring, const CongruenceSystem& system,
                  CrtStrategy strategy = CrtStrategy::automatic);

bool comaximal(const Ideal& a, const Ideal& b);

}  // namespace ringstar
