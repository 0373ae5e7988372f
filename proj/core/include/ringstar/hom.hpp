#pragma once

#include <span>
#include <vector>

#include "ringstar/finite_ring.hpp"
#include "ringstar/ideal.hpp"

namespace ringstar {

/// A surjective ring homomorphism between finite rings, stored as a total table.
class SurjectiveHom {
 public:
  SurjectiveHom(FiniteRing source, FiniteRing target, std::vector<Element> map, Ideal kernel);

  const FiniteRing& source() const noexcept { return source_; }
  const FiniteRing& target() const noexcept { return target_; }
  const Ideal& kernel() const noexcept { return kernel_; }

  Element operator()(Element a) const { return map_[a.index]; }

  /// All preimages of `v`, ascending.
  std::span<const Element> preimages(Element v) const;
  Element min_preimage(Element v) const { return preimages(v).front(); }

  ElementSet image(const ElementSet& subset) const;

  /// Exhaustive check of the homomorphism laws, surjectivity and the kernel.
  bool verify() const;

 private:
  FiniteRing source_;
  FiniteRing target_;
  std::vector<Element> map_;
  Ideal kernel_;
  std::vector<std::uint32_t> fiber_offsets_;
  std::vector<Element> fiber_elements_;
};

struct Quotient {
  FiniteRing ring;
  SurjectiveHom projection;
};

/// R/I with each coset represented by its minimal element index. Requires I proper.
Quotient quotient_ring(const FiniteRing& ring, const Ideal& ideal);

/// p(J) as an ideal of the target.
Ideal image_ideal(const SurjectiveHom& hom, const Ideal& ideal);
/// p^{-1}(J) as an ideal of the source.
Ideal preimage_ideal(const SurjectiveHom& hom, const Ideal& ideal);

}  // namespace ringstar
