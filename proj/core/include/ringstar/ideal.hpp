#pragma once

#include <span>
#include <vector>

#include "ringstar/element_set.hpp"
#include "ringstar/finite_ring.hpp"

namespace ringstar {

/// An ideal of a FiniteRing with its full element set materialized.
/// Two ideals compare equal when their element sets agree.
class Ideal {
 public:
  const FiniteRing& ring() const noexcept { return ring_; }
  std::span<const Element> generators() const noexcept { return generators_; }
  const ElementSet& elements() const noexcept { return elements_; }

  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Element e) const { return elements_.contains(e); }
  bool is_proper() const { return !contains(ring_.one()); }
  bool is_zero() const { return elements_.size() == 1; }
  bool is_subset_of(const Ideal& other) const { return elements_.is_subset_of(other.elements_); }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.elements_ == b.elements_; }

 private:
  Ideal(FiniteRing ring, std::vector<Element> generators, ElementSet elements)
      : ring_(std::move(ring)), generators_(std::move(generators)), elements_(std::move(elements)) {}

  friend Ideal ideal_closure(const FiniteRing&, std::span<const Element>);
  friend Ideal ideal_sum(const Ideal&, const Ideal&);
  friend std::vector<Ideal> enumerate_ideals(const FiniteRing&, const Limits&);
  friend Ideal ideal_from_elements(const FiniteRing&, const ElementSet&);

  FiniteRing ring_;
  std::vector<Element> generators_;
  ElementSet elements_;
};

/// Smallest ideal containing `generators`; the empty list gives the zero ideal.
Ideal ideal_closure(const FiniteRing& ring, std::span<const Element> generators);
/// Wraps a set already known to be an ideal, choosing generators greedily in index
/// order. Throws PreconditionError if the set is not closed.
Ideal ideal_from_elements(const FiniteRing& ring, const ElementSet& members);
Ideal zero_ideal(const FiniteRing& ring);
Ideal unit_ideal(const FiniteRing& ring);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

/// Every ideal exactly once, in discovery order of a breadth-first augmentation
/// starting at the zero ideal.
std::vector<Ideal> enumerate_ideals(const FiniteRing& ring, const Limits& limits = {});

/// Checks closure under +, negation and multiplication by every ring element.
bool is_ideal(const FiniteRing& ring, const ElementSet& candidate);

}  // namespace ringstar
