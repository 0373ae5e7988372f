#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringstar/element.hpp"
#include "ringstar/element_set.hpp"
#include "ringstar/ring_spec.hpp"

namespace ringstar {

namespace detail {
class RingData;
}

/// A finite commutative ring with 1 != 0. Elements are canonical indices in
/// [0, size()). The handle is cheap to copy; the underlying carrier is immutable
/// and may be shared across threads.
///
/// Index encodings: Z/n uses the residue, GF(p)[x]/(f) uses base-p little-endian
/// coefficient digits, products use mixed radix with the first factor least
/// significant, and quotients number cosets by ascending minimal representative.
class FiniteRing {
 public:
  explicit FiniteRing(std::shared_ptr<const detail::RingData> data);

  std::size_t size() const noexcept;
  Element zero() const noexcept { return Element{0}; }
  Element one() const noexcept;

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const;
  Element pow(Element a, std::uint64_t exponent) const;

  /// Embedding of the integer k via k * 1.
  Element from_integer(std::int64_t k) const;

  auto elements() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(size())) |
           std::views::transform([](std::uint32_t i) { return Element{i}; });
  }

  const RingSpec& spec() const noexcept;

  std::string format(Element e) const;
  /// Parses an element in this ring's syntax: a decimal integer for Z/n, a polynomial
  /// for GF(p)[x]/(f), a tuple `(a,b,...)` for products, the base syntax for quotients.
  Element parse_element(std::string_view text) const;

  /// Units, found once by inverse scan and cached.
  const ElementSet& units() const;
  bool is_unit(Element a) const { return units().contains(a); }
  std::optional<Element> inverse(Element a) const;

  bool is_field() const { return units().size() + 1 == size(); }

  /// Factors when built from a `prod(...)` spec; empty otherwise.
  std::span<const FiniteRing> factors() const noexcept;
  std::vector<Element> components(Element a) const;
  Element from_components(std::span<const Element> parts) const;

  /// Identity of the underlying carrier object.
  bool same_as(const FiniteRing& other) const noexcept { return data_ == other.data_; }

  const detail::RingData& data() const noexcept { return *data_; }

 private:
  std::shared_ptr<const detail::RingData> data_;
};

FiniteRing build_ring(const RingSpec& spec, const Limits& limits = {});

/// Convenience: parse then build.
FiniteRing make_ring(std::string_view spec_text, const Limits& limits = {});

ElementSet elements_of(const FiniteRing& ring, std::span<const Element> items);

}  // namespace ringstar
