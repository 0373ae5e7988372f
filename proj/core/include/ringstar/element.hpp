#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace ringstar {

/// Canonical index of an element of a finite ring, in [0, carrier size).
struct Element {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

/// Size guards. These are configuration values; the defaults keep corpus runs short.
struct Limits {
  std::size_t max_carrier = 65536;
  std::size_t max_ideal_enumeration = 4096;
  std::size_t max_matrix_space = 65536;
  std::size_t max_matrix_dim = 3;
};

}  // namespace ringstar

template <>
struct std::hash<ringstar::Element> {
  std::size_t operator()(ringstar::Element e) const noexcept {
    return std::hash<std::uint32_t>{}(e.index);
  }
};
