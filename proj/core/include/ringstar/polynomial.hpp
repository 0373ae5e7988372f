#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ringstar {

/// Dense univariate polynomial over GF(p), little-endian, no trailing zeros.
/// The zero polynomial has no coefficients.
using Coefficients = std::vector<std::uint32_t>;

namespace poly {

void trim(Coefficients& c);
Coefficients add(const Coefficients& a, const Coefficients& b, std::uint32_t p);
Coefficients negate(const Coefficients& a, std::uint32_t p);
Coefficients multiply(const Coefficients& a, const Coefficients& b, std::uint32_t p);

/// Remainder modulo a monic polynomial.
Coefficients remainder(Coefficients a, const Coefficients& monic, std::uint32_t p);

/// Parses `c_k*x^k + ... + c_0` (the `*` is optional, signs allowed) with coefficients
/// reduced mod p. Throws SpecError with offsets relative to `base_offset`.
Coefficients parse(std::string_view text, std::uint32_t p, std::size_t base_offset = 0);

/// Renders in descending degree, e.g. "2*x^2+x+1"; the zero polynomial renders as "0".
std::string format(const Coefficients& c);

/// Base-p little-endian index of a reduced polynomial of degree < `degree`.
std::uint32_t encode(const Coefficients& c, std::uint32_t p);
Coefficients decode(std::uint32_t index, std::uint32_t p, std::size_t degree);

}  // namespace poly
}  // namespace ringstar
