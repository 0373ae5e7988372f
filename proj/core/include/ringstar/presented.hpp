#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ringstar/finite_ring.hpp"
#include "ringstar/polynomial.hpp"

namespace ringstar {

/// Element of a presented infinite ring: an integer, or a polynomial over GF(p).
struct Polynomial {
  Coefficients coefficients;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};
using PresentedElement = std::variant<std::int64_t, Polynomial>;

class PresentedQuotient;

/// The integers or GF(p)[x]. Both are domains with zero Jacobson radical and a finite,
/// explicitly known unit group: {1, -1} and the nonzero constants respectively.
class PresentedRing {
 public:
  enum class Kind { integers, polynomials };

  static PresentedRing integers() { return PresentedRing(Kind::integers, 0); }
  static PresentedRing polynomials(std::uint32_t prime);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t prime() const noexcept { return prime_; }

  std::vector<PresentedElement> unit_list() const;
  bool is_zero(const PresentedElement& a) const;
  bool is_unit(const PresentedElement& a) const;

  PresentedElement parse_element(std::string_view text) const;
  std::string format(const PresentedElement& a) const;
  /// "Z" or "GF(p)[x]".
  std::string name() const;

  /// Builds the finite quotient by an integer n >= 2 or a monic polynomial of degree >= 1.
  PresentedQuotient quotient(const PresentedElement& modulus, const Limits& limits = {}) const;

  friend bool operator==(const PresentedRing&, const PresentedRing&) = default;

 private:
  PresentedRing(Kind kind, std::uint32_t prime) : kind_(kind), prime_(prime) {}

  Kind kind_;
  std::uint32_t prime_;
};

/// Accepts "Z" or "GF(<p>)[x]".
PresentedRing parse_presented_ring(std::string_view text);

class PresentedQuotient {
 public:
  PresentedQuotient(PresentedRing source, PresentedElement modulus, FiniteRing target)
      : source_(source), modulus_(std::move(modulus)), target_(std::move(target)) {}

  const PresentedRing& source() const noexcept { return source_; }
  const PresentedElement& modulus() const noexcept { return modulus_; }
  const FiniteRing& target() const noexcept { return target_; }

  /// The canonical quotient map.
  Element image(const PresentedElement& a) const;

 private:
  PresentedRing source_;
  PresentedElement modulus_;
  FiniteRing target_;
};

}  // namespace ringstar
