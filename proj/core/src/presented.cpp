#include "ringstar/presented.hpp"

#include <cctype>
#include <charconv>

#include "ring_data.hpp"
#include "ringstar/errors.hpp"

namespace ringstar {

PresentedRing PresentedRing::polynomials(std::uint32_t prime) {
  if (!is_prime(prime)) throw PreconditionError("GF(p)[x] requires a prime p");
  return PresentedRing(Kind::polynomials, prime);
}

std::vector<PresentedElement> PresentedRing::unit_list() const {
  if (kind_ == Kind::integers) return {std::int64_t{1}, std::int64_t{-1}};
  std::vector<PresentedElement> units;
  for (std::uint32_t c = 1; c < prime_; ++c) units.emplace_back(Polynomial{{c}});
  return units;
}

bool PresentedRing::is_zero(const PresentedElement& a) const {
  if (const auto* k = std::get_if<std::int64_t>(&a)) return *k == 0;
  return std::get<Polynomial>(a).coefficients.empty();
}

bool PresentedRing::is_unit(const PresentedElement& a) const {
  if (const auto* k = std::get_if<std::int64_t>(&a)) return *k == 1 || *k == -1;
  return std::get<Polynomial>(a).coefficients.size() == 1;
}

PresentedElement PresentedRing::parse_element(std::string_view text) const {
  if (kind_ == Kind::polynomials) return Polynomial{poly::parse(text, prime_)};
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  std::int64_t value = 0;
  const char* first = compact.data();
  const char* last = first + compact.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (compact.empty() || ec != std::errc{} || ptr != last) {
    throw SpecError("expected an integer, got '" + std::string(text) + "'", 0);
  }
  return value;
}

std::string PresentedRing::format(const PresentedElement& a) const {
  if (const auto* k = std::get_if<std::int64_t>(&a)) return std::to_string(*k);
  return poly::format(std::get<Polynomial>(a).coefficients);
}

std::string PresentedRing::name() const {
  if (kind_ == Kind::integers) return "Z";
  return "GF(" + std::to_string(prime_) + ")[x]";
}

PresentedQuotient PresentedRing::quotient(const PresentedElement& modulus, const Limits& limits) const {
  if (kind_ == Kind::integers) {
    const auto* n = std::get_if<std::int64_t>(&modulus);
    if (!n) throw PreconditionError("integer modulus expected for Z");
    if (*n < 2) throw PreconditionError("modulus must be at least 2, got " + std::to_string(*n));
    return PresentedQuotient(*this, modulus,
                             build_ring(RingSpec::modular_ring(static_cast<std::uint64_t>(*n)), limits));
  }
  const auto* f = std::get_if<Polynomial>(&modulus);
  if (!f) throw PreconditionError("polynomial modulus expected for " + name());
  if (f->coefficients.size() < 2) throw PreconditionError("modulus polynomial must have degree >= 1");
  if (f->coefficients.back() != 1) throw PreconditionError("modulus polynomial must be monic");
  return PresentedQuotient(*this, modulus,
                           build_ring(RingSpec::polynomial_ring(prime_, f->coefficients), limits));
}

PresentedRing parse_presented_ring(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact == "Z") return PresentedRing::integers();
  const std::string_view view = compact;
  if (view.starts_with("GF(") && view.ends_with(")[x]")) {
    const std::string_view digits = view.substr(3, view.size() - 3 - 4);
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw SpecError("expected GF(<p>)[x]", 3);
    }
    if (!is_prime(p)) throw SpecError("GF(p) requires a prime p, got " + std::to_string(p), 3);
    return PresentedRing::polynomials(p);
  }
  throw SpecError("expected 'Z' or 'GF(<p>)[x]'", 0);
}

Element PresentedQuotient::image(const PresentedElement& a) const {
  if (const auto* k = std::get_if<std::int64_t>(&a)) return target_.from_integer(*k);
  const auto& data = dynamic_cast<const detail::PolynomialData&>(target_.data());
  return data.reduce(std::get<Polynomial>(a).coefficients);
}

}  // namespace ringstar
