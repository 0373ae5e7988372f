#include "ringstar/finite_ring.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "ring_data.hpp"
#include "ringstar/errors.hpp"
#include "ringstar/ideal.hpp"

namespace ringstar {
namespace detail {

void RingData::finalize() {
  neg_table_.resize(size_);
  for (std::uint32_t a = 0; a < size_; ++a) neg_table_[a] = raw_neg(Element{a}).index;
  if (size_ > kTableLimit) return;
  add_table_.resize(size_ * size_);
  mul_table_.resize(size_ * size_);
  for (std::uint32_t a = 0; a < size_; ++a) {
    for (std::uint32_t b = a; b < size_; ++b) {
      const auto s = static_cast<std::uint16_t>(raw_add(Element{a}, Element{b}).index);
      const auto m = static_cast<std::uint16_t>(raw_mul(Element{a}, Element{b}).index);
      add_table_[a * size_ + b] = add_table_[b * size_ + a] = s;
      mul_table_[a * size_ + b] = mul_table_[b * size_ + a] = m;
    }
  }
}

std::vector<std::uint32_t> RingData::compute_inverses() const {
  const auto n = static_cast<std::uint32_t>(size_);
  std::vector<std::uint32_t> inv(size_, n);
  for (std::uint32_t a = 0; a < n; ++a) {
    if (inv[a] != n) continue;
    for (std::uint32_t b = a; b < n; ++b) {
      if (mul(Element{a}, Element{b}) == one_) {
        inv[a] = b;
        inv[b] = a;
        break;
      }
    }
  }
  return inv;
}

void RingData::ensure_units() const {
  std::call_once(units_once_, [this] {
    inverses_ = compute_inverses();
    units_ = ElementSet(size_);
    for (std::uint32_t a = 0; a < size_; ++a) {
      if (inverses_[a] != size_) units_.insert(Element{a});
    }
  });
}

const ElementSet& RingData::units() const {
  ensure_units();
  return units_;
}

std::optional<Element> RingData::inverse(Element a) const {
  ensure_units();
  if (inverses_[a.index] == size_) return std::nullopt;
  return Element{inverses_[a.index]};
}

namespace {

std::int64_t parse_integer(std::string_view text) {
  std::string trimmed;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  }
  std::int64_t value = 0;
  const char* first = trimmed.data();
  const char* last = trimmed.data() + trimmed.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || trimmed.empty()) {
    throw SpecError("expected an integer element, got '" + std::string(text) + "'", 0);
  }
  return value;
}

}  // namespace

ModularData::ModularData(RingSpec spec, std::uint64_t n)
    : RingData(std::move(spec), n, Element{1}), n_(n) {}

Element ModularData::parse(std::string_view text) const {
  const std::int64_t v = parse_integer(text);
  const auto n = static_cast<std::int64_t>(n_);
  return Element{static_cast<std::uint32_t>(((v % n) + n) % n)};
}

std::vector<std::uint32_t> ModularData::compute_inverses() const {
  if (size() <= kTableLimit) return RingData::compute_inverses();
  // Extended Euclid keeps large Z/n instant; small carriers use the scan above.
  std::vector<std::uint32_t> inv(size(), static_cast<std::uint32_t>(size()));
  const auto n = static_cast<std::int64_t>(n_);
  for (std::int64_t a = 1; a < n; ++a) {
    std::int64_t r0 = n, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
      std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    if (r0 == 1) inv[a] = static_cast<std::uint32_t>(((t0 % n) + n) % n);
  }
  return inv;
}

PolynomialData::PolynomialData(RingSpec spec, std::uint32_t p, Coefficients modulus)
    : RingData(std::move(spec),
               [&] {
                 std::size_t s = 1;
                 for (std::size_t i = 1; i < modulus.size(); ++i) s *= p;
                 return s;
               }(),
               Element{1}),
      p_(p),
      modulus_(std::move(modulus)),
      degree_(modulus_.size() - 1) {}

std::string PolynomialData::format(Element a) const { return poly::format(decode(a)); }

Element PolynomialData::parse(std::string_view text) const {
  return reduce(poly::parse(text, p_));
}

Element PolynomialData::reduce(Coefficients c) const {
  return Element{poly::encode(poly::remainder(std::move(c), modulus_, p_), p_)};
}

Element PolynomialData::raw_add(Element a, Element b) const {
  return Element{poly::encode(poly::add(decode(a), decode(b), p_), p_)};
}

Element PolynomialData::raw_mul(Element a, Element b) const {
  return reduce(poly::multiply(decode(a), decode(b), p_));
}

Element PolynomialData::raw_neg(Element a) const {
  return Element{poly::encode(poly::negate(decode(a), p_), p_)};
}

namespace {

Element product_one(const std::vector<FiniteRing>& factors) {
  std::uint64_t index = 0;
  for (std::size_t i = factors.size(); i-- > 0;) {
    index = index * factors[i].size() + factors[i].one().index;
  }
  return Element{static_cast<std::uint32_t>(index)};
}

}  // namespace

ProductData::ProductData(RingSpec spec, std::vector<FiniteRing> factors)
    : RingData(std::move(spec),
               std::accumulate(factors.begin(), factors.end(), std::size_t{1},
                               [](std::size_t acc, const FiniteRing& f) { return acc * f.size(); }),
               product_one(factors)),
      factors_(std::move(factors)) {}

std::vector<Element> ProductData::split(Element a) const {
  std::vector<Element> parts(factors_.size());
  std::uint32_t rest = a.index;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto radix = static_cast<std::uint32_t>(factors_[i].size());
    parts[i] = Element{rest % radix};
    rest /= radix;
  }
  return parts;
}

Element ProductData::join(std::span<const Element> parts) const {
  std::uint64_t index = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) index = index * factors_[i].size() + parts[i].index;
  return Element{static_cast<std::uint32_t>(index)};
}

std::string ProductData::format(Element a) const {
  const auto parts = split(a);
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += factors_[i].format(parts[i]);
  }
  return out + ")";
}

Element ProductData::parse(std::string_view text) const {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.size() < 2 || compact.front() != '(' || compact.back() != ')') {
    throw SpecError("expected a tuple element '(a,b,...)', got '" + std::string(text) + "'", 0);
  }
  const auto pieces = split_top_level(std::string_view(compact).substr(1, compact.size() - 2), ',');
  if (pieces.size() != factors_.size()) {
    throw SpecError("tuple has " + std::to_string(pieces.size()) + " components, expected " +
                        std::to_string(factors_.size()),
                    0);
  }
  std::vector<Element> parts;
  for (std::size_t i = 0; i < pieces.size(); ++i) parts.push_back(factors_[i].parse_element(pieces[i]));
  return join(parts);
}

Element ProductData::raw_add(Element a, Element b) const {
  auto x = split(a);
  const auto y = split(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = factors_[i].add(x[i], y[i]);
  return join(x);
}

Element ProductData::raw_mul(Element a, Element b) const {
  auto x = split(a);
  const auto y = split(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = factors_[i].mul(x[i], y[i]);
  return join(x);
}

Element ProductData::raw_neg(Element a) const {
  auto x = split(a);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = factors_[i].neg(x[i]);
  return join(x);
}

std::vector<std::uint32_t> ProductData::compute_inverses() const {
  if (size() <= kTableLimit) return RingData::compute_inverses();
  std::vector<std::uint32_t> inv(size(), static_cast<std::uint32_t>(size()));
  for (std::uint32_t a = 0; a < size(); ++a) {
    auto parts = split(Element{a});
    bool ok = true;
    for (std::size_t i = 0; i < parts.size() && ok; ++i) {
      const auto v = factors_[i].inverse(parts[i]);
      if (v) parts[i] = *v;
      ok = v.has_value();
    }
    if (ok) inv[a] = join(parts).index;
  }
  return inv;
}

QuotientData::QuotientData(RingSpec spec, FiniteRing parent, std::vector<std::uint32_t> coset_of,
                           std::vector<Element> representatives)
    : RingData(std::move(spec), representatives.size(),
               Element{coset_of[parent.one().index]}),
      parent_(std::move(parent)),
      coset_of_(std::move(coset_of)),
      reps_(std::move(representatives)) {}

}  // namespace detail

FiniteRing::FiniteRing(std::shared_ptr<const detail::RingData> data) : data_(std::move(data)) {}

std::size_t FiniteRing::size() const noexcept { return data_->size(); }
Element FiniteRing::one() const noexcept { return data_->one(); }
Element FiniteRing::add(Element a, Element b) const { return data_->add(a, b); }
Element FiniteRing::neg(Element a) const { return data_->neg(a); }
Element FiniteRing::mul(Element a, Element b) const { return data_->mul(a, b); }

Element FiniteRing::pow(Element a, std::uint64_t exponent) const {
  Element result = one();
  while (exponent) {
    if (exponent & 1) result = mul(result, a);
    a = mul(a, a);
    exponent >>= 1;
  }
  return result;
}

Element FiniteRing::from_integer(std::int64_t k) const {
  const bool negative = k < 0;
  auto magnitude = static_cast<std::uint64_t>(negative ? -(k + 1) : k) + (negative ? 1 : 0);
  Element result = zero();
  Element step = one();
  while (magnitude) {
    if (magnitude & 1) result = add(result, step);
    step = add(step, step);
    magnitude >>= 1;
  }
  return negative ? neg(result) : result;
}

const RingSpec& FiniteRing::spec() const noexcept { return data_->spec(); }
std::string FiniteRing::format(Element e) const { return data_->format(e); }
Element FiniteRing::parse_element(std::string_view text) const { return data_->parse(text); }
const ElementSet& FiniteRing::units() const { return data_->units(); }
std::optional<Element> FiniteRing::inverse(Element a) const { return data_->inverse(a); }
std::span<const FiniteRing> FiniteRing::factors() const noexcept { return data_->factors(); }

std::vector<Element> FiniteRing::components(Element a) const {
  if (const auto* product = dynamic_cast<const detail::ProductData*>(data_.get())) {
    return product->split(a);
  }
  return {a};
}

Element FiniteRing::from_components(std::span<const Element> parts) const {
  if (const auto* product = dynamic_cast<const detail::ProductData*>(data_.get())) {
    return product->join(parts);
  }
  if (parts.size() != 1) throw PreconditionError("ring is not a product");
  return parts.front();
}

namespace {

std::size_t checked_size(std::size_t size, const Limits& limits, const std::string& what) {
  if (size > limits.max_carrier) {
    throw GuardError("carrier of " + what + " exceeds guard " +
                     std::to_string(limits.max_carrier));
  }
  return size;
}

template <typename T, typename... Args>
FiniteRing finalized(Args&&... args) {
  auto data = std::make_shared<T>(std::forward<Args>(args)...);
  data->finalize();
  return FiniteRing(std::move(data));
}

}  // namespace

FiniteRing build_ring(const RingSpec& spec, const Limits& limits) {
  switch (spec.kind) {
    case RingSpec::Kind::modular:
      if (spec.modulus < 2) throw PreconditionError("Z/n requires n >= 2");
      checked_size(spec.modulus, limits, spec.to_string());
      return finalized<detail::ModularData>(spec, spec.modulus);

    case RingSpec::Kind::polynomial_quotient: {
      if (!is_prime(spec.prime)) throw PreconditionError("GF(p) requires a prime p");
      if (spec.polynomial.size() < 2 || spec.polynomial.back() != 1) {
        throw PreconditionError("modulus polynomial must be monic of degree >= 1");
      }
      std::size_t size = 1;
      for (std::size_t i = 1; i < spec.polynomial.size(); ++i) {
        size *= spec.prime;
        checked_size(size, limits, spec.to_string());
      }
      return finalized<detail::PolynomialData>(spec, spec.prime, spec.polynomial);
    }

    case RingSpec::Kind::product: {
      std::vector<FiniteRing> factors;
      std::size_t size = 1;
      for (const auto& child : spec.children) {
        factors.push_back(build_ring(child, limits));
        size *= factors.back().size();
        checked_size(size, limits, spec.to_string());
      }
      return finalized<detail::ProductData>(spec, std::move(factors));
    }

    case RingSpec::Kind::quotient: {
      FiniteRing base = build_ring(spec.children.front(), limits);
      std::vector<Element> gens;
      for (const auto& g : spec.generators) gens.push_back(base.parse_element(g));
      Ideal ideal = ideal_closure(base, gens);
      if (!ideal.is_proper()) {
        throw PreconditionError("quotient by the unit ideal violates 1 != 0: " + spec.to_string());
      }
      return detail::make_quotient(base, ideal, spec).ring;
    }
  }
  throw PreconditionError("unknown ring kind");
}

FiniteRing make_ring(std::string_view spec_text, const Limits& limits) {
  return build_ring(parse_ring_spec(spec_text), limits);
}

ElementSet elements_of(const FiniteRing& ring, std::span<const Element> items) {
  return ElementSet(ring.size(), items);
}

}  // namespace ringstar
