#pragma once

// Internal carrier representations behind FiniteRing.

#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringstar/element_set.hpp"
#include "ringstar/finite_ring.hpp"
#include "ringstar/polynomial.hpp"
#include "ringstar/ring_spec.hpp"

namespace ringstar::detail {

// Carriers up to this size get precomputed addition and multiplication tables.
inline constexpr std::size_t kTableLimit = 1024;

class RingData {
 public:
  RingData(RingSpec spec, std::size_t size, Element one)
      : spec_(std::move(spec)), size_(size), one_(one) {}
  virtual ~RingData() = default;

  RingData(const RingData&) = delete;
  RingData& operator=(const RingData&) = delete;

  const RingSpec& spec() const noexcept { return spec_; }
  std::size_t size() const noexcept { return size_; }
  Element one() const noexcept { return one_; }

  Element add(Element a, Element b) const {
    if (!add_table_.empty()) return Element{add_table_[a.index * size_ + b.index]};
    return raw_add(a, b);
  }
  Element mul(Element a, Element b) const {
    if (!mul_table_.empty()) return Element{mul_table_[a.index * size_ + b.index]};
    return raw_mul(a, b);
  }
  Element neg(Element a) const {
    if (!neg_table_.empty()) return Element{neg_table_[a.index]};
    return raw_neg(a);
  }

  virtual std::string format(Element a) const = 0;
  virtual Element parse(std::string_view text) const = 0;
  virtual std::span<const FiniteRing> factors() const { return {}; }

  const ElementSet& units() const;
  std::optional<Element> inverse(Element a) const;

  /// Fills the operation tables; call once after construction.
  void finalize();

 protected:
  virtual Element raw_add(Element a, Element b) const = 0;
  virtual Element raw_mul(Element a, Element b) const = 0;
  virtual Element raw_neg(Element a) const = 0;

  /// Inverse table; the default is a full scan. Entries equal to size() mean "no inverse".
  virtual std::vector<std::uint32_t> compute_inverses() const;

 private:
  void ensure_units() const;

  RingSpec spec_;
  std::size_t size_;
  Element one_;
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::uint32_t> neg_table_;

  mutable std::once_flag units_once_;
  mutable ElementSet units_;
  mutable std::vector<std::uint32_t> inverses_;
};

class ModularData final : public RingData {
 public:
  ModularData(RingSpec spec, std::uint64_t n);

  std::string format(Element a) const override { return std::to_string(a.index); }
  Element parse(std::string_view text) const override;

 protected:
  Element raw_add(Element a, Element b) const override {
    return Element{static_cast<std::uint32_t>((std::uint64_t{a.index} + b.index) % n_)};
  }
  Element raw_mul(Element a, Element b) const override {
    return Element{static_cast<std::uint32_t>((std::uint64_t{a.index} * b.index) % n_)};
  }
  Element raw_neg(Element a) const override {
    return Element{a.index == 0 ? 0u : static_cast<std::uint32_t>(n_ - a.index)};
  }
  std::vector<std::uint32_t> compute_inverses() const override;

 private:
  std::uint64_t n_;
};

class PolynomialData final : public RingData {
 public:
  PolynomialData(RingSpec spec, std::uint32_t p, Coefficients modulus);

  std::string format(Element a) const override;
  Element parse(std::string_view text) const override;

  Element reduce(Coefficients c) const;

 protected:
  Element raw_add(Element a, Element b) const override;
  Element raw_mul(Element a, Element b) const override;
  Element raw_neg(Element a) const override;

 private:
  Coefficients decode(Element a) const { return poly::decode(a.index, p_, degree_); }

  std::uint32_t p_;
  Coefficients modulus_;
  std::size_t degree_;
};

class ProductData final : public RingData {
 public:
  ProductData(RingSpec spec, std::vector<FiniteRing> factors);

  std::string format(Element a) const override;
  Element parse(std::string_view text) const override;
  std::span<const FiniteRing> factors() const override { return factors_; }

  std::vector<Element> split(Element a) const;
  Element join(std::span<const Element> parts) const;

 protected:
  Element raw_add(Element a, Element b) const override;
  Element raw_mul(Element a, Element b) const override;
  Element raw_neg(Element a) const override;
  std::vector<std::uint32_t> compute_inverses() const override;

 private:
  std::vector<FiniteRing> factors_;
};

class QuotientData final : public RingData {
 public:
  /// `coset_of` maps every parent element to its coset; `representatives` holds the
  /// minimal element of each coset, ascending.
  QuotientData(RingSpec spec, FiniteRing parent, std::vector<std::uint32_t> coset_of,
               std::vector<Element> representatives);

  std::string format(Element a) const override { return parent_.format(reps_[a.index]); }
  Element parse(std::string_view text) const override {
    return Element{coset_of_[parent_.parse_element(text).index]};
  }

  const FiniteRing& parent() const noexcept { return parent_; }
  Element coset(Element parent_element) const { return Element{coset_of_[parent_element.index]}; }
  Element representative(Element a) const { return reps_[a.index]; }

 protected:
  Element raw_add(Element a, Element b) const override {
    return coset(parent_.add(reps_[a.index], reps_[b.index]));
  }
  Element raw_mul(Element a, Element b) const override {
    return coset(parent_.mul(reps_[a.index], reps_[b.index]));
  }
  Element raw_neg(Element a) const override { return coset(parent_.neg(reps_[a.index])); }

 private:
  FiniteRing parent_;
  std::vector<std::uint32_t> coset_of_;
  std::vector<Element> reps_;
};

}  // namespace ringstar::detail

#include "ringstar/hom.hpp"

namespace ringstar::detail {

/// Quotient construction shared by quotient_ring and build_ring(quot(...)).
Quotient make_quotient(const FiniteRing& ring, const Ideal& ideal, RingSpec spec);

}  // namespace ringstar::detail
