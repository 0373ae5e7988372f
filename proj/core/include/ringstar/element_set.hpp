#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ringstar/element.hpp"

namespace ringstar {

/// A subset of a ring carrier (or any index universe), stored as a bitmap.
/// Iteration is always in ascending index order.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe, false) {}
  ElementSet(std::size_t universe, std::span<const Element> elements);

  static ElementSet full(std::size_t universe);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(Element e) const { return e.index < bits_.size() && bits_[e.index]; }

  /// Returns true when `e` was not already present.
  bool insert(Element e);
  bool erase(Element e);

  bool is_subset_of(const ElementSet& other) const;
  std::vector<Element> elements() const;

  /// First element of `*this` not in `other`, if any.
  std::optional<Element> first_not_in(const ElementSet& other) const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i]) f(Element{static_cast<std::uint32_t>(i)});
    }
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.count_ == b.count_ && a.bits_ == b.bits_;
  }

  std::size_t hash() const;

  ElementSet set_union(const ElementSet& other) const;
  ElementSet set_intersection(const ElementSet& other) const;

 private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

}  // namespace ringstar
