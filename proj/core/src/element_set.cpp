#include "ringstar/element_set.hpp"

#include <functional>

namespace ringstar {

ElementSet::ElementSet(std::size_t universe, std::span<const Element> elements)
    : bits_(universe, false) {
  for (Element e : elements) insert(e);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet set;
  set.bits_.assign(universe, true);
  set.count_ = universe;
  return set;
}

bool ElementSet::insert(Element e) {
  if (bits_[e.index]) return false;
  bits_[e.index] = true;
  ++count_;
  return true;
}

bool ElementSet::erase(Element e) {
  if (!bits_[e.index]) return false;
  bits_[e.index] = false;
  --count_;
  return true;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if (count_ > other.count_) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !(i < other.bits_.size() && other.bits_[i])) return false;
  }
  return true;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(count_);
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

std::optional<Element> ElementSet::first_not_in(const ElementSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    Element e{static_cast<std::uint32_t>(i)};
    if (bits_[i] && !other.contains(e)) return e;
  }
  return std::nullopt;
}

std::size_t ElementSet::hash() const { return std::hash<std::vector<bool>>{}(bits_); }

ElementSet ElementSet::set_union(const ElementSet& other) const {
  ElementSet out = *this;
  other.for_each([&](Element e) { out.insert(e); });
  return out;
}

ElementSet ElementSet::set_intersection(const ElementSet& other) const {
  ElementSet out(bits_.size());
  for_each([&](Element e) {
    if (other.contains(e)) out.insert(e);
  });
  return out;
}

}  // namespace ringstar
