#include "ringstar/ideal.hpp"

#include <deque>
#include <unordered_map>

#include "ringstar/errors.hpp"

namespace ringstar {
namespace {

/// Additive subgroup under construction, grown one element at a time.
class SubgroupBuilder {
 public:
  SubgroupBuilder(const FiniteRing& ring, ElementSet start)
      : ring_(ring), members_(std::move(start)), list_(members_.elements()) {}

  explicit SubgroupBuilder(const FiniteRing& ring) : SubgroupBuilder(ring, ElementSet(ring.size())) {
    members_.insert(ring.zero());
    list_.push_back(ring.zero());
  }

  // S <- S + Zx, adding the cosets S + kx until kx falls back into S.
  void adjoin(Element x) {
    if (members_.contains(x)) return;
    const std::size_t base = list_.size();
    Element shift = x;
    while (!members_.contains(shift)) {
      for (std::size_t i = 0; i < base; ++i) {
        const Element y = ring_.add(list_[i], shift);
        members_.insert(y);
        list_.push_back(y);
      }
      shift = ring_.add(shift, x);
    }
  }

  void adjoin_principal(Element g) {
    for (Element r : ring_.elements()) adjoin(ring_.mul(r, g));
  }

  bool contains(Element x) const { return members_.contains(x); }
  ElementSet take() && { return std::move(members_); }

 private:
  const FiniteRing& ring_;
  ElementSet members_;
  std::vector<Element> list_;
};

}  // namespace

Ideal ideal_closure(const FiniteRing& ring, std::span<const Element> generators) {
  SubgroupBuilder builder(ring);
  for (Element g : generators) {
    if (builder.contains(g)) continue;
    builder.adjoin_principal(g);
  }
  return Ideal(ring, std::vector<Element>(generators.begin(), generators.end()),
               std::move(builder).take());
}

Ideal zero_ideal(const FiniteRing& ring) { return ideal_closure(ring, {}); }

Ideal unit_ideal(const FiniteRing& ring) {
  const Element one = ring.one();
  return ideal_closure(ring, std::span<const Element>(&one, 1));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  SubgroupBuilder builder(a.ring(), a.elements());
  b.elements().for_each([&](Element x) { builder.adjoin(x); });
  std::vector<Element> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens), std::move(builder).take());
}

Ideal ideal_from_elements(const FiniteRing& ring, const ElementSet& members) {
  SubgroupBuilder builder(ring);
  std::vector<Element> gens;
  members.for_each([&](Element g) {
    if (builder.contains(g)) return;
    gens.push_back(g);
    builder.adjoin_principal(g);
  });
  ElementSet closed = std::move(builder).take();
  if (!(closed == members)) throw PreconditionError("element set is not an ideal");
  return Ideal(ring, std::move(gens), std::move(closed));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  return ideal_from_elements(a.ring(), a.elements().set_intersection(b.elements()));
}

std::vector<Ideal> enumerate_ideals(const FiniteRing& ring, const Limits& limits) {
  if (ring.size() > limits.max_ideal_enumeration) {
    throw GuardError("ideal enumeration guard " + std::to_string(limits.max_ideal_enumeration) +
                     " exceeded by carrier " + std::to_string(ring.size()));
  }

  // Adjoining g to I yields I + (g), so one representative per principal ideal suffices.
  struct Principal {
    Element generator;
    std::vector<Element> elements;
  };
  std::vector<Principal> principals;
  std::unordered_map<std::size_t, std::vector<std::size_t>> principal_index;
  std::vector<ElementSet> principal_sets;
  for (Element g : ring.elements()) {
    ElementSet set = ideal_closure(ring, std::span<const Element>(&g, 1)).elements();
    auto& bucket = principal_index[set.hash()];
    bool seen = false;
    for (std::size_t i : bucket) seen = seen || principal_sets[i] == set;
    if (seen) continue;
    bucket.push_back(principal_sets.size());
    principals.push_back({g, set.elements()});
    principal_sets.push_back(std::move(set));
  }

  std::vector<Ideal> ideals;
  std::unordered_map<std::size_t, std::vector<std::size_t>> index;
  auto remember = [&](Ideal ideal) {
    auto& bucket = index[ideal.elements().hash()];
    for (std::size_t i : bucket) {
      if (ideals[i] == ideal) return;
    }
    bucket.push_back(ideals.size());
    ideals.push_back(std::move(ideal));
  };

  remember(zero_ideal(ring));
  for (std::size_t next = 0; next < ideals.size(); ++next) {
    for (std::size_t k = 0; k < principals.size(); ++k) {
      const Ideal& current = ideals[next];
      if (principal_sets[k].is_subset_of(current.elements())) continue;
      SubgroupBuilder builder(ring, current.elements());
      for (Element x : principals[k].elements) builder.adjoin(x);
      std::vector<Element> gens(current.generators().begin(), current.generators().end());
      gens.push_back(principals[k].generator);
      remember(Ideal(ring, std::move(gens), std::move(builder).take()));
    }
  }
  return ideals;
}

bool is_ideal(const FiniteRing& ring, const ElementSet& candidate) {
  if (!candidate.contains(ring.zero())) return false;
  const auto items = candidate.elements();
  for (Element a : items) {
    if (!candidate.contains(ring.neg(a))) return false;
    for (Element b : items) {
      if (!candidate.contains(ring.add(a, b))) return false;
    }
    for (Element r : ring.elements()) {
      if (!candidate.contains(ring.mul(r, a))) return false;
    }
  }
  return true;
}

}  // namespace ringstar
