#include "ringstar/hom.hpp"

#include "ring_data.hpp"
#include "ringstar/errors.hpp"

namespace ringstar {

SurjectiveHom::SurjectiveHom(FiniteRing source, FiniteRing target, std::vector<Element> map,
                             Ideal kernel)
    : source_(std::move(source)),
      target_(std::move(target)),
      map_(std::move(map)),
      kernel_(std::move(kernel)) {
  if (map_.size() != source_.size()) throw PreconditionError("hom table size mismatch");
  fiber_offsets_.assign(target_.size() + 1, 0);
  for (Element v : map_) ++fiber_offsets_[v.index + 1];
  for (std::size_t i = 1; i < fiber_offsets_.size(); ++i) fiber_offsets_[i] += fiber_offsets_[i - 1];
  fiber_elements_.resize(map_.size());
  std::vector<std::uint32_t> fill(fiber_offsets_.begin(), fiber_offsets_.end() - 1);
  for (std::uint32_t a = 0; a < map_.size(); ++a) fiber_elements_[fill[map_[a].index]++] = Element{a};
  for (std::size_t v = 0; v < target_.size(); ++v) {
    if (fiber_offsets_[v] == fiber_offsets_[v + 1]) throw PreconditionError("map is not surjective");
  }
}

std::span<const Element> SurjectiveHom::preimages(Element v) const {
  return std::span<const Element>(fiber_elements_)
      .subspan(fiber_offsets_[v.index], fiber_offsets_[v.index + 1] - fiber_offsets_[v.index]);
}

ElementSet SurjectiveHom::image(const ElementSet& subset) const {
  ElementSet out(target_.size());
  subset.for_each([&](Element a) { out.insert(map_[a.index]); });
  return out;
}

bool SurjectiveHom::verify() const {
  if ((*this)(source_.one()) != target_.one()) return false;
  for (Element a : source_.elements()) {
    for (Element b : source_.elements()) {
      if ((*this)(source_.add(a, b)) != target_.add((*this)(a), (*this)(b))) return false;
      if ((*this)(source_.mul(a, b)) != target_.mul((*this)(a), (*this)(b))) return false;
    }
  }
  ElementSet zeros(source_.size());
  for (Element a : preimages(target_.zero())) zeros.insert(a);
  return zeros == kernel_.elements();
}

namespace detail {

Quotient make_quotient(const FiniteRing& ring, const Ideal& ideal, RingSpec spec) {
  if (!ideal.is_proper()) throw PreconditionError("quotient requires a proper ideal");
  const auto none = static_cast<std::uint32_t>(ring.size());
  std::vector<std::uint32_t> coset_of(ring.size(), none);
  std::vector<Element> reps;
  const auto members = ideal.elements().elements();
  for (Element r : ring.elements()) {
    if (coset_of[r.index] != none) continue;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(r);
    for (Element i : members) coset_of[ring.add(r, i).index] = c;
  }
  std::vector<Element> map(ring.size());
  for (std::size_t a = 0; a < ring.size(); ++a) map[a] = Element{coset_of[a]};

  auto data = std::make_shared<QuotientData>(std::move(spec), ring, std::move(coset_of), std::move(reps));
  data->finalize();
  FiniteRing target(std::move(data));
  return Quotient{target, SurjectiveHom(ring, target, std::move(map), ideal)};
}

}  // namespace detail

Quotient quotient_ring(const FiniteRing& ring, const Ideal& ideal) {
  std::vector<std::string> gens;
  for (Element g : ideal.generators()) gens.push_back(ring.format(g));
  if (gens.empty()) gens.push_back(ring.format(ring.zero()));
  return detail::make_quotient(ring, ideal, RingSpec::quotient_of(ring.spec(), std::move(gens)));
}

Ideal image_ideal(const SurjectiveHom& hom, const Ideal& ideal) {
  return ideal_from_elements(hom.target(), hom.image(ideal.elements()));
}

Ideal preimage_ideal(const SurjectiveHom& hom, const Ideal& ideal) {
  ElementSet members(hom.source().size());
  for (Element a : hom.source().elements()) {
    if (ideal.contains(hom(a))) members.insert(a);
  }
  return ideal_from_elements(hom.source(), members);
}

}  // namespace ringstar
