#include "ringstar/corpus.hpp"

#include <algorithm>
#include <random>

#include "ringstar/errors.hpp"
#include "ringstar/matrix.hpp"
#include "ringstar/semiunit.hpp"
#include "ringstar/star.hpp"

namespace ringstar {

void CriterionResult::fail(std::string message) {
  passed = false;
  ++failure_count;
  if (failures.size() < 8) failures.push_back(std::move(message));
}

namespace {

std::vector<RingSpec> base_specs() {
  std::vector<RingSpec> specs;
  for (std::uint64_t n = 2; n <= 40; ++n) specs.push_back(RingSpec::modular_ring(n));
  for (std::uint32_t p : {2u, 3u}) {
    for (std::size_t degree = 1; degree <= 3; ++degree) {
      std::uint32_t count = 1;
      for (std::size_t k = 0; k < degree; ++k) count *= p;
      for (std::uint32_t low = 0; low < count; ++low) {
        Coefficients f(degree + 1, 0);
        std::uint32_t rest = low;
        for (std::size_t k = 0; k < degree; ++k) {
          f[k] = rest % p;
          rest /= p;
        }
        f[degree] = 1;
        specs.push_back(RingSpec::polynomial_ring(p, std::move(f)));
      }
    }
  }
  return specs;
}

std::size_t carrier_of(const RingSpec& spec) {
  switch (spec.kind) {
    case RingSpec::Kind::modular: return spec.modulus;
    case RingSpec::Kind::polynomial_quotient: {
      std::size_t s = 1;
      for (std::size_t i = 1; i < spec.polynomial.size(); ++i) s *= spec.prime;
      return s;
    }
    case RingSpec::Kind::product: {
      std::size_t s = 1;
      for (const auto& c : spec.children) s *= carrier_of(c);
      return s;
    }
    case RingSpec::Kind::quotient: return build_ring(spec).size();
  }
  return 0;
}

// Fields up to GF(9), then local and non-connected rings; the first seven are fields.
const std::vector<std::string>& product_pool() {
  static const std::vector<std::string> pool = {
      "Z/2", "Z/3", "Z/5", "Z/7", "GF(2)[x]/(x^2+x+1)", "GF(2)[x]/(x^3+x+1)", "GF(3)[x]/(x^2+1)",
      "Z/4", "Z/9", "Z/6", "GF(2)[x]/(x^2)", "GF(3)[x]/(x^2)", "GF(2)[x]/(x^3)", "Z/8",
      "GF(2)[x]/(x^2+x)"};
  return pool;
}

constexpr std::size_t kPoolFields = 7;
// Triples draw from this prefix of the pool.
constexpr std::size_t kTriplePool = 12;

bool all_fields(const RingSpec& spec) {
  const FiniteRing ring = build_ring(spec);
  const auto factors = ring.factors();
  return std::all_of(factors.begin(), factors.end(), [](const FiniteRing& f) { return f.is_field(); });
}

std::string describe(const FiniteRing& ring, const Ideal& ideal) {
  std::string out = ring.spec().to_string() + " ideal {";
  bool first = true;
  ideal.elements().for_each([&](Element e) {
    if (!first) out += ",";
    out += ring.format(e);
    first = false;
  });
  return out + "}";
}

// `where` is only evaluated on failure.
template <typename L, typename F>
void guarded(CriterionResult& result, L&& where, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    result.fail(where() + ": " + e.what());
  }
}

std::vector<FiniteRing> corpus_rings(std::size_t max_carrier, std::size_t limit) {
  std::vector<FiniteRing> rings;
  for (const auto& spec : corpus_specs(max_carrier)) {
    if (carrier_of(spec) <= limit) rings.push_back(build_ring(spec));
  }
  return rings;
}

std::vector<Ideal> proper_ideals(const FiniteRing& ring) {
  auto ideals = enumerate_ideals(ring);
  std::erase_if(ideals, [](const Ideal& i) { return !i.is_proper(); });
  return ideals;
}

ElementSet random_subset(std::size_t universe, std::mt19937_64& rng) {
  ElementSet set(universe);
  std::bernoulli_distribution pick(0.25);
  for (std::uint32_t i = 0; i < universe; ++i) {
    if (pick(rng)) set.insert(Element{i});
  }
  return set;
}

std::string format_matrix(const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.dim(); ++j) out += (j ? "," : "") + m.ring().format(m(i, j));
    out += "]";
  }
  return out + "]";
}

std::string format_matrices(const std::vector<Matrix>& ms) {
  std::string out = "{";
  for (std::size_t i = 0; i < ms.size(); ++i) out += (i ? ", " : "") + format_matrix(ms[i]);
  return out + "}";
}

}  // namespace

std::vector<RingSpec> corpus_product_specs(std::size_t max_carrier) {
  std::vector<RingSpec> pool;
  for (const auto& text : product_pool()) pool.push_back(parse_ring_spec(text));
  std::vector<RingSpec> out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      RingSpec pair = RingSpec::product_of({pool[i], pool[j]});
      if (carrier_of(pair) <= max_carrier) out.push_back(std::move(pair));
    }
  }
  for (std::size_t i = 0; i < kTriplePool; ++i) {
    for (std::size_t j = i; j < kTriplePool; ++j) {
      for (std::size_t k = j; k < kTriplePool; ++k) {
        RingSpec triple = RingSpec::product_of({pool[i], pool[j], pool[k]});
        if (carrier_of(triple) <= max_carrier) out.push_back(std::move(triple));
      }
    }
  }
  return out;
}

std::vector<RingSpec> corpus_specs(std::size_t max_carrier) {
  std::vector<RingSpec> out;
  for (auto& spec : base_specs()) {
    if (carrier_of(spec) <= max_carrier) out.push_back(std::move(spec));
  }
  for (auto& spec : corpus_product_specs(max_carrier)) out.push_back(std::move(spec));
  return out;
}

CriterionResult check_star_agreement(const CorpusOptions& options) {
  CriterionResult result{.id = 1, .name = "four characterizations of (*) agree"};
  for (const FiniteRing& ring : corpus_rings(options.max_carrier, options.max_carrier)) {
    for (const Ideal& ideal : proper_ideals(ring)) {
      guarded(result, [&] { return describe(ring, ideal); }, [&] {
        const StarReport report = star_report(ring, ideal);
        ++result.checked;
        for (const auto& v : report.verdicts) {
          if (v.holds != report.verdicts[0].holds) result.fail(describe(ring, ideal));
        }
      });
    }
  }
  return result;
}

CriterionResult check_semifield_has_star(const CorpusOptions& options) {
  CriterionResult result{.id = 2, .name = "every corpus ring has (*)"};
  for (const FiniteRing& ring : corpus_rings(options.max_carrier, options.max_carrier)) {
    guarded(result, [&] { return ring.spec().to_string(); }, [&] {
      ++result.checked;
      const RingStarReport report = ring_has_star(ring);
      if (!report.holds) {
        for (std::size_t i = 0; i < report.ideals.size(); ++i) {
          if (!report.verdicts[i].holds) result.fail(describe(ring, report.ideals[i]));
        }
      }
    });
  }
  return result;
}

CriterionResult check_integer_example(const CorpusOptions&) {
  CriterionResult result{.id = 3, .name = "Z -> Z/n has (*) exactly for n in {2,3,4,6}"};
  const PresentedRing integers = PresentedRing::integers();
  for (std::int64_t n = 2; n <= 50; ++n) {
    guarded(result, [&] { return "Z/" + std::to_string(n); }, [&] {
      const bool has = presented_star_check(integers, n).has_star;
      const bool expected = n == 2 || n == 3 || n == 4 || n == 6;
      ++result.checked;
      if (has != expected) result.fail("Z -> Z/" + std::to_string(n) + " reported " + (has ? "true" : "false"));
    });
  }
  std::size_t primes = 0;
  for (std::int64_t p = 2; p <= 50; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    ++primes;
    if (presented_star_check(integers, p).has_star != (p <= 3)) result.fail("prime " + std::to_string(p));
  }
  result.detail = std::to_string(primes) + " primes and 49 moduli checked";
  return result;
}

CriterionResult check_polynomial_example(const CorpusOptions&) {
  CriterionResult result{.id = 4, .name = "GF(2)[x] -> GF(2)[x]/(x) has (*), /(x^2) does not"};
  const PresentedRing k_x = PresentedRing::polynomials(2);
  guarded(result, [&] { return std::string("GF(2)[x]"); }, [&] {
    const auto linear = presented_star_check(k_x, k_x.parse_element("x"));
    ++result.checked;
    if (!linear.has_star) result.fail("(x) reported false");

    const auto square = presented_star_check(k_x, k_x.parse_element("x^2"));
    ++result.checked;
    const Element one_plus_x = square.quotient.parse_element("1+x");
    const Element one_minus_x = square.quotient.parse_element("1-x");
    if (square.has_star) result.fail("(x^2) reported true");
    if (square.witness != one_plus_x) result.fail("witness is not 1+x");
    if (square.witness_inverse != one_minus_x) result.fail("witness inverse is not 1-x");
    result.detail = "witness " + square.quotient.format(*square.witness) + " with inverse " +
                    square.quotient.format(*square.witness_inverse);
  });
  return result;
}

CriterionResult check_radical_of_product(const CorpusOptions& options) {
  CriterionResult result{.id = 5, .name = "rad of a product is the product of rads"};
  for (const auto& spec : corpus_product_specs(options.max_carrier)) {
    guarded(result, [&] { return spec.to_string(); }, [&] {
      const FiniteRing ring = build_ring(spec);
      const Ideal rad = jacobson_radical(ring);
      std::vector<std::vector<Element>> parts;
      for (const FiniteRing& f : ring.factors()) parts.push_back(jacobson_radical(f).elements().elements());

      ElementSet expected(ring.size());
      std::vector<std::size_t> cursor(parts.size(), 0);
      while (true) {
        std::vector<Element> tuple;
        for (std::size_t i = 0; i < parts.size(); ++i) tuple.push_back(parts[i][cursor[i]]);
        expected.insert(ring.from_components(tuple));
        std::size_t k = 0;
        while (k < parts.size() && ++cursor[k] == parts[k].size()) cursor[k++] = 0;
        if (k == parts.size()) break;
      }
      ++result.checked;
      if (!(expected == rad.elements())) result.fail(spec.to_string());
    });
  }
  return result;
}

CriterionResult check_reduction_mod_radical(const CorpusOptions& options) {
  CriterionResult result{.id = 6, .name = "p has (*) iff its reduction mod rad does"};
  for (const FiniteRing& ring : corpus_rings(options.max_carrier, 256)) {
    const Spectrum spec = spectrum(ring);
    for (const Ideal& ideal : proper_ideals(ring)) {
      guarded(result, [&] { return describe(ring, ideal); }, [&] {
        const ReductionPair pair = reduce_mod_rad_equiv(spec, ideal);
        ++result.checked;
        if (pair.original != pair.reduced) result.fail(describe(ring, ideal));
      });
    }
  }
  return result;
}

CriterionResult check_rho_laws(const CorpusOptions& options) {
  CriterionResult result{.id = 7, .name = "rho^-1(0) = rad, units in rho^-1(1), equality iff connected mod rad"};
  std::size_t connected = 0;
  std::size_t disconnected = 0;
  for (const FiniteRing& ring : corpus_rings(options.max_carrier, 256)) {
    guarded(result, [&] { return ring.spec().to_string(); }, [&] {
      const Spectrum spec = spectrum(ring);
      ElementSet zero_set(ring.size());
      ElementSet one_set(ring.size());
      for (Element r : ring.elements()) {
        const Rho value = rho(spec, r);
        (value == Rho::zero ? zero_set : one_set).insert(r);
      }
      const bool is_connected = idempotents(spec.reduced().ring).size() == 2;
      (is_connected ? connected : disconnected) += 1;
      ++result.checked;
      if (!(zero_set == spec.radical.elements())) result.fail(ring.spec().to_string() + ": rho^-1(0) != rad");
      if (!ring.units().is_subset_of(one_set)) result.fail(ring.spec().to_string() + ": unit with rho != 1");
      if ((ring.units() == one_set) != is_connected) {
        result.fail(ring.spec().to_string() + ": rho^-1(1) = units disagrees with connectedness");
      }
    });
  }
  for (const auto& ring : {PresentedRing::integers(), PresentedRing::polynomials(2), PresentedRing::polynomials(3)}) {
    const PresentedElement nonunit = ring.kind() == PresentedRing::Kind::integers
                                         ? PresentedElement{std::int64_t{2}}
                                         : ring.parse_element("x");
    ++result.checked;
    if (rho(ring, nonunit) != Rho::infinity) result.fail(ring.name() + ": rho(nonunit) finite");
    if (rho(ring, ring.unit_list().front()) != Rho::one) result.fail(ring.name() + ": rho(1) != 1");
  }
  result.detail = std::to_string(connected) + " connected and " + std::to_string(disconnected) +
                  " disconnected reductions";
  return result;
}

CriterionResult check_semi_inverse_uniqueness(const CorpusOptions& options) {
  CriterionResult result{.id = 8, .name = "semi-inverses form one coset of rad : r"};
  for (const FiniteRing& ring : corpus_rings(options.max_carrier, 100)) {
    const Spectrum spec = spectrum(ring);
    for (Element r : ring.elements()) {
      if (spec.in_radical(r)) continue;
      guarded(result, [&] { return ring.spec().to_string() + " r=" + ring.format(r); }, [&] {
        const ElementSet inverses = semi_inverses(spec, r);
        const Ideal colon = colon_into_radical(spec, r);
        ++result.checked;
        if (!(colon == colon_into_radical(spec, ring.mul(r, r)))) {
          result.fail(ring.spec().to_string() + " r=" + ring.format(r) + ": rad:r != rad:r^2");
        }
        inverses.for_each([&](Element s0) {
          ElementSet coset(ring.size());
          colon.elements().for_each([&](Element a) { coset.insert(ring.add(s0, a)); });
          if (!(coset == inverses)) result.fail(ring.spec().to_string() + " r=" + ring.format(r));
        });
        const bool unique = inverses.size() == 1;
        const bool unit_and_reduced = ring.is_unit(r) && spec.radical.is_zero();
        if (unique != unit_and_reduced) {
          result.fail(ring.spec().to_string() + " r=" + ring.format(r) + ": uniqueness criterion");
        }
      });
    }
  }
  return result;
}

CriterionResult check_decomposition(const CorpusOptions& options) {
  CriterionResult result{.id = 9, .name = "semi-units decompose as u*e + t with all certificates"};
  for (const FiniteRing& ring : corpus_rings(options.max_carrier, 100)) {
    const Spectrum spec = spectrum(ring);
    for (Element r : ring.elements()) {
      if (spec.in_radical(r)) continue;
      guarded(result, [&] { return ring.spec().to_string() + " r=" + ring.format(r); }, [&] {
        const auto d = semi_unit_decomposition(spec, r);
        ++result.checked;
        if (!certify_decomposition(spec, r, d.u, d.e, d.t).all()) {
          result.fail(ring.spec().to_string() + " r=" + ring.format(r));
        }
      });
    }
  }
  guarded(result, [&] { return std::string("Z/10 r=2"); }, [&] {
    const FiniteRing z10 = make_ring("Z/10");
    const Spectrum spec = spectrum(z10);
    const Element two = z10.parse_element("2");
    const auto d = semi_unit_decomposition(spec, two);
    ++result.checked;
    if (!d.certificates.all()) result.fail("Z/10 r=2 certificates");
    result.detail = "Z/10: 2 = " + z10.format(d.u) + "*" + z10.format(d.e) + " + " + z10.format(d.t);
  });
  return result;
}

CriterionResult check_crt_lifting(const CorpusOptions& options) {
  CriterionResult result{.id = 10, .name = "CRT lifting of every unit of every proper quotient"};
  for (const FiniteRing& ring : corpus_rings(options.max_carrier, 256)) {
    const Spectrum spec = spectrum(ring);
    for (const Ideal& ideal : proper_ideals(ring)) {
      const Quotient q = quotient_ring(ring, ideal);
      q.ring.units().for_each([&](Element v) {
        guarded(result, [&] { return describe(ring, ideal) + " v=" + q.ring.format(v); }, [&] {
          const Element lifted = crt_unit_lift(spec, q.projection, v);
          ++result.checked;
          if (!ring.is_unit(lifted) || q.projection(lifted) != v) {
            result.fail(describe(ring, ideal) + " v=" + q.ring.format(v));
          }
        });
      });
    }
  }
  return result;
}

CriterionResult check_product_of_fields(const CorpusOptions& options) {
  CriterionResult result{.id = 11, .name = "product-of-fields adjustment yields a unit congruent to a"};
  for (const auto& spec : corpus_product_specs(options.max_carrier)) {
    if (!all_fields(spec)) continue;
    const FiniteRing ring = build_ring(spec);
    for (const Ideal& ideal : enumerate_ideals(ring)) {
      for (Element a : ring.elements()) {
        for (Element b : ring.elements()) {
          if (!ideal.contains(ring.sub(ring.one(), ring.mul(a, b)))) continue;
          guarded(result, [&] { return describe(ring, ideal); }, [&] {
            const Element adjusted = product_fields_adjust(ring, ideal, a, b);
            ++result.checked;
            if (!ring.is_unit(adjusted) || !ideal.contains(ring.sub(adjusted, a))) {
              result.fail(describe(ring, ideal) + " a=" + ring.format(a));
            }
          });
        }
      }
    }
  }
  return result;
}

CriterionResult check_gl_lifting(const CorpusOptions& options) {
  CriterionResult result{.id = 12, .name = "every lift of an invertible matrix along a radical kernel is invertible"};
  std::mt19937_64 rng(options.seed);

  // Exhaustive: n = 2, Z/4 -> Z/2.
  {
    const FiniteRing z4 = make_ring("Z/4");
    const Spectrum spec = spectrum(z4);
    const Element two = z4.parse_element("2");
    const Quotient q = quotient_ring(z4, ideal_closure(z4, std::span<const Element>(&two, 1)));
    const MatrixSpace targets(q.ring, 2);
    std::size_t invertible = 0;
    for (std::size_t idx = 0; idx < targets.size(); ++idx) {
      const Matrix b = targets.at(idx);
      if (!is_invertible(b)) continue;
      ++invertible;
      guarded(result, [&] { return std::string("Z/4->Z/2 default lift"); }, [&] { gl_lift(spec, q.projection, b); });
      for (std::uint32_t family = 0; family < 16; ++family) {
        Matrix lift(z4, 2);
        for (std::size_t k = 0; k < 4; ++k) {
          const auto fiber = q.projection.preimages(b(k / 2, k % 2));
          lift.set(k / 2, k % 2, fiber[(family >> k) & 1u]);
        }
        ++result.checked;
        if (!is_invertible(lift) || !(lift.map(q.projection) == b)) result.fail("Z/4->Z/2 lift family");
      }
    }
    if (invertible != 6) result.fail("expected 6 invertible 2x2 matrices over GF(2), found " + std::to_string(invertible));
  }

  // Sampled: Z/p^k -> Z/p, n in {2, 3}.
  for (const auto& [source_text, gen] : {std::pair{"Z/8", "2"}, std::pair{"Z/9", "3"}, std::pair{"Z/25", "5"}}) {
    const FiniteRing source = make_ring(source_text);
    const Spectrum spec = spectrum(source);
    const Element g = source.parse_element(gen);
    const Quotient q = quotient_ring(source, ideal_closure(source, std::span<const Element>(&g, 1)));
    std::uniform_int_distribution<std::uint32_t> entry(0, static_cast<std::uint32_t>(q.ring.size() - 1));
    for (std::size_t n : {2u, 3u}) {
      std::size_t done = 0;
      while (done < options.lift_samples) {
        Matrix b(q.ring, n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) b.set(i, j, Element{entry(rng)});
        }
        if (!q.ring.is_unit(det(b))) continue;
        Matrix lift(source, n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            const auto fiber = q.projection.preimages(b(i, j));
            std::uniform_int_distribution<std::size_t> pick(0, fiber.size() - 1);
            lift.set(i, j, fiber[pick(rng)]);
          }
        }
        ++done;
        ++result.checked;
        guarded(result, [&] { return std::string(source_text) + " default lift"; }, [&] { gl_lift(spec, q.projection, b); });
        if (!is_invertible(lift)) result.fail(std::string(source_text) + " n=" + std::to_string(n));
      }
    }
  }
  return result;
}

CriterionResult check_dedekind_finite(const CorpusOptions&) {
  CriterionResult result{.id = 13, .name = "M_2(Z/2) and M_2(Z/3) are Dedekind-finite"};
  for (const char* text : {"Z/2", "Z/3"}) {
    guarded(result, [&] { return std::string(text); }, [&] {
      const MatrixSpace space(make_ring(text), 2);
      ++result.checked;
      if (!dedekind_finite_check(space)) result.fail(std::string("M_2(") + text + ")");
    });
  }
  return result;
}

CriterionResult check_saturation_laws(const CorpusOptions& options) {
  CriterionResult result{.id = 14, .name = "saturation is extensive, monotone, idempotent; {1}~ = units"};
  std::mt19937_64 rng(options.seed ^ 0x5a5a5a5aULL);
  for (const FiniteRing& ring : corpus_rings(options.max_carrier, options.max_carrier)) {
    const std::string name = ring.spec().to_string();
    ElementSet one(ring.size());
    one.insert(ring.one());
    ++result.checked;
    if (!(saturate(ring, one) == ring.units())) result.fail(name + ": {1}~ != units");
    for (int sample = 0; sample < 3; ++sample) {
      const ElementSet w = random_subset(ring.size(), rng);
      const ElementSet wider = w.set_union(random_subset(ring.size(), rng));
      const ElementSet sat = saturate(ring, w);
      ++result.checked;
      if (!w.is_subset_of(sat)) result.fail(name + ": not extensive");
      if (!sat.is_subset_of(saturate(ring, wider))) result.fail(name + ": not monotone");
      if (!(saturate(ring, sat) == sat)) result.fail(name + ": not idempotent");
    }
  }

  const MatrixSpace space(make_ring("Z/2"), 2);
  const Matrix identity = Matrix::identity(space.ring(), 2);
  std::vector<Matrix> invertible;
  for (std::size_t idx = 0; idx < space.size(); ++idx) {
    if (is_invertible(space.at(idx))) invertible.push_back(space.at(idx));
  }
  ++result.checked;
  if (two_sided_saturate(space, std::span<const Matrix>(&identity, 1)) != invertible) {
    result.fail("M_2(Z/2): {1}~ != GL_2");
  }
  std::bernoulli_distribution pick(0.2);
  auto index_set = [&](const std::vector<Matrix>& ms) {
    std::vector<bool> bits(space.size(), false);
    for (const auto& m : ms) bits[space.index_of(m)] = true;
    return bits;
  };
  auto subset = [](const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] && !b[i]) return false;
    }
    return true;
  };
  std::size_t idempotence_failures = 0;
  constexpr int kSamples = 20;
  for (int sample = 0; sample < kSamples; ++sample) {
    std::vector<Matrix> w;
    std::vector<Matrix> wider;
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
      const bool in_w = pick(rng);
      if (in_w) w.push_back(space.at(idx));
      if (in_w || pick(rng)) wider.push_back(space.at(idx));
    }
    const auto sat = two_sided_saturate(space, w);
    const auto sat_sat = two_sided_saturate(space, sat);
    ++result.checked;
    if (!subset(index_set(w), index_set(sat))) result.fail("M_2(Z/2): not extensive");
    if (!subset(index_set(sat), index_set(two_sided_saturate(space, wider)))) result.fail("M_2(Z/2): not monotone");
    if (sat_sat != sat) {
      ++idempotence_failures;
      const auto in_sat = index_set(sat);
      const auto extra = std::find_if(sat_sat.begin(), sat_sat.end(),
                                      [&](const Matrix& m) { return !in_sat[space.index_of(m)]; });
      result.fail("M_2(Z/2): not idempotent, W = " + format_matrices(w) + ", X = " + format_matrix(*extra) +
                  " lies in (W~)~ but not in W~");
    }
  }
  result.detail = "two-sided idempotence failed on " + std::to_string(idempotence_failures) + " of " +
                  std::to_string(kSamples) + " sampled W";
  return result;
}

std::vector<CriterionResult> run_corpus(const CorpusOptions& options) {
  return {check_star_agreement(options),       check_semifield_has_star(options),
          check_integer_example(options),      check_polynomial_example(options),
          check_radical_of_product(options),   check_reduction_mod_radical(options),
          check_rho_laws(options),             check_semi_inverse_uniqueness(options),
          check_decomposition(options),        check_crt_lifting(options),
          check_product_of_fields(options),    check_gl_lifting(options),
          check_dedekind_finite(options),      check_saturation_laws(options)};
}

}  // namespace ringstar
