#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ringstar/finite_ring.hpp"

namespace ringstar {

/// The verification corpus: Z/n for 2 <= n <= 40, every GF(p)[x]/(f) with p in {2, 3}
/// and f monic of degree 1..3, and products of two or three factors drawn from a fixed
/// pool of those rings, filtered by carrier size.
std::vector<RingSpec> corpus_specs(std::size_t max_carrier = 512);

/// The product part of the corpus only.
std::vector<RingSpec> corpus_product_specs(std::size_t max_carrier = 512);

struct CorpusOptions {
  std::size_t max_carrier = 512;
  std::uint64_t seed = 1;
  std::size_t lift_samples = 1000;
};

struct CriterionResult {
  int id = 0;
  std::string name{};
  bool passed = true;
  std::size_t checked = 0;
  std::size_t failure_count = 0;
  std::vector<std::string> failures{};  // first few, for the report
  std::string detail{};

  void fail(std::string message);
};

/// Criteria are numbered 1..14; each runs independently over the corpus.
CriterionResult check_star_agreement(const CorpusOptions& options);            // 1
CriterionResult check_semifield_has_star(const CorpusOptions& options);        // 2
CriterionResult check_integer_example(const CorpusOptions& options);           // 3
CriterionResult check_polynomial_example(const CorpusOptions& options);        // 4
CriterionResult check_radical_of_product(const CorpusOptions& options);        // 5
CriterionResult check_reduction_mod_radical(const CorpusOptions& options);     // 6
CriterionResult check_rho_laws(const CorpusOptions& options);                  // 7
CriterionResult check_semi_inverse_uniqueness(const CorpusOptions& options);   // 8
CriterionResult check_decomposition(const CorpusOptions& options);             // 9
CriterionResult check_crt_lifting(const CorpusOptions& options);               // 10
CriterionResult check_product_of_fields(const CorpusOptions& options);         // 11
CriterionResult check_gl_lifting(const CorpusOptions& options);                // 12
CriterionResult check_dedekind_finite(const CorpusOptions& options);           // 13
CriterionResult check_saturation_laws(const CorpusOptions& options);           // 14

/// Runs criteria 1..14 in order.
std::vector<CriterionResult> run_corpus(const CorpusOptions& options);

}  // namespace ringstar
