#ifndef TDSHUFFLE_RANDOM_GEN_HPP
#define TDSHUFFLE_RANDOM_GEN_HPP

#include <cstdint>

#include "tdshuffle/context.hpp"

namespace tdshuffle {

// splitmix64: deterministic across platforms and standard library versions,
// which the byte-identical report requirement needs (std::uniform_int_
// distribution is not pinned by the standard).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform-enough value in [0, n); n >= 1. The modulo bias is irrelevant
  // for test-case generation.
  std::uint64_t below(std::uint64_t n);

  // Stable derivation of independent streams from a master seed.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt);

 private:
  std::uint64_t state_;
};

struct GenOptions {
  unsigned max_words = 3;   // terms per element
  unsigned max_length = 4;  // letters per word
  unsigned max_degree = 5;  // total letter degree per word
};

// Coefficients drawn from {1, -1, 1/2, -1/2, L, L - 1}: small values that
// still exercise generic-weight cancellation.
Coefficient random_coefficient(Rng& rng);

BaseMonomial random_monomial(Rng& rng, std::size_t vars, unsigned degree);

// Random word of the given length with letter degrees summing to at most
// options.max_degree, each letter degree drawn flat from {0, 1, 2} within
// the remaining budget.
TensorWord random_word(Rng& rng, std::size_t vars, unsigned length,
                       const GenOptions& options);

// Element with 1..max_words terms. Plus-tagged elements may include the
// empty word (a scalar term); Lambda-tagged ones only words of length >= 1.
TensorElement random_element(Rng& rng, std::size_t vars,
                             const GenOptions& options, Space space);

// Square element with 1..2 pairs of Lambda words.
TensorSquareElement random_square(Rng& rng, std::size_t vars,
                                  const GenOptions& options);

// Base element with 1..3 monomial terms of degree <= max_degree.
BaseElement random_base_element(Rng& rng, std::size_t vars,
                                const GenOptions& options);

}  // namespace tdshuffle

#endif
