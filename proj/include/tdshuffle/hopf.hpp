#ifndef TDSHUFFLE_HOPF_HPP
#define TDSHUFFLE_HOPF_HPP

#include <string>
#include <utility>
#include <vector>

#include "tdshuffle/coalgebra.hpp"

namespace tdshuffle {

// Word degree: sum of letter degrees plus (length - 1). The unit word has
// degree 0 and the right shift raises degree by exactly one.
unsigned word_degree(const Context& ctx, const TensorWord& w);

// Largest word degree appearing in a (0 for the zero element).
unsigned element_degree(const Context& ctx, const TensorElement& a);

// All basis words of degree <= bound, in canonical word order.
std::vector<TensorWord> basis_words_up_to(const Context& ctx, unsigned bound);

// Splits a = c*[1] + kernel with counit(kernel) = 0; c = counit(a).
std::pair<Coefficient, TensorElement> counit_split(const Context& ctx,
                                                   const TensorElement& a);

// The right antipode: S([1]) = [1], and on counit-kernel words
//   S(w) = -sum u <> S(v) over the reduced coproduct pairs (u, v).
// Memoized per word; linear on elements. The recursion carries runtime
// guards (left factors in the counit kernel, right factors of strictly
// smaller degree) that throw InvariantViolation instead of recursing
// forever if the filtration bookkeeping were ever wrong.
TensorElement antipode(const Context& ctx, const TensorElement& a);
TensorElement antipode_word(const Context& ctx, const TensorWord& w);

// S tabulated on every basis word of degree <= bound (no fallback), ready
// for the convolution machinery.
LinearMapTable antipode_table(const Context& ctx, unsigned bound);

struct HopfLawResult {
  std::string law;
  // Informational rows report a computation without claiming it must hold.
  bool asserted = true;
  bool holds = true;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_counterexample;  // empty when no failure was seen
};

struct HopfReport {
  unsigned degree_bound = 0;
  std::size_t vars = 0;
  std::size_t words_enumerated = 0;
  std::vector<HopfLawResult> laws;

  bool all_hold() const;
  std::string str() const;
};

// Exhaustive verification over all basis words of degree <= bound:
//   - (id * S)(w) = counit(w)*[1] through the convolution machinery,
//   - every term of u <> v has degree <= deg(u) + deg(v),
//   - every pair (x, y) in Delta(w) has deg(x) + deg(y) <= deg(w), and a
//     degree-0 left factor forces deg(y) <= deg(w),
// plus an informational row for the reverse convolution (S * id), which is
// NOT expected to equal e (the antipode is one-sided).
// `antipode_override` substitutes a custom S table (used to exercise the
// counterexample reporting path).
HopfReport hopf_check(const Context& ctx, unsigned degree_bound,
                      const LinearMapTable* antipode_override = nullptr);

}  // namespace tdshuffle

#endif
