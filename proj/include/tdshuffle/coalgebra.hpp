#ifndef TDSHUFFLE_COALGEBRA_HPP
#define TDSHUFFLE_COALGEBRA_HPP

#include <array>
#include <map>
#include <string>

#include "tdshuffle/context.hpp"
#include "tdshuffle/products.hpp"

namespace tdshuffle {

// Componentwise diamond on the tensor square, with coefficient product.
TensorSquareElement square_mul(const Context& ctx,
                               const TensorSquareElement& a,
                               const TensorSquareElement& b);

// id (x) P: right-shifts the right component of every pair.
TensorSquareElement square_op(const Context& ctx,
                              const TensorSquareElement& a);

// The unit of the componentwise product: [1] (x) [1].
TensorSquareElement square_unit(const Context& ctx);

// Embeds a base tensor square as pairs of length-one words.
TensorSquareElement embed_base_square(const Context& ctx,
                                      const BaseTensorSquare& a);

// The coproduct, defined on length-one words by the base coproduct and
// extended to longer words by the head recursion
//   Delta(a1 (x) a') = Delta_A(a1) . (id (x) P) Delta(a'),
// which encodes the 1-cocycle rule Delta(P(a)) = (id (x) P) Delta(a).
TensorSquareElement coproduct(const Context& ctx, const TensorElement& a);
TensorSquareElement coproduct_word(const Context& ctx, const TensorWord& w);

// The counit: the base counit of the single letter on length-one words,
// zero on longer words, extended linearly.
Coefficient counit(const Context& ctx, const TensorElement& a);
Coefficient counit_word(const Context& ctx, const TensorWord& w);

// Delta(a) - [1] (x) a, defined on the counit kernel only.
TensorSquareElement reduced_coproduct(const Context& ctx,
                                      const TensorElement& a);

// (eps (x) id) and (id (x) eps), with the scalar leg folded into the
// coefficient of the surviving component.
TensorElement counit_contract_left(const Context& ctx,
                                   const TensorSquareElement& a);
TensorElement counit_contract_right(const Context& ctx,
                                    const TensorSquareElement& a);

// Flat word triples with coefficients; the common form both association
// orders of the iterated coproduct expand to.
class TensorTripleElement {
 public:
  explicit TensorTripleElement(std::size_t vars) : vars_(vars) {}

  std::size_t vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::array<TensorWord, 3>, Coefficient>& terms() const {
    return terms_;
  }

  void add_term(const TensorWord& first, const TensorWord& second,
                const TensorWord& third, const Coefficient& coeff);

  friend bool operator==(const TensorTripleElement&,
                         const TensorTripleElement&) = default;

  std::string str() const;

 private:
  std::size_t vars_;
  std::map<std::array<TensorWord, 3>, Coefficient> terms_;
};

// (Delta (x) id) and (id (x) Delta) applied to a square element.
TensorTripleElement coproduct_on_left(const Context& ctx,
                                      const TensorSquareElement& a);
TensorTripleElement coproduct_on_right(const Context& ctx,
                                       const TensorSquareElement& a);

// (id (x) id (x) P) on triples; with coproduct_on_right this expresses the
// cocycle interchange law on square elements.
TensorTripleElement triple_op_last(const Context& ctx,
                                   const TensorTripleElement& a);

// A linear map given by its values on basis words, with an optional total
// fallback. Identity and mu-after-counit are built-in total maps.
class LinearMapTable {
 public:
  enum class Fallback { None, Zero, Identity, CounitUnit };

  explicit LinearMapTable(Fallback fallback = Fallback::None)
      : fallback_(fallback) {}

  static LinearMapTable identity() {
    return LinearMapTable(Fallback::Identity);
  }
  static LinearMapTable counit_unit() {
    return LinearMapTable(Fallback::CounitUnit);
  }

  void assign(const TensorWord& w, const TensorElement& value);
  bool has(const TensorWord& w) const { return table_.contains(w); }

  TensorElement apply_word(const Context& ctx, const TensorWord& w) const;
  TensorElement apply(const Context& ctx, const TensorElement& a) const;

 private:
  Fallback fallback_;
  std::map<TensorWord, TensorElement> table_;
};

// The convolution product of two maps evaluated at a:
// (f * g)(a) = sum over Delta(a) of f(left) <> g(right).
TensorElement convolution(const Context& ctx, const LinearMapTable& f,
                          const LinearMapTable& g, const TensorElement& a);

}  // namespace tdshuffle

#endif
