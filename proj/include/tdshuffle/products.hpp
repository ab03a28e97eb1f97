#ifndef TDSHUFFLE_PRODUCTS_HPP
#define TDSHUFFLE_PRODUCTS_HPP

#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdshuffle/context.hpp"

namespace tdshuffle {

// Shuffle-type product on the full word space (scalars included), defined by
// the head recursion
//   a # b = a1.(a' # b) + b1.(a # b') + L*(a1 b1).(a' # b')
//           - (a1 b1).((a' # [1]) # b')
// with scalars multiplying through. Both operands must be Plus-tagged.
TensorElement shuffle(const Context& ctx, const TensorElement& a,
                      const TensorElement& b);
// Word-level shuffle (memoized); exposed for tests and oracles.
TensorElement shuffle_words(const Context& ctx, const TensorWord& a,
                            const TensorWord& b);

// Product on the length >= 1 span: heads multiply in the base, tails
// shuffle. Both operands must be Lambda-tagged; scalars are rejected by the
// tag check.
TensorElement diamond(const Context& ctx, const TensorElement& a,
                      const TensorElement& b);
TensorElement diamond_words(const Context& ctx, const TensorWord& a,
                            const TensorWord& b);

// The right-shift operator: prepends the unit letter to every word.
TensorElement right_shift(const Context& ctx, const TensorElement& a);

// Operator specimens for law checking on the length >= 1 word algebra.
class Operator {
 public:
  enum class Kind { RightShift, Zero, Scale };

  static Operator right_shift() { return Operator(Kind::RightShift, 1); }
  static Operator zero() { return Operator(Kind::Zero, 0); }
  static Operator scale(const Coefficient& factor) {
    return Operator(Kind::Scale, factor);
  }

  Kind kind() const { return kind_; }
  const Coefficient& factor() const { return factor_; }
  bool negated() const { return negated_; }
  // The pointwise negation -P, used by the sign-duality law.
  Operator negation() const;

  TensorElement apply(const Context& ctx, const TensorElement& a) const;
  std::string name() const;

 private:
  Operator(Kind kind, Coefficient factor)
      : kind_(kind), factor_(std::move(factor)) {}

  Kind kind_;
  Coefficient factor_;
  bool negated_ = false;
};

// The weight-L double product built from an operator P:
//   x * y = x<>P(y) + P(x)<>y + L*(x<>y) - x<>P([1])<>y.
// star_lambda uses the right-shift operator; star_with is the generalized
// form the law checker needs.
TensorElement star_with(const Context& ctx, const Operator& op,
                        const TensorElement& a, const TensorElement& b);
TensorElement star_lambda(const Context& ctx, const TensorElement& a,
                          const TensorElement& b);

// Identities an operator P on a unital algebra may satisfy. All four share
// the skeleton P(x)P(y) = P(x P(y) + P(x) y [+ w x y] [- x P(1) y]) with the
// modified variant moving the x P(1) y correction outside the outer P.
class LawId {
 public:
  enum class Kind { RotaBaxter, Td, LambdaTd, ModifiedTd };

  static LawId rota_baxter(const Coefficient& weight) {
    return LawId(Kind::RotaBaxter, weight);
  }
  static LawId td() { return LawId(Kind::Td, 0); }
  static LawId lambda_td() { return LawId(Kind::LambdaTd, Coefficient::lambda()); }
  static LawId lambda_td_weight(const Coefficient& weight) {
    return LawId(Kind::LambdaTd, weight);
  }
  static LawId modified_td() {
    return LawId(Kind::ModifiedTd, Coefficient::lambda());
  }

  Kind kind() const { return kind_; }
  const Coefficient& weight() const { return weight_; }
  std::string name() const;

 private:
  LawId(Kind kind, Coefficient weight) : kind_(kind), weight_(std::move(weight)) {}

  Kind kind_;
  Coefficient weight_;
};

// Which product multiplies the operands inside the law. Star uses the double
// product built from the operator under test; the P(1) argument stays the
// unit word in both cases.
enum class Ambient { Diamond, Star };

struct LawCounterexample {
  TensorElement x, y;
  TensorElement lhs, rhs, difference;
};

struct LawCheckResult {
  bool holds = true;
  std::size_t checked = 0;
  std::optional<LawCounterexample> counterexample;
};

LawCheckResult check_law(
    const Context& ctx, const Operator& op, const LawId& law,
    const std::vector<std::pair<TensorElement, TensorElement>>& samples,
    Ambient ambient = Ambient::Diamond);

// Target capability for the universal extension: a commutative Q[L]-algebra
// with a distinguished linear operator.
template <typename T>
concept ExtensionTarget = requires(const T t, const typename T::Elem& e,
                                   const Coefficient& c) {
  { t.unit() } -> std::same_as<typename T::Elem>;
  { t.zero() } -> std::same_as<typename T::Elem>;
  { t.add(e, e) } -> std::same_as<typename T::Elem>;
  { t.mul(e, e) } -> std::same_as<typename T::Elem>;
  { t.scale(c, e) } -> std::same_as<typename T::Elem>;
  { t.apply_op(e) } -> std::same_as<typename T::Elem>;
};

// Extends a generator assignment to the whole length >= 1 word algebra by
//   ext([a]) = f(a),  ext(a1 (x) a') = f(a1) * P(ext(a'))
// where f maps each base monomial to the product of generator images. The
// input must be Lambda-tagged.
template <ExtensionTarget T>
typename T::Elem free_extension(
    const T& target, const std::vector<typename T::Elem>& generator_images,
    const TensorElement& a) {
  if (a.space() != Space::Lambda) {
    throw std::invalid_argument(
        "free_extension: element must lie in the length >= 1 word space");
  }
  if (generator_images.size() != a.vars()) {
    throw std::invalid_argument(
        "free_extension: one image per generator required");
  }
  auto monomial_image = [&](const BaseMonomial& m) {
    typename T::Elem out = target.unit();
    for (std::size_t i = 0; i < m.vars(); ++i) {
      for (unsigned k = 0; k < m.exponent(i); ++k) {
        out = target.mul(out, generator_images[i]);
      }
    }
    return out;
  };
  typename T::Elem total = target.zero();
  for (const auto& [w, c] : a.terms()) {
    typename T::Elem acc = monomial_image(w.letter(w.length() - 1));
    for (std::size_t i = w.length() - 1; i-- > 0;) {
      acc = target.mul(monomial_image(w.letter(i)), target.apply_op(acc));
    }
    total = target.add(total, target.scale(c, acc));
  }
  return total;
}

// The word algebra as its own extension target.
struct DiamondTarget {
  const Context* ctx;
  using Elem = TensorElement;
  Elem unit() const { return ctx->unit_element(Space::Lambda); }
  Elem zero() const { return ctx->zero(Space::Lambda); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return diamond(*ctx, a, b); }
  Elem scale(const Coefficient& c, const Elem& a) const { return a.scaled(c); }
  Elem apply_op(const Elem& a) const { return right_shift(*ctx, a); }
};

// Extending the generator inclusion into the word algebra itself must give
// the identity map.
std::vector<TensorElement> generator_inclusion_images(const Context& ctx);

// The base algebra with the zero operator; extension collapses every word of
// length >= 2 to zero and keeps length-one words at their head image.
struct BaseZeroTarget {
  const BaseOps* base;
  using Elem = BaseElement;
  Elem unit() const { return BaseElement::unit(base->vars()); }
  Elem zero() const { return BaseElement(base->vars()); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return base->mul(a, b); }
  Elem scale(const Coefficient& c, const Elem& a) const { return a.scaled(c); }
  Elem apply_op(const Elem&) const { return BaseElement(base->vars()); }
};

std::vector<BaseElement> base_generator_images(const BaseOps& base);

}  // namespace tdshuffle

#endif
