#include "tdshuffle/products.hpp"

#include <stdexcept>

namespace tdshuffle {

namespace {

void require_space(const TensorElement& e, Space space, const char* what) {
  if (e.space() != space) {
    throw std::invalid_argument(std::string(what) + ": operand lives in the " +
                                space_name(e.space()) + ", expected the " +
                                space_name(space));
  }
}

TensorElement prepend_letter(const BaseMonomial& letter,
                             const TensorElement& tail) {
  return graft(BaseElement::from_monomial(letter), tail);
}

}  // namespace

TensorElement shuffle_words(const Context& ctx, const TensorWord& a,
                            const TensorWord& b) {
  const std::size_t vars = ctx.vars();
  // Scalar cases: the empty word is the shuffle unit.
  if (a.is_empty()) return TensorElement::from_word(Space::Plus, vars, b);
  if (b.is_empty()) return TensorElement::from_word(Space::Plus, vars, a);

  TensorElement out(Space::Plus, vars);
  if (ctx.lookup_shuffle(a, b, &out)) return out;

  const BaseMonomial& ah = a.head();
  const BaseMonomial& bh = b.head();
  const TensorWord at = a.tail();
  const TensorWord bt = b.tail();

  out += prepend_letter(ah, shuffle_words(ctx, at, b));
  out += prepend_letter(bh, shuffle_words(ctx, a, bt));

  const BaseElement head_product = ctx.base().mul_basis(ah, bh);
  out.add_scaled(graft(head_product, shuffle_words(ctx, at, bt)),
                 Coefficient::lambda());

  // Correction term: heads fuse and the left tail first absorbs the unit
  // WORD (length one), not the scalar unit.
  const TensorElement inner =
      shuffle(ctx, shuffle_words(ctx, at, ctx.unit_word()),
              TensorElement::from_word(Space::Plus, vars, bt));
  out -= graft(head_product, inner);

  ctx.store_shuffle(a, b, out);
  return out;
}

TensorElement shuffle(const Context& ctx, const TensorElement& a,
                      const TensorElement& b) {
  require_space(a, Space::Plus, "shuffle");
  require_space(b, Space::Plus, "shuffle");
  TensorElement out(Space::Plus, ctx.vars());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      out.add_scaled(shuffle_words(ctx, wa, wb), ca * cb);
    }
  }
  return out;
}

TensorElement diamond_words(const Context& ctx, const TensorWord& a,
                            const TensorWord& b) {
  if (a.is_empty() || b.is_empty()) {
    throw std::invalid_argument(
        "diamond is defined on words of length >= 1 only");
  }
  const BaseElement head_product = ctx.base().mul_basis(a.head(), b.head());
  const TensorElement tails = shuffle_words(ctx, a.tail(), b.tail());
  return graft(head_product, tails).as_lambda();
}

TensorElement diamond(const Context& ctx, const TensorElement& a,
                      const TensorElement& b) {
  require_space(a, Space::Lambda, "diamond");
  require_space(b, Space::Lambda, "diamond");
  TensorElement out(Space::Lambda, ctx.vars());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      out.add_scaled(diamond_words(ctx, wa, wb), ca * cb);
    }
  }
  return out;
}

TensorElement right_shift(const Context& ctx, const TensorElement& a) {
  require_space(a, Space::Lambda, "right shift");
  TensorElement out(Space::Lambda, ctx.vars());
  const BaseMonomial unit_letter{BaseMonomial(ctx.vars())};
  for (const auto& [w, c] : a.terms()) {
    out.add_term(w.prepended(unit_letter), c);
  }
  return out;
}

Operator Operator::negation() const {
  Operator out = *this;
  out.negated_ = !out.negated_;
  return out;
}

TensorElement Operator::apply(const Context& ctx,
                              const TensorElement& a) const {
  TensorElement out(Space::Lambda, ctx.vars());
  switch (kind_) {
    case Kind::RightShift:
      out = tdshuffle::right_shift(ctx, a);
      break;
    case Kind::Zero:
      require_space(a, Space::Lambda, "zero operator");
      break;
    case Kind::Scale:
      require_space(a, Space::Lambda, "scale operator");
      out = a.scaled(factor_);
      break;
  }
  return negated_ ? -out : out;
}

std::string Operator::name() const {
  std::string body;
  switch (kind_) {
    case Kind::RightShift:
      body = "right-shift";
      break;
    case Kind::Zero:
      body = "zero";
      break;
    case Kind::Scale:
      body = "scale(" + factor_.str() + ")";
      break;
  }
  return negated_ ? "negated " + body : body;
}

TensorElement star_with(const Context& ctx, const Operator& op,
                        const TensorElement& a, const TensorElement& b) {
  require_space(a, Space::Lambda, "double product");
  require_space(b, Space::Lambda, "double product");
  const TensorElement pa = op.apply(ctx, a);
  const TensorElement pb = op.apply(ctx, b);
  const TensorElement p_unit = op.apply(ctx, ctx.unit_element(Space::Lambda));
  TensorElement out = diamond(ctx, a, pb);
  out += diamond(ctx, pa, b);
  out.add_scaled(diamond(ctx, a, b), Coefficient::lambda());
  out -= diamond(ctx, diamond(ctx, a, p_unit), b);
  return out;
}

TensorElement star_lambda(const Context& ctx, const TensorElement& a,
                          const TensorElement& b) {
  return star_with(ctx, Operator::right_shift(), a, b);
}

std::string LawId::name() const {
  switch (kind_) {
    case Kind::RotaBaxter:
      return "rota-baxter(weight " + weight_.str() + ")";
    case Kind::Td:
      return "td";
    case Kind::LambdaTd:
      return "lambda-td(weight " + weight_.str() + ")";
    case Kind::ModifiedTd:
      return "modified-td(weight " + weight_.str() + ")";
  }
  return "unknown";
}

LawCheckResult check_law(
    const Context& ctx, const Operator& op, const LawId& law,
    const std::vector<std::pair<TensorElement, TensorElement>>& samples,
    Ambient ambient) {
  auto mul = [&](const TensorElement& x, const TensorElement& y) {
    return ambient == Ambient::Diamond ? diamond(ctx, x, y)
                                       : star_with(ctx, op, x, y);
  };
  // P always applies to the diamond unit word, whichever ambient product
  // multiplies the law's operands.
  const TensorElement p_unit = op.apply(ctx, ctx.unit_element(Space::Lambda));

  LawCheckResult result;
  for (const auto& [x, y] : samples) {
    const TensorElement px = op.apply(ctx, x);
    const TensorElement py = op.apply(ctx, y);
    const TensorElement lhs = mul(px, py);
    TensorElement mixed = mul(x, py) + mul(px, y);
    const TensorElement correction = mul(mul(x, p_unit), y);
    TensorElement rhs(Space::Lambda, ctx.vars());
    switch (law.kind()) {
      case LawId::Kind::RotaBaxter:
        mixed.add_scaled(mul(x, y), law.weight());
        rhs = op.apply(ctx, mixed);
        break;
      case LawId::Kind::Td:
        mixed -= correction;
        rhs = op.apply(ctx, mixed);
        break;
      case LawId::Kind::LambdaTd:
        mixed.add_scaled(mul(x, y), law.weight());
        mixed -= correction;
        rhs = op.apply(ctx, mixed);
        break;
      case LawId::Kind::ModifiedTd:
        mixed.add_scaled(mul(x, y), law.weight());
        rhs = op.apply(ctx, mixed) - correction;
        break;
    }
    ++result.checked;
    const TensorElement difference = lhs - rhs;
    if (!difference.is_zero()) {
      result.holds = false;
      if (!result.counterexample) {
        result.counterexample = LawCounterexample{x, y, lhs, rhs, difference};
      }
    }
  }
  return result;
}

std::vector<TensorElement> generator_inclusion_images(const Context& ctx) {
  std::vector<TensorElement> images;
  images.reserve(ctx.vars());
  for (std::size_t i = 0; i < ctx.vars(); ++i) {
    images.push_back(TensorElement::from_word(
        Space::Lambda, ctx.vars(),
        TensorWord({BaseMonomial::generator(ctx.vars(), i)})));
  }
  return images;
}

std::vector<BaseElement> base_generator_images(const BaseOps& base) {
  std::vector<BaseElement> images;
  images.reserve(base.vars());
  for (std::size_t i = 0; i < base.vars(); ++i) {
    images.push_back(BaseElement::generator(base.vars(), i));
  }
  return images;
}

}  // namespace tdshuffle
