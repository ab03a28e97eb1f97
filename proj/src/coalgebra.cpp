#include "tdshuffle/coalgebra.hpp"

#include <sstream>
#include <stdexcept>

namespace tdshuffle {

namespace {

void require_lambda(const TensorElement& a, const char* what) {
  if (a.space() != Space::Lambda) {
    throw std::invalid_argument(std::string(what) +
                                ": operand must lie in the length >= 1 word "
                                "space");
  }
}

// Same term-rendering rules as the element and square forms.
std::string sign_prefix(bool first, const Coefficient& coeff,
                        Coefficient* magnitude) {
  const bool negative =
      coeff.is_single_term() && coeff.terms().begin()->second < 0;
  *magnitude = negative ? -coeff : coeff;
  if (first) return negative ? "-" : "";
  return negative ? " - " : " + ";
}

std::string coeff_body_prefix(const Coefficient& magnitude) {
  if (magnitude.is_one()) return "";
  if (magnitude.is_single_positive_term()) return magnitude.str() + "*";
  return "(" + magnitude.str() + ")*";
}

}  // namespace

TensorSquareElement square_mul(const Context& ctx,
                               const TensorSquareElement& a,
                               const TensorSquareElement& b) {
  TensorSquareElement out(ctx.vars());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const Coefficient c = ca * cb;
      const TensorElement left = diamond_words(ctx, ka.first, kb.first);
      const TensorElement right = diamond_words(ctx, ka.second, kb.second);
      for (const auto& [wl, cl] : left.terms()) {
        for (const auto& [wr, cr] : right.terms()) {
          out.add_term(wl, wr, c * cl * cr);
        }
      }
    }
  }
  return out;
}

TensorSquareElement square_op(const Context& ctx,
                              const TensorSquareElement& a) {
  TensorSquareElement out(ctx.vars());
  const BaseMonomial unit_letter{BaseMonomial(ctx.vars())};
  for (const auto& [key, c] : a.terms()) {
    out.add_term(key.first, key.second.prepended(unit_letter), c);
  }
  return out;
}

TensorSquareElement square_unit(const Context& ctx) {
  TensorSquareElement out(ctx.vars());
  out.add_term(ctx.unit_word(), ctx.unit_word(), Coefficient(1));
  return out;
}

TensorSquareElement embed_base_square(const Context& ctx,
                                      const BaseTensorSquare& a) {
  TensorSquareElement out(ctx.vars());
  for (const auto& [key, c] : a.terms()) {
    out.add_term(TensorWord({key.first}), TensorWord({key.second}), c);
  }
  return out;
}

TensorSquareElement coproduct_word(const Context& ctx, const TensorWord& w) {
  if (w.is_empty()) {
    throw std::invalid_argument("coproduct of the empty word");
  }
  TensorSquareElement out(ctx.vars());
  if (ctx.lookup_coproduct(w, &out)) return out;

  const TensorSquareElement head =
      embed_base_square(ctx, ctx.base().coproduct_basis(w.head()));
  if (w.length() == 1) {
    out = head;
  } else {
    out = square_mul(ctx, head, square_op(ctx, coproduct_word(ctx, w.tail())));
  }
  ctx.store_coproduct(w, out);
  return out;
}

TensorSquareElement coproduct(const Context& ctx, const TensorElement& a) {
  require_lambda(a, "coproduct");
  TensorSquareElement out(ctx.vars());
  for (const auto& [w, c] : a.terms()) {
    out.add_scaled(coproduct_word(ctx, w), c);
  }
  return out;
}

Coefficient counit_word(const Context& ctx, const TensorWord& w) {
  if (w.is_empty()) {
    throw std::invalid_argument("counit of the empty word");
  }
  if (w.length() > 1) return Coefficient();
  return ctx.base().counit_basis(w.head());
}

Coefficient counit(const Context& ctx, const TensorElement& a) {
  require_lambda(a, "counit");
  Coefficient out;
  for (const auto& [w, c] : a.terms()) out += c * counit_word(ctx, w);
  return out;
}

TensorSquareElement reduced_coproduct(const Context& ctx,
                                      const TensorElement& a) {
  require_lambda(a, "reduced coproduct");
  const Coefficient eps = counit(ctx, a);
  if (!eps.is_zero()) {
    throw std::invalid_argument(
        "reduced coproduct requires a counit-kernel element; counit was " +
        eps.str());
  }
  TensorSquareElement out = coproduct(ctx, a);
  const TensorWord unit = ctx.unit_word();
  for (const auto& [w, c] : a.terms()) out.add_term(unit, w, -c);
  return out;
}

TensorElement counit_contract_left(const Context& ctx,
                                   const TensorSquareElement& a) {
  TensorElement out(Space::Lambda, ctx.vars());
  for (const auto& [key, c] : a.terms()) {
    out.add_term(key.second, c * counit_word(ctx, key.first));
  }
  return out;
}

TensorElement counit_contract_right(const Context& ctx,
                                    const TensorSquareElement& a) {
  TensorElement out(Space::Lambda, ctx.vars());
  for (const auto& [key, c] : a.terms()) {
    out.add_term(key.first, c * counit_word(ctx, key.second));
  }
  return out;
}

void TensorTripleElement::add_term(const TensorWord& first,
                                   const TensorWord& second,
                                   const TensorWord& third,
                                   const Coefficient& coeff) {
  if (first.is_empty() || second.is_empty() || third.is_empty()) {
    throw std::invalid_argument(
        "tensor triple components must have length >= 1");
  }
  if (coeff.is_zero()) return;
  std::array<TensorWord, 3> key{first, second, third};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

std::string TensorTripleElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    Coefficient magnitude;
    out << sign_prefix(first, c, &magnitude);
    first = false;
    out << coeff_body_prefix(magnitude) << key[0].str() << " (x) "
        << key[1].str() << " (x) " << key[2].str();
  }
  return out.str();
}

TensorTripleElement coproduct_on_left(const Context& ctx,
                                      const TensorSquareElement& a) {
  TensorTripleElement out(ctx.vars());
  for (const auto& [key, c] : a.terms()) {
    const TensorSquareElement expanded = coproduct_word(ctx, key.first);
    for (const auto& [inner, ci] : expanded.terms()) {
      out.add_term(inner.first, inner.second, key.second, c * ci);
    }
  }
  return out;
}

TensorTripleElement coproduct_on_right(const Context& ctx,
                                       const TensorSquareElement& a) {
  TensorTripleElement out(ctx.vars());
  for (const auto& [key, c] : a.terms()) {
    const TensorSquareElement expanded = coproduct_word(ctx, key.second);
    for (const auto& [inner, ci] : expanded.terms()) {
      out.add_term(key.first, inner.first, inner.second, c * ci);
    }
  }
  return out;
}

TensorTripleElement triple_op_last(const Context& ctx,
                                   const TensorTripleElement& a) {
  TensorTripleElement out(ctx.vars());
  const BaseMonomial unit_letter{BaseMonomial(ctx.vars())};
  for (const auto& [key, c] : a.terms()) {
    out.add_term(key[0], key[1], key[2].prepended(unit_letter), c);
  }
  return out;
}

void LinearMapTable::assign(const TensorWord& w, const TensorElement& value) {
  if (value.space() != Space::Lambda) {
    throw std::invalid_argument(
        "linear map values must lie in the length >= 1 word space");
  }
  table_.insert_or_assign(w, value);
}

TensorElement LinearMapTable::apply_word(const Context& ctx,
                                         const TensorWord& w) const {
  auto it = table_.find(w);
  if (it != table_.end()) return it->second;
  switch (fallback_) {
    case Fallback::None:
      throw std::invalid_argument("linear map has no value for word " +
                                  w.str() + " and no fallback rule");
    case Fallback::Zero:
      return ctx.zero(Space::Lambda);
    case Fallback::Identity:
      return TensorElement::from_word(Space::Lambda, ctx.vars(), w);
    case Fallback::CounitUnit:
      return ctx.unit_element(Space::Lambda).scaled(counit_word(ctx, w));
  }
  throw std::logic_error("unreachable fallback kind");
}

TensorElement LinearMapTable::apply(const Context& ctx,
                                    const TensorElement& a) const {
  require_lambda(a, "linear map");
  TensorElement out(Space::Lambda, ctx.vars());
  for (const auto& [w, c] : a.terms()) {
    out.add_scaled(apply_word(ctx, w), c);
  }
  return out;
}

TensorElement convolution(const Context& ctx, const LinearMapTable& f,
                          const LinearMapTable& g, const TensorElement& a) {
  require_lambda(a, "convolution");
  TensorElement out(Space::Lambda, ctx.vars());
  for (const auto& [w, c] : a.terms()) {
    const TensorSquareElement dw = coproduct_word(ctx, w);
    for (const auto& [key, ci] : dw.terms()) {
      out.add_scaled(diamond(ctx, f.apply_word(ctx, key.first),
                             g.apply_word(ctx, key.second)),
                     c * ci);
    }
  }
  return out;
}

}  // namespace tdshuffle
