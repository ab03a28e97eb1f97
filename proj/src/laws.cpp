#include "tdshuffle/laws.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "tdshuffle/hopf.hpp"
#include "tdshuffle/random_gen.hpp"

namespace tdshuffle {

namespace {

GenOptions gen_options(const SuiteOptions& opt) {
  return GenOptions{3, opt.max_length, opt.max_degree};
}

GenOptions capped(const SuiteOptions& opt, unsigned length_cap) {
  GenOptions g = gen_options(opt);
  g.max_length = std::min(g.max_length, length_cap);
  return g;
}

// Exhaustive enumerations stay desk-scale when the generator count grows.
unsigned exhaustive_bound(std::size_t vars) { return vars <= 2 ? 4u : 2u; }

void record_failure(LawOutcome& out, std::string text) {
  out.holds = false;
  if (out.counterexample.empty()) out.counterexample = std::move(text);
}

Coefficient random_poly(Rng& rng) {
  static const std::array<Rational, 8> values = [] {
    return std::array<Rational, 8>{
        Rational(1),          Rational(-1),          Rational(2),
        Rational(-2),         make_rational(1, 2),   make_rational(-1, 2),
        make_rational(3, 4),  make_rational(-3, 4)};
  }();
  Coefficient out;
  const unsigned terms = 1 + static_cast<unsigned>(rng.below(3));
  for (unsigned i = 0; i < terms; ++i) {
    out += Coefficient::monomial(static_cast<unsigned>(rng.below(4)),
                                 values[rng.below(values.size())]);
  }
  return out;
}

std::vector<std::pair<TensorElement, TensorElement>> random_pairs(
    Rng& rng, std::size_t vars, const GenOptions& g, Space space,
    unsigned count) {
  std::vector<std::pair<TensorElement, TensorElement>> out;
  out.reserve(count);
  for (unsigned i = 0; i < count; ++i) {
    out.emplace_back(random_element(rng, vars, g, space),
                     random_element(rng, vars, g, space));
  }
  return out;
}

// Prepends the unit letter at the Plus level (the right shift on the full
// word space; scalars collapse to the unit word).
TensorElement shift_plus(const Context& ctx, const TensorElement& a) {
  return graft(BaseElement::unit(ctx.vars()), a);
}

std::string law_counterexample_str(const LawCounterexample& cx) {
  return "x = " + cx.x.str() + "; y = " + cx.y.str() +
         "; lhs = " + cx.lhs.str() + "; rhs = " + cx.rhs.str() +
         "; difference = " + cx.difference.str();
}

// ---- coefficient ring ------------------------------------------------------

LawOutcome suite_coefficient_ring(const SuiteOptions& opt, const Context&,
                                  Rng& rng) {
  LawOutcome out;
  out.name = "coefficient-ring";
  const std::array<Rational, 5> points = {Rational(0), Rational(1),
                                          Rational(-1), Rational(2),
                                          make_rational(1, 2)};
  for (unsigned t = 0; t < opt.trials; ++t) {
    const Coefficient a = random_poly(rng);
    const Coefficient b = random_poly(rng);
    const Coefficient c = random_poly(rng);
    ++out.checked;
    if ((a + b) + c != a + (b + c) || a + b != b + a) {
      record_failure(out, "additive laws broke on a = " + a.str() +
                              ", b = " + b.str() + ", c = " + c.str());
      continue;
    }
    if ((a * b) * c != a * (b * c) || a * b != b * a) {
      record_failure(out, "multiplicative laws broke on a = " + a.str() +
                              ", b = " + b.str() + ", c = " + c.str());
      continue;
    }
    if (a * (b + c) != a * b + a * c) {
      record_failure(out, "distributivity broke on a = " + a.str() +
                              ", b = " + b.str() + ", c = " + c.str());
      continue;
    }
    if (a + Coefficient() != a || a * Coefficient(1) != a ||
        !(a - a).is_zero()) {
      record_failure(out, "unit/zero laws broke on a = " + a.str());
      continue;
    }
    const Rational& at = points[t % points.size()];
    if ((a * b + c).eval(at) != a.eval(at) * b.eval(at) + c.eval(at)) {
      record_failure(out, "evaluation at " + at.str() +
                              " is not a ring map on a = " + a.str() +
                              ", b = " + b.str() + ", c = " + c.str());
      continue;
    }
    const Coefficient s = random_poly(rng);
    if ((a * b).substitute(s) != a.substitute(s) * b.substitute(s) ||
        (a + b).substitute(s) != a.substitute(s) + b.substitute(s)) {
      record_failure(out, "substitution by " + s.str() +
                              " is not a ring map on a = " + a.str() +
                              ", b = " + b.str());
    }
  }
  return out;
}

// ---- base bialgebra --------------------------------------------------------

using BaseTriple = std::map<std::array<BaseMonomial, 3>, Coefficient>;

void base_triple_add(BaseTriple& t, const BaseMonomial& a,
                     const BaseMonomial& b, const BaseMonomial& c,
                     const Coefficient& coeff) {
  auto key = std::array<BaseMonomial, 3>{a, b, c};
  auto it = t.find(key);
  if (it == t.end()) {
    if (!coeff.is_zero()) t.emplace(std::move(key), coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) t.erase(it);
}

LawOutcome suite_base_bialgebra(const SuiteOptions& opt, const Context& ctx,
                                Rng& rng) {
  LawOutcome out;
  out.name = "base-bialgebra";
  const BaseOps& base = ctx.base();

  for (const auto& m : base.basis_up_to(6)) {
    const BaseTensorSquare dm = base.coproduct_basis(m);
    const unsigned dmdeg = base.degree_basis(m);
    ++out.checked;
    for (const auto& [key, c] : dm.terms()) {
      const unsigned du = base.degree_basis(key.first);
      const unsigned dv = base.degree_basis(key.second);
      if (du + dv > dmdeg || (du == 0 && dv > dmdeg)) {
        record_failure(out, "base coproduct of " + m.str() +
                                " violates the filtration shape at " +
                                key.first.str() + " (x) " + key.second.str());
      }
    }
    if (base.degree_basis(m) > 4) continue;
    // Coassociativity on monomials: expand both association orders to flat
    // triples.
    BaseTriple left, right;
    for (const auto& [key, c] : dm.terms()) {
      const BaseTensorSquare dl = base.coproduct_basis(key.first);
      for (const auto& [inner, ci] : dl.terms()) {
        base_triple_add(left, inner.first, inner.second, key.second, c * ci);
      }
      const BaseTensorSquare dr = base.coproduct_basis(key.second);
      for (const auto& [inner, ci] : dr.terms()) {
        base_triple_add(right, key.first, inner.first, inner.second, c * ci);
      }
    }
    if (left != right) {
      record_failure(out, "base coproduct is not coassociative on " + m.str());
    }
    // Two-sided counitality.
    BaseElement from_left(ctx.vars());
    BaseElement from_right(ctx.vars());
    for (const auto& [key, c] : dm.terms()) {
      from_left.add_term(key.second, c * base.counit_basis(key.first));
      from_right.add_term(key.first, c * base.counit_basis(key.second));
    }
    const BaseElement expected = BaseElement::from_monomial(m);
    if (from_left != expected || from_right != expected) {
      record_failure(out, "base counit is not two-sided on " + m.str());
    }
  }

  for (const auto& m1 : base.basis_up_to(3)) {
    for (const auto& m2 : base.basis_up_to(3)) {
      ++out.checked;
      const BaseElement product = base.mul_basis(m1, m2);
      for (const auto& [m, c] : product.terms()) {
        if (base.degree_basis(m) >
            base.degree_basis(m1) + base.degree_basis(m2)) {
          record_failure(out, "base degree is not subadditive on " +
                                  m1.str() + " * " + m2.str());
        }
      }
    }
  }

  const GenOptions g{3, 1, 4};
  for (unsigned t = 0; t < opt.trials; ++t) {
    const BaseElement a = random_base_element(rng, ctx.vars(), g);
    const BaseElement b = random_base_element(rng, ctx.vars(), g);
    const BaseElement c = random_base_element(rng, ctx.vars(), g);
    ++out.checked;
    if (base.mul(a, b) != base.mul(b, a) ||
        base.mul(base.mul(a, b), c) != base.mul(a, base.mul(b, c)) ||
        base.mul(a, BaseElement::unit(ctx.vars())) != a) {
      record_failure(out, "base product monoid laws broke on a = " + a.str() +
                              ", b = " + b.str() + ", c = " + c.str());
      continue;
    }
    if (base.counit(base.mul(a, b)) != base.counit(a) * base.counit(b)) {
      record_failure(out, "base counit is not multiplicative on a = " +
                              a.str() + ", b = " + b.str());
      continue;
    }
    if (base.coproduct(base.mul(a, b)) !=
        base.square_mul(base.coproduct(a), base.coproduct(b))) {
      record_failure(out, "base coproduct is not multiplicative on a = " +
                              a.str() + ", b = " + b.str());
    }
  }
  return out;
}

// ---- shuffle suites --------------------------------------------------------

LawOutcome suite_shuffle_unit(const SuiteOptions& opt, const Context& ctx,
                              Rng&) {
  LawOutcome out;
  out.name = "shuffle-unit";
  const TensorElement unit = ctx.unit_element(Space::Plus);
  for (const auto& w : basis_words_up_to(ctx, opt.max_degree)) {
    const TensorElement we =
        TensorElement::from_word(Space::Plus, ctx.vars(), w);
    TensorElement expected = shift_plus(ctx, we);
    expected.add_scaled(we, Coefficient::lambda());
    ++out.checked;
    if (shuffle(ctx, unit, we) != expected ||
        shuffle(ctx, we, unit) != expected) {
      record_failure(out, "unit-word shuffle law broke on " + w.str());
    }
  }
  // Scalar operand: c # [1] = c*[1].
  const Coefficient c = Coefficient::lambda() - Coefficient(1);
  const TensorElement scalar = TensorElement::scalar(ctx.vars(), c);
  ++out.checked;
  if (shuffle(ctx, scalar, unit) != unit.scaled(c) ||
      shuffle(ctx, unit, scalar) != unit.scaled(c)) {
    record_failure(out, "scalar shuffle against the unit word broke");
  }
  return out;
}

LawOutcome suite_shuffle_shift(const SuiteOptions& opt, const Context& ctx,
                               Rng& rng) {
  LawOutcome out;
  out.name = "shuffle-shift";
  const GenOptions g = gen_options(opt);
  for (unsigned t = 0; t < opt.trials; ++t) {
    // Both sides of the interchange law need scalar-free operands.
    const TensorElement a =
        random_element(rng, ctx.vars(), g, Space::Lambda).as_plus();
    const TensorElement b =
        random_element(rng, ctx.vars(), g, Space::Lambda).as_plus();
    const TensorElement any = random_element(rng, ctx.vars(), g, Space::Plus);
    ++out.checked;
    if (shuffle(ctx, shift_plus(ctx, a), b) !=
        shuffle(ctx, a, shift_plus(ctx, b))) {
      record_failure(out, "shift interchange broke on a = " + a.str() +
                              ", b = " + b.str());
      continue;
    }
    if (shuffle(ctx, shift_plus(ctx, a), any) !=
        shift_plus(ctx, shuffle(ctx, a, any))) {
      record_failure(out, "shift extraction broke on a = " + a.str() +
                              ", b = " + any.str());
    }
  }
  return out;
}

LawOutcome suite_shuffle_comm(const SuiteOptions& opt, const Context& ctx,
                              Rng& rng) {
  LawOutcome out;
  out.name = "shuffle-comm";
  const GenOptions g = gen_options(opt);
  for (unsigned t = 0; t < opt.trials; ++t) {
    const TensorElement a = random_element(rng, ctx.vars(), g, Space::Plus);
    const TensorElement b = random_element(rng, ctx.vars(), g, Space::Plus);
    ++out.checked;
    if (shuffle(ctx, a, b) != shuffle(ctx, b, a)) {
      record_failure(out, "commutativity broke on a = " + a.str() +
                              ", b = " + b.str());
    }
  }
  return out;
}

LawOutcome suite_shuffle_assoc(const SuiteOptions& opt, const Context& ctx,
                               Rng& rng) {
  LawOutcome out;
  out.name = "shuffle-assoc";
  const GenOptions g = gen_options(opt);
  for (unsigned t = 0; t < opt.trials; ++t) {
    const TensorElement a = random_element(rng, ctx.vars(), g, Space::Plus);
    const TensorElement b = random_element(rng, ctx.vars(), g, Space::Plus);
    const TensorElement c = random_element(rng, ctx.vars(), g, Space::Plus);
    ++out.checked;
    if (shuffle(ctx, shuffle(ctx, a, b), c) !=
        shuffle(ctx, a, shuffle(ctx, b, c))) {
      record_failure(out, "associativity broke on a = " + a.str() +
                              ", b = " + b.str() + ", c = " + c.str());
    }
  }
  return out;
}

LawOutcome suite_diamond_monoid(const SuiteOptions& opt, const Context& ctx,
                                Rng& rng) {
  LawOutcome out;
  out.name = "diamond-monoid";
  const GenOptions g = gen_options(opt);
  const TensorElement unit = ctx.unit_element(Space::Lambda);
  for (unsigned t = 0; t < opt.trials; ++t) {
    const TensorElement a = random_element(rng, ctx.vars(), g, Space::Lambda);
    const TensorElement b = random_element(rng, ctx.vars(), g, Space::Lambda);
    const TensorElement c = random_element(rng, ctx.vars(), g, Space::Lambda);
    ++out.checked;
    if (diamond(ctx, a, b) != diamond(ctx, b, a)) {
      record_failure(out, "commutativity broke on a = " + a.str() +
                              ", b = " + b.str());
      continue;
    }
    if (diamond(ctx, diamond(ctx, a, b), c) !=
        diamond(ctx, a, diamond(ctx, b, c))) {
      record_failure(out, "associativity broke on a = " + a.str() +
                              ", b = " + b.str() + ", c = " + c.str());
      continue;
    }
    if (diamond(ctx, a, unit) != a || diamond(ctx, unit, a) != a) {
      record_failure(out, "unit law broke on a = " + a.str());
    }
  }
  return out;
}

LawOutcome suite_lambda_td(const SuiteOptions& opt, const Context& ctx,
                           Rng& rng) {
  LawOutcome out;
  out.name = "lambda-td";
  const auto samples = random_pairs(rng, ctx.vars(), gen_options(opt),
                                    Space::Lambda, opt.trials);
  const LawCheckResult r = check_law(ctx, Operator::right_shift(),
                                     LawId::lambda_td(), samples);
  out.checked = r.checked;
  if (!r.holds) {
    record_failure(out, law_counterexample_str(*r.counterexample));
  }
  return out;
}

LawOutcome suite_star_assoc(const SuiteOptions& opt, const Context& ctx,
                            Rng& rng) {
  LawOutcome out;
  out.name = "star-assoc";
  const GenOptions g = capped(opt, 3);
  for (unsigned t = 0; t < opt.trials; ++t) {
    const TensorElement a = random_element(rng, ctx.vars(), g, Space::Lambda);
    const TensorElement b = random_element(rng, ctx.vars(), g, Space::Lambda);
    const TensorElement c = random_element(rng, ctx.vars(), g, Space::Lambda);
    ++out.checked;
    if (star_lambda(ctx, star_lambda(ctx, a, b), c) !=
        star_lambda(ctx, a, star_lambda(ctx, b, c))) {
      record_failure(out, "associativity broke on a = " + a.str() +
                              ", b = " + b.str() + ", c = " + c.str());
    }
  }
  return out;
}

LawOutcome suite_modified_td(const SuiteOptions& opt, const Context& ctx,
                             Rng& rng) {
  LawOutcome out;
  out.name = "modified-td";
  const auto samples =
      random_pairs(rng, ctx.vars(), capped(opt, 3), Space::Lambda, opt.trials);
  const LawCheckResult r =
      check_law(ctx, Operator::right_shift(), LawId::modified_td(), samples,
                Ambient::Star);
  out.checked = r.checked;
  if (!r.holds) {
    record_failure(out, law_counterexample_str(*r.counterexample));
  }
  return out;
}

LawOutcome suite_sign_duality(const SuiteOptions& opt, const Context& ctx,
                              Rng& rng) {
  LawOutcome out;
  out.name = "sign-duality";
  const std::array<Operator, 3> ops = {Operator::right_shift(),
                                       Operator::zero(),
                                       Operator::scale(Coefficient(1))};
  const auto samples =
      random_pairs(rng, ctx.vars(), capped(opt, 3), Space::Lambda, opt.trials);
  const LawId dual = LawId::lambda_td_weight(-Coefficient::lambda());
  for (const auto& op : ops) {
    const LawCheckResult direct =
        check_law(ctx, op, LawId::lambda_td(), samples);
    const LawCheckResult negated =
        check_law(ctx, op.negation(), dual, samples);
    out.checked += direct.checked + negated.checked;
    out.notes.push_back(op.name() + ": weight L verdict " +
                        (direct.holds ? "holds" : "fails") +
                        "; negated operator at weight -L verdict " +
                        (negated.holds ? "holds" : "fails"));
    if (direct.holds != negated.holds) {
      record_failure(out, "sign duality broke for operator " + op.name());
    }
  }
  return out;
}

LawOutcome suite_weight_specialization(const SuiteOptions& opt,
                                       const Context& ctx, Rng& rng) {
  LawOutcome out;
  out.name = "weight-specialization";
  const Coefficient lambda = Coefficient::lambda();
  const std::array<std::pair<Operator, LawId>, 3> rows = {
      std::make_pair(Operator::zero(), LawId::rota_baxter(lambda)),
      std::make_pair(Operator::scale(lambda), LawId::rota_baxter(Coefficient())),
      std::make_pair(Operator::scale(lambda + lambda),
                     LawId::rota_baxter(-lambda))};
  const auto samples =
      random_pairs(rng, ctx.vars(), capped(opt, 3), Space::Lambda, opt.trials);
  for (const auto& [op, rb] : rows) {
    const LawCheckResult as_td = check_law(ctx, op, LawId::lambda_td(), samples);
    const LawCheckResult as_rb = check_law(ctx, op, rb, samples);
    out.checked += as_td.checked + as_rb.checked;
    out.notes.push_back(op.name() + ": lambda-td verdict " +
                        (as_td.holds ? "holds" : "fails") + "; " + rb.name() +
                        " verdict " + (as_rb.holds ? "holds" : "fails"));
    if (as_td.holds != as_rb.holds) {
      record_failure(out,
                     "verdict equivalence broke for operator " + op.name());
    }
  }
  return out;
}

// ---- free extension --------------------------------------------------------

LawOutcome suite_free_extension(const SuiteOptions& opt, const Context& ctx,
                                Rng& rng) {
  LawOutcome out;
  out.name = "free-extension";
  const DiamondTarget self{&ctx};
  const std::vector<TensorElement> inclusion = generator_inclusion_images(ctx);
  for (const auto& w : basis_words_up_to(ctx, exhaustive_bound(ctx.vars()))) {
    const TensorElement we =
        TensorElement::from_word(Space::Lambda, ctx.vars(), w);
    ++out.checked;
    if (free_extension(self, inclusion, we) != we) {
      record_failure(out,
                     "identity extension moved " + w.str() + " elsewhere");
    }
  }

  const BaseZeroTarget to_base{&ctx.base()};
  const std::vector<BaseElement> base_images =
      base_generator_images(ctx.base());
  const GenOptions g = capped(opt, 3);
  GenOptions word_gen = capped(opt, 2);
  word_gen.max_degree = std::min(word_gen.max_degree, 4u);
  for (unsigned t = 0; t < opt.trials; ++t) {
    const TensorElement a = random_element(rng, ctx.vars(), g, Space::Lambda);
    ++out.checked;
    // Direct formula: the zero-operator extension keeps the head of
    // length-one words and kills everything longer.
    BaseElement expected(ctx.vars());
    for (const auto& [w, c] : a.terms()) {
      if (w.length() == 1) expected.add_term(w.letter(0), c);
    }
    if (free_extension(to_base, base_images, a) != expected) {
      record_failure(out, "zero-operator extension formula broke on " +
                              a.str());
      continue;
    }
    if (!free_extension(to_base, base_images, right_shift(ctx, a)).is_zero()) {
      record_failure(out, "zero-operator extension does not intertwine the "
                          "operators on " + a.str());
      continue;
    }
    // Multiplicativity for both shipped targets, against random generator
    // images in the word algebra.
    const TensorWord wa =
        random_word(rng, ctx.vars(), 1 + static_cast<unsigned>(rng.below(2)),
                    word_gen);
    const TensorWord wb =
        random_word(rng, ctx.vars(), 1 + static_cast<unsigned>(rng.below(2)),
                    word_gen);
    const TensorElement ea =
        TensorElement::from_word(Space::Lambda, ctx.vars(), wa);
    const TensorElement eb =
        TensorElement::from_word(Space::Lambda, ctx.vars(), wb);
    if (free_extension(to_base, base_images, diamond(ctx, ea, eb)) !=
        ctx.base().mul(free_extension(to_base, base_images, ea),
                       free_extension(to_base, base_images, eb))) {
      record_failure(out, "zero-operator extension is not multiplicative on " +
                              wa.str() + " <> " + wb.str());
      continue;
    }
    std::vector<TensorElement> images;
    images.reserve(ctx.vars());
    for (std::size_t i = 0; i < ctx.vars(); ++i) {
      images.push_back(TensorElement::from_word(
          Space::Lambda, ctx.vars(),
          random_word(rng, ctx.vars(),
                      1 + static_cast<unsigned>(rng.below(2)), word_gen)));
    }
    const TensorElement fa = free_extension(self, images, ea);
    const TensorElement fb = free_extension(self, images, eb);
    if (free_extension(self, images, diamond(ctx, ea, eb)) !=
        diamond(ctx, fa, fb)) {
      record_failure(out, "word-algebra extension is not multiplicative on " +
                              wa.str() + " <> " + wb.str());
      continue;
    }
    if (free_extension(self, images, right_shift(ctx, ea)) !=
        right_shift(ctx, fa)) {
      record_failure(out, "word-algebra extension does not intertwine the "
                          "right shift on " + wa.str());
    }
  }
  return out;
}

// ---- coalgebra suites ------------------------------------------------------

LawOutcome suite_coproduct_hom(const SuiteOptions& opt, const Context& ctx,
                               Rng& rng) {
  LawOutcome out;
  out.name = "coproduct-hom";
  const GenOptions g = capped(opt, 3);
  for (unsigned t = 0; t < opt.trials; ++t) {
    const TensorElement a = random_element(rng, ctx.vars(), g, Space::Lambda);
    const TensorElement b = random_element(rng, ctx.vars(), g, Space::Lambda);
    ++out.checked;
    if (coproduct(ctx, diamond(ctx, a, b)) !=
        square_mul(ctx, coproduct(ctx, a), coproduct(ctx, b))) {
      record_failure(out, "coproduct is not multiplicative on a = " +
                              a.str() + ", b = " + b.str());
    }
  }
  return out;
}

LawOutcome suite_coproduct_coassoc(const SuiteOptions& opt, const Context& ctx,
                                   Rng& rng) {
  LawOutcome out;
  out.name = "coproduct-coassoc";
  const GenOptions g = capped(opt, 3);
  for (unsigned t = 0; t < opt.trials; ++t) {
    const TensorElement a = random_element(rng, ctx.vars(), g, Space::Lambda);
    ++out.checked;
    const TensorSquareElement da = coproduct(ctx, a);
    if (coproduct_on_left(ctx, da) != coproduct_on_right(ctx, da)) {
      record_failure(out, "coassociativity broke on a = " + a.str());
    }
  }
  return out;
}

LawOutcome suite_counit_hom(const SuiteOptions& opt, const Context& ctx,
                            Rng& rng) {
  LawOutcome out;
  out.name = "counit-hom";
  const GenOptions g = gen_options(opt);
  for (unsigned t = 0; t < opt.trials; ++t) {
    const TensorElement a = random_element(rng, ctx.vars(), g, Space::Lambda);
    const TensorElement b = random_element(rng, ctx.vars(), g, Space::Lambda);
    ++out.checked;
    if (counit(ctx, diamond(ctx, a, b)) != counit(ctx, a) * counit(ctx, b)) {
      record_failure(out, "counit is not multiplicative on a = " + a.str() +
                              ", b = " + b.str());
    }
  }
  return out;
}

LawOutcome suite_left_counit(const SuiteOptions& opt, const Context& ctx,
                             Rng& rng) {
  LawOutcome out;
  out.name = "left-counit";
  const GenOptions g = capped(opt, 3);
  const LinearMapTable id_map = LinearMapTable::identity();
  const LinearMapTable eps_map = LinearMapTable::counit_unit();
  for (unsigned t = 0; t < opt.trials; ++t) {
    const TensorElement a = random_element(rng, ctx.vars(), g, Space::Lambda);
    ++out.checked;
    if (counit_contract_left(ctx, coproduct(ctx, a)) != a) {
      record_failure(out, "left counitality broke on a = " + a.str());
      continue;
    }
    if (convolution(ctx, eps_map, id_map, a) != a) {
      record_failure(out, "unit-counit map is not a left convolution "
                          "identity on a = " + a.str());
    }
  }
  return out;
}

LawOutcome suite_right_counit_fails(const SuiteOptions&, const Context& ctx,
                                    Rng&) {
  LawOutcome out;
  out.name = "right-counit-fails";
  for (std::size_t i = 0; i < ctx.vars(); ++i) {
    const TensorElement px = right_shift(
        ctx, TensorElement::from_word(
                 Space::Lambda, ctx.vars(),
                 TensorWord({BaseMonomial::generator(ctx.vars(), i)})));
    const TensorElement contracted =
        counit_contract_right(ctx, coproduct(ctx, px));
    ++out.checked;
    if (!contracted.is_zero() || px.is_zero()) {
      record_failure(out, "expected the right-counit contraction of " +
                              px.str() + " to be 0 while the element is "
                              "nonzero; got " + contracted.str());
      continue;
    }
    out.notes.push_back("witness: (id (x) counit) Delta(" + px.str() +
                        ") = 0, but the right counit identity would need " +
                        px.str());
  }
  return out;
}

LawOutcome suite_square_td(const SuiteOptions& opt, const Context& ctx,
                           Rng& rng) {
  LawOutcome out;
  out.name = "square-td";
  const GenOptions g = capped(opt, 2);
  const TensorSquareElement shifted_unit = square_op(ctx, square_unit(ctx));
  const Coefficient lambda = Coefficient::lambda();
  for (unsigned t = 0; t < opt.trials; ++t) {
    const TensorSquareElement x = random_square(rng, ctx.vars(), g);
    const TensorSquareElement y = random_square(rng, ctx.vars(), g);
    ++out.checked;
    const TensorSquareElement px = square_op(ctx, x);
    const TensorSquareElement py = square_op(ctx, y);
    const TensorSquareElement lhs = square_mul(ctx, px, py);
    TensorSquareElement inner = square_mul(ctx, x, py);
    inner += square_mul(ctx, px, y);
    inner.add_scaled(square_mul(ctx, x, y), lambda);
    inner -= square_mul(ctx, square_mul(ctx, x, shifted_unit), y);
    if (lhs != square_op(ctx, inner)) {
      record_failure(out, "tensor-square operator law broke on x = " +
                              x.str() + ", y = " + y.str());
    }
  }
  return out;
}

LawOutcome suite_cocycle(const SuiteOptions& opt, const Context& ctx,
                         Rng& rng) {
  LawOutcome out;
  out.name = "cocycle";
  const GenOptions g = capped(opt, 3);
  const GenOptions gs = capped(opt, 2);
  for (unsigned t = 0; t < opt.trials; ++t) {
    const TensorElement a = random_element(rng, ctx.vars(), g, Space::Lambda);
    ++out.checked;
    if (coproduct(ctx, right_shift(ctx, a)) !=
        square_op(ctx, coproduct(ctx, a))) {
      record_failure(out, "cocycle rule broke on a = " + a.str());
      continue;
    }
    if (!counit(ctx, right_shift(ctx, a)).is_zero()) {
      record_failure(out, "counit does not kill shifted elements on a = " +
                              a.str());
      continue;
    }
    const TensorSquareElement x = random_square(rng, ctx.vars(), gs);
    if (coproduct_on_right(ctx, square_op(ctx, x)) !=
        triple_op_last(ctx, coproduct_on_right(ctx, x))) {
      record_failure(out, "cocycle interchange broke on x = " + x.str());
    }
  }
  return out;
}

// ---- filtration and antipode ----------------------------------------------

LawOutcome suite_filtration(const SuiteOptions& opt, const Context& ctx,
                            Rng& rng) {
  LawOutcome out;
  out.name = "filtration";
  ++out.checked;
  if (word_degree(ctx, TensorWord::unit(ctx.vars()).prepended(
                           BaseMonomial(ctx.vars()))) != 1) {
    record_failure(out, "the shifted unit word must have degree 1");
  }

  const std::vector<TensorWord> words =
      basis_words_up_to(ctx, exhaustive_bound(ctx.vars()));
  for (const auto& u : words) {
    const unsigned du = word_degree(ctx, u);
    for (const auto& v : words) {
      const unsigned bound = du + word_degree(ctx, v);
      ++out.checked;
      const TensorElement product = diamond_words(ctx, u, v);
      for (const auto& [t, c] : product.terms()) {
        if (word_degree(ctx, t) > bound) {
          record_failure(out, u.str() + " <> " + v.str() +
                                  " escapes the filtration at " + t.str());
          break;
        }
      }
    }
  }
  for (const auto& w : words) {
    const unsigned dw = word_degree(ctx, w);
    ++out.checked;
    const TensorSquareElement dw_pairs = coproduct_word(ctx, w);
    for (const auto& [pair, c] : dw_pairs.terms()) {
      const unsigned du = word_degree(ctx, pair.first);
      const unsigned dv = word_degree(ctx, pair.second);
      if (du + dv > dw || (du == 0 && dv > dw)) {
        record_failure(out, "coproduct shape broke at Delta(" + w.str() +
                                ") term " + pair.first.str() + " (x) " +
                                pair.second.str());
        break;
      }
    }
  }

  const GenOptions g = gen_options(opt);
  for (unsigned t = 0; t < opt.trials; ++t) {
    const TensorWord u =
        random_word(rng, ctx.vars(),
                    1 + static_cast<unsigned>(rng.below(opt.max_length)), g);
    const TensorWord v =
        random_word(rng, ctx.vars(),
                    1 + static_cast<unsigned>(rng.below(opt.max_length)), g);
    const unsigned bound = word_degree(ctx, u) + word_degree(ctx, v);
    ++out.checked;
    const TensorElement product = diamond_words(ctx, u, v);
    for (const auto& [w, c] : product.terms()) {
      if (word_degree(ctx, w) > bound) {
        record_failure(out, u.str() + " <> " + v.str() +
                                " escapes the filtration at " + w.str());
        break;
      }
    }
    const TensorElement a = random_element(rng, ctx.vars(), g, Space::Lambda);
    const auto [scalar, kernel] = counit_split(ctx, a);
    TensorElement recombined = kernel;
    recombined.add_term(ctx.unit_word(), scalar);
    if (recombined != a || !counit(ctx, kernel).is_zero()) {
      record_failure(out, "counit split broke on a = " + a.str());
      break;
    }
  }
  return out;
}

LawOutcome suite_antipode(const SuiteOptions& opt, const Context& ctx,
                          Rng& rng) {
  LawOutcome out;
  out.name = "antipode";
  const HopfReport report = hopf_check(ctx, exhaustive_bound(ctx.vars()));
  for (const auto& law : report.laws) {
    out.checked += law.checked;
    if (law.asserted && !law.holds) {
      record_failure(out, law.law + ": " + law.first_counterexample);
    }
    if (!law.asserted) {
      out.notes.push_back(
          law.law + ": matched the unit-counit map on " +
          std::to_string(law.checked - law.failures) + " of " +
          std::to_string(law.checked) +
          " words (one-sidedness: no assertion either way)");
    }
  }

  const TensorElement unit = ctx.unit_element(Space::Lambda);
  ++out.checked;
  if (antipode(ctx, unit) != unit) {
    record_failure(out, "the antipode must fix the unit word");
  }
  for (std::size_t i = 0; i < ctx.vars(); ++i) {
    const TensorElement x = TensorElement::from_word(
        Space::Lambda, ctx.vars(),
        TensorWord({BaseMonomial::generator(ctx.vars(), i)}));
    ++out.checked;
    if (antipode(ctx, x) != -x) {
      record_failure(out, "the antipode must negate the primitive " + x.str());
    }
  }
  const GenOptions g = capped(opt, 3);
  for (unsigned t = 0; t < opt.trials; ++t) {
    const TensorElement a = random_element(rng, ctx.vars(), g, Space::Lambda);
    const TensorElement b = random_element(rng, ctx.vars(), g, Space::Lambda);
    const Coefficient c = random_coefficient(rng);
    ++out.checked;
    TensorElement combined = a;
    combined.add_scaled(b, c);
    TensorElement expected = antipode(ctx, a);
    expected.add_scaled(antipode(ctx, b), c);
    if (antipode(ctx, combined) != expected) {
      record_failure(out, "antipode linearity broke on a = " + a.str() +
                              ", b = " + b.str() + ", c = " + c.str());
    }
  }
  return out;
}

using SuiteFn = LawOutcome (*)(const SuiteOptions&, const Context&, Rng&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

// Order is the report order; the index is each suite's seed salt, so adding
// suites at the end never reshuffles existing streams.
constexpr SuiteEntry kSuites[] = {
    {"coefficient-ring", suite_coefficient_ring},
    {"base-bialgebra", suite_base_bialgebra},
    {"shuffle-unit", suite_shuffle_unit},
    {"shuffle-shift", suite_shuffle_shift},
    {"shuffle-comm", suite_shuffle_comm},
    {"shuffle-assoc", suite_shuffle_assoc},
    {"diamond-monoid", suite_diamond_monoid},
    {"lambda-td", suite_lambda_td},
    {"star-assoc", suite_star_assoc},
    {"modified-td", suite_modified_td},
    {"sign-duality", suite_sign_duality},
    {"weight-specialization", suite_weight_specialization},
    {"free-extension", suite_free_extension},
    {"coproduct-hom", suite_coproduct_hom},
    {"coproduct-coassoc", suite_coproduct_coassoc},
    {"counit-hom", suite_counit_hom},
    {"left-counit", suite_left_counit},
    {"right-counit-fails", suite_right_counit_fails},
    {"square-td", suite_square_td},
    {"cocycle", suite_cocycle},
    {"filtration", suite_filtration},
    {"antipode", suite_antipode},
};

}  // namespace

bool SuiteResult::ok() const {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const LawOutcome& o) { return o.holds; });
}

std::string SuiteResult::str() const {
  std::ostringstream out;
  out << "law report\n";
  out << "suite: " << options.suite << "\n";
  out << "seed: " << options.seed << "\n";
  out << "trials: " << options.trials << "\n";
  out << "max-degree: " << options.max_degree << "\n";
  out << "max-length: " << options.max_length << "\n";
  out << "vars: " << options.vars << "\n";
  out << "\n";
  std::size_t violations = 0;
  for (const auto& o : outcomes) {
    if (!o.holds) ++violations;
    out << (o.holds ? "PASS" : "FAIL") << " " << o.name << ": " << o.checked
        << " checked\n";
    for (const auto& note : o.notes) {
      out << "     " << note << "\n";
    }
    if (!o.counterexample.empty()) {
      out << "     counterexample: " << o.counterexample << "\n";
    }
  }
  out << "\n";
  out << "result: " << (ok() ? "PASS" : "FAIL") << " (" << outcomes.size()
      << " suites, " << violations << " violations)\n";
  return out.str();
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& entry : kSuites) names.emplace_back(entry.name);
  return names;
}

SuiteResult run_laws(const SuiteOptions& options) {
  SuiteResult result;
  result.options = options;
  const Context ctx = Context::polynomial(options.vars);
  bool matched = false;
  for (std::size_t i = 0; i < std::size(kSuites); ++i) {
    if (options.suite != "all" && options.suite != kSuites[i].name) continue;
    matched = true;
    Rng rng(Rng::mix(options.seed, i + 1));
    result.outcomes.push_back(kSuites[i].fn(options, ctx, rng));
  }
  if (!matched) {
    throw std::invalid_argument("unknown suite '" + options.suite + "'");
  }
  return result;
}

}  // namespace tdshuffle
