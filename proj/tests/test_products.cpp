#include "tdshuffle/products.hpp"

#include "doctest.h"
#include "tdshuffle/random_gen.hpp"

namespace {

using namespace tdshuffle;

const Coefficient kL = Coefficient::lambda();

TensorWord gen_word(std::size_t vars, std::initializer_list<std::size_t> gens) {
  std::vector<BaseMonomial> letters;
  for (std::size_t g : gens) letters.push_back(BaseMonomial::generator(vars, g));
  return TensorWord(std::move(letters));
}

TensorElement plus_word(std::size_t vars, const TensorWord& w) {
  return TensorElement::from_word(Space::Plus, vars, w);
}

TensorElement lambda_word(std::size_t vars, const TensorWord& w) {
  return TensorElement::from_word(Space::Lambda, vars, w);
}

// Unmemoized re-derivation of the shuffle recursion, kept deliberately
// simple; the library version must agree term by term.
TensorElement naive_shuffle_words(const Context& ctx, const TensorWord& a,
                                  const TensorWord& b);

TensorElement naive_shuffle(const Context& ctx, const TensorElement& a,
                            const TensorElement& b) {
  TensorElement out(Space::Plus, ctx.vars());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      out.add_scaled(naive_shuffle_words(ctx, wa, wb), ca * cb);
    }
  }
  return out;
}

TensorElement naive_shuffle_words(const Context& ctx, const TensorWord& a,
                                  const TensorWord& b) {
  const std::size_t vars = ctx.vars();
  if (a.is_empty()) return TensorElement::from_word(Space::Plus, vars, b);
  if (b.is_empty()) return TensorElement::from_word(Space::Plus, vars, a);
  const BaseElement ah = BaseElement::from_monomial(a.head());
  const BaseElement bh = BaseElement::from_monomial(b.head());
  TensorElement out = graft(ah, naive_shuffle_words(ctx, a.tail(), b));
  out += graft(bh, naive_shuffle_words(ctx, a, b.tail()));
  const BaseElement fused = ctx.base().mul_basis(a.head(), b.head());
  out.add_scaled(graft(fused, naive_shuffle_words(ctx, a.tail(), b.tail())),
                 kL);
  out -= graft(fused, naive_shuffle(
                          ctx, naive_shuffle_words(ctx, a.tail(), ctx.unit_word()),
                          TensorElement::from_word(Space::Plus, vars, b.tail())));
  return out;
}

TensorElement naive_diamond_words(const Context& ctx, const TensorWord& a,
                                  const TensorWord& b) {
  const BaseElement fused = ctx.base().mul_basis(a.head(), b.head());
  return graft(fused, naive_shuffle_words(ctx, a.tail(), b.tail())).as_lambda();
}

TEST_CASE("shuffling a generator into a two-letter word expands to six terms") {
  const Context ctx = Context::polynomial(3);
  const TensorElement result = shuffle(ctx, plus_word(3, gen_word(3, {0})),
                                       plus_word(3, gen_word(3, {1, 2})));
  CHECK(result.str() ==
        "L*[x2, x1*x3] + [x1, x2, x3] + [x2, x1, x3] + [x2, x3, x1] - "
        "[x2, x1*x3, 1] - [x1*x2, 1, x3]");
}

TEST_CASE("shuffling the unit word with itself picks up the weight term") {
  const Context ctx = Context::polynomial(2);
  const TensorElement u = ctx.unit_element(Space::Plus);
  TensorElement expected(Space::Plus, 2);
  expected.add_term(TensorWord::unit(2), kL);
  expected.add_term(TensorWord({BaseMonomial(2), BaseMonomial(2)}),
                    Coefficient(1));
  CHECK(shuffle(ctx, u, u) == expected);
  CHECK(shuffle(ctx, u, u).str() == "L*[1] + [1, 1]");
}

TEST_CASE("the empty word is the shuffle unit") {
  const Context ctx = Context::polynomial(2);
  const TensorElement c = TensorElement::scalar(2, kL + Coefficient(2));
  const TensorElement w = plus_word(2, gen_word(2, {0, 1}));
  CHECK(shuffle(ctx, c, w) == w.scaled(kL + Coefficient(2)));
  CHECK(shuffle(ctx, w, c) == w.scaled(kL + Coefficient(2)));
  CHECK(shuffle(ctx, c, c) ==
        TensorElement::scalar(2, (kL + Coefficient(2)) * (kL + Coefficient(2))));
}

TEST_CASE("shuffle agrees with an unmemoized re-derivation on random words") {
  const Context ctx = Context::polynomial(4);
  Rng rng(2026);
  GenOptions opt;
  opt.max_degree = 3;
  for (int i = 0; i < 25; ++i) {
    const TensorWord a =
        random_word(rng, 4, static_cast<unsigned>(rng.below(4)), opt);
    const TensorWord b =
        random_word(rng, 4, static_cast<unsigned>(rng.below(4)), opt);
    CAPTURE(a.str());
    CAPTURE(b.str());
    CHECK(shuffle_words(ctx, a, b) == naive_shuffle_words(ctx, a, b));
  }
}

TEST_CASE("diamond multiplies heads in the base and shuffles tails") {
  const Context ctx = Context::polynomial(4);
  Rng rng(77);
  GenOptions opt;
  opt.max_degree = 3;
  for (int i = 0; i < 25; ++i) {
    const TensorWord a =
        random_word(rng, 4, 1 + static_cast<unsigned>(rng.below(3)), opt);
    const TensorWord b =
        random_word(rng, 4, 1 + static_cast<unsigned>(rng.below(3)), opt);
    CAPTURE(a.str());
    CAPTURE(b.str());
    CHECK(diamond_words(ctx, a, b) == naive_diamond_words(ctx, a, b));
  }
}

TEST_CASE("diamond rejects empty words and wrong space tags") {
  const Context ctx = Context::polynomial(2);
  CHECK_THROWS_AS(
      (void)diamond_words(ctx, TensorWord::empty(), TensorWord::unit(2)),
      std::invalid_argument);
  const TensorElement plus_tagged = plus_word(2, gen_word(2, {0}));
  CHECK_THROWS_AS((void)diamond(ctx, plus_tagged, plus_tagged),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)right_shift(ctx, plus_tagged), std::invalid_argument);
  CHECK_THROWS_AS(
      (void)shuffle(ctx, plus_tagged.as_lambda(), plus_tagged.as_lambda()),
      std::invalid_argument);
}

TEST_CASE("the right shift prepends the unit letter to every word") {
  const Context ctx = Context::polynomial(2);
  TensorElement e = lambda_word(2, gen_word(2, {0}));
  e.add_term(gen_word(2, {1, 0}), kL);
  TensorElement expected(Space::Lambda, 2);
  expected.add_term(TensorWord({BaseMonomial(2), BaseMonomial::generator(2, 0)}),
                    Coefficient(1));
  expected.add_term(TensorWord({BaseMonomial(2), BaseMonomial::generator(2, 1),
                                BaseMonomial::generator(2, 0)}),
                    kL);
  CHECK(right_shift(ctx, e) == expected);
}

TEST_CASE("the double product of unit words matches the unit-word shuffle") {
  const Context ctx = Context::polynomial(2);
  const TensorElement u = ctx.unit_element(Space::Lambda);
  TensorElement expected(Space::Lambda, 2);
  expected.add_term(TensorWord::unit(2), kL);
  expected.add_term(TensorWord({BaseMonomial(2), BaseMonomial(2)}),
                    Coefficient(1));
  CHECK(star_lambda(ctx, u, u) == expected);
}

TEST_CASE("the double product of two generators equals their shuffle") {
  const Context ctx = Context::polynomial(2);
  const TensorElement x = lambda_word(2, gen_word(2, {0}));
  const TensorElement y = lambda_word(2, gen_word(2, {1}));
  CHECK(star_lambda(ctx, x, y).as_plus() ==
        shuffle(ctx, x.as_plus(), y.as_plus()));
}

TEST_CASE("the right shift satisfies the weight-L identity on random pairs") {
  const Context ctx = Context::polynomial(2);
  Rng rng(11);
  GenOptions opt;
  opt.max_length = 3;
  std::vector<std::pair<TensorElement, TensorElement>> samples;
  for (int i = 0; i < 20; ++i) {
    samples.emplace_back(random_element(rng, 2, opt, Space::Lambda),
                         random_element(rng, 2, opt, Space::Lambda));
  }
  const LawCheckResult result =
      check_law(ctx, Operator::right_shift(), LawId::lambda_td(), samples);
  CHECK(result.holds);
  CHECK(result.checked == samples.size());
  CHECK_FALSE(result.counterexample.has_value());

  // Dropping the weight term breaks the identity for the same operator.
  const LawCheckResult td = check_law(ctx, Operator::right_shift(),
                                      LawId::td(), samples);
  CHECK_FALSE(td.holds);
  REQUIRE(td.counterexample.has_value());
  CHECK_FALSE(td.counterexample->difference.is_zero());
}

TEST_CASE("the zero operator satisfies every weight of the averaging identity") {
  const Context ctx = Context::polynomial(2);
  Rng rng(12);
  GenOptions opt;
  opt.max_length = 3;
  std::vector<std::pair<TensorElement, TensorElement>> samples;
  for (int i = 0; i < 10; ++i) {
    samples.emplace_back(random_element(rng, 2, opt, Space::Lambda),
                         random_element(rng, 2, opt, Space::Lambda));
  }
  CHECK(check_law(ctx, Operator::zero(), LawId::rota_baxter(kL), samples).holds);
  CHECK(check_law(ctx, Operator::zero(), LawId::lambda_td(), samples).holds);
}

TEST_CASE("the identity operator fails the weight-L law with a weight-sized gap") {
  const Context ctx = Context::polynomial(2);
  const TensorElement x = lambda_word(2, gen_word(2, {0}));
  const TensorElement y = lambda_word(2, gen_word(2, {1}));
  const LawCheckResult result = check_law(
      ctx, Operator::scale(Coefficient(1)), LawId::lambda_td(), {{x, y}});
  CHECK_FALSE(result.holds);
  REQUIRE(result.counterexample.has_value());
  const TensorElement expected_gap = TensorElement::from_word(
      Space::Lambda, 2,
      TensorWord({BaseMonomial::generator(2, 0) * BaseMonomial::generator(2, 1)}),
      -kL);
  CHECK(result.counterexample->difference == expected_gap);
}

TEST_CASE("extending the generator inclusion recovers the identity map") {
  const Context ctx = Context::polynomial(2);
  const DiamondTarget target{&ctx};
  const std::vector<TensorElement> images = generator_inclusion_images(ctx);
  Rng rng(13);
  GenOptions opt;
  opt.max_length = 3;
  opt.max_degree = 4;
  for (int i = 0; i < 15; ++i) {
    const TensorElement a = random_element(rng, 2, opt, Space::Lambda);
    CAPTURE(a.str());
    CHECK(free_extension(target, images, a) == a);
  }
}

TEST_CASE("extension into the base with the zero operator keeps only heads") {
  const Context ctx = Context::polynomial(2);
  const BaseZeroTarget target{&ctx.base()};
  const std::vector<BaseElement> images = base_generator_images(ctx.base());

  const BaseMonomial m =
      BaseMonomial::generator(2, 0) * BaseMonomial::generator(2, 0);
  CHECK(free_extension(target, images, lambda_word(2, TensorWord({m}))) ==
        BaseElement::from_monomial(m));
  CHECK(free_extension(target, images, lambda_word(2, gen_word(2, {0, 1})))
            .is_zero());

  // The extension is multiplicative and kills shifted elements.
  Rng rng(14);
  GenOptions opt;
  opt.max_length = 3;
  for (int i = 0; i < 15; ++i) {
    const TensorElement a = random_element(rng, 2, opt, Space::Lambda);
    const TensorElement b = random_element(rng, 2, opt, Space::Lambda);
    const BaseElement ea = free_extension(target, images, a);
    const BaseElement eb = free_extension(target, images, b);
    CHECK(free_extension(target, images, diamond(ctx, a, b)) ==
          ctx.base().mul(ea, eb));
    CHECK(free_extension(target, images, right_shift(ctx, a)).is_zero());
  }
}

TEST_CASE("repeated shuffles reuse the memo cache consistently") {
  const Context ctx = Context::polynomial(2);
  const TensorWord a = gen_word(2, {0, 1});
  const TensorWord b = gen_word(2, {1, 0});
  const TensorElement first = shuffle_words(ctx, a, b);
  const TensorElement second = shuffle_words(ctx, a, b);
  CHECK(first == second);
  CHECK(shuffle_words(ctx, b, a) == first);
}

}  // namespace
