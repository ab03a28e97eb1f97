#include "tdshuffle/hopf.hpp"

#include "doctest.h"

namespace {

using namespace tdshuffle;

TensorWord word(std::vector<std::vector<unsigned>> letters) {
  std::vector<BaseMonomial> out;
  out.reserve(letters.size());
  for (auto& exponents : letters) {
    out.push_back(BaseMonomial::from_exponents(std::move(exponents)));
  }
  return TensorWord(std::move(out));
}

TensorElement lam(const Context& ctx, const TensorWord& w) {
  return TensorElement::from_word(Space::Lambda, ctx.vars(), w);
}

TEST_CASE("word degree adds letter degrees and length minus one") {
  const Context ctx = Context::polynomial(2);
  CHECK(word_degree(ctx, TensorWord::unit(2)) == 0);
  CHECK(word_degree(ctx, word({{0, 0}, {0, 0}})) == 1);
  CHECK(word_degree(ctx, word({{1, 0}})) == 1);
  CHECK(word_degree(ctx, word({{1, 0}, {2, 0}})) == 4);
  CHECK_THROWS_AS((void)word_degree(ctx, TensorWord::empty()),
                  std::invalid_argument);
}

TEST_CASE("element degree is the largest word degree present") {
  const Context ctx = Context::polynomial(2);
  TensorElement e(Space::Lambda, 2);
  CHECK(element_degree(ctx, e) == 0);
  e.add_term(word({{1, 0}}), Coefficient(1));
  e.add_term(word({{1, 0}, {2, 0}}), Coefficient::lambda());
  CHECK(element_degree(ctx, e) == 4);
}

TEST_CASE("basis word enumeration is complete and canonically ordered") {
  const Context ctx = Context::polynomial(2);
  const std::vector<TensorWord> words = basis_words_up_to(ctx, 2);
  CHECK(words.size() == 12);
  CHECK(words.front() == TensorWord::unit(2));
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    CHECK(words[i] < words[i + 1]);
  }
  for (const TensorWord& w : words) {
    CHECK(word_degree(ctx, w) <= 2);
  }
}

TEST_CASE("the counit split separates the unit line from the kernel") {
  const Context ctx = Context::polynomial(2);
  TensorElement e(Space::Lambda, 2);
  e.add_term(TensorWord::unit(2), Coefficient(3));
  e.add_term(word({{1, 0}}), Coefficient(1));
  const auto [c, kernel] = counit_split(ctx, e);
  CHECK(c == Coefficient(3));
  CHECK(kernel == lam(ctx, word({{1, 0}})));
  CHECK(counit(ctx, kernel).is_zero());
}

TEST_CASE("antipode values on low-degree words") {
  const Context ctx = Context::polynomial(2);
  CHECK(antipode(ctx, ctx.unit_element(Space::Lambda)) ==
        ctx.unit_element(Space::Lambda));
  CHECK(antipode_word(ctx, word({{1, 0}})) ==
        lam(ctx, word({{1, 0}})).scaled(Coefficient(-1)));
  CHECK(antipode_word(ctx, word({{0, 0}, {0, 0}})).is_zero());
  CHECK(antipode_word(ctx, word({{1, 0}, {0, 0}})).is_zero());
  CHECK(antipode_word(ctx, word({{0, 0}, {0, 1}})).is_zero());
  CHECK(antipode_word(ctx, word({{1, 0}, {0, 1}})).is_zero());
  CHECK(antipode_word(ctx, word({{2, 0}})) == lam(ctx, word({{2, 0}})));
}

TEST_CASE("the antipode is linear over the coefficient ring") {
  const Context ctx = Context::polynomial(2);
  const TensorElement a = lam(ctx, word({{1, 0}}));
  const TensorElement b = lam(ctx, word({{0, 1}, {0, 0}}));
  const Coefficient c = Coefficient::lambda() - Coefficient(2);
  CHECK(antipode(ctx, a.scaled(c) + b) ==
        antipode(ctx, a).scaled(c) + antipode(ctx, b));
}

TEST_CASE("the exhaustive check passes on one generator up to degree three") {
  const Context ctx = Context::polynomial(1);
  const HopfReport report = hopf_check(ctx, 3);
  CHECK(report.all_hold());
  CHECK(report.words_enumerated == 15);
  CHECK(report.degree_bound == 3);
  CHECK(report.vars == 1);
  CHECK(report.str().find("result: PASS") != std::string::npos);
  for (const HopfLawResult& law : report.laws) {
    if (!law.asserted) continue;
    CHECK(law.holds);
    CHECK(law.failures == 0);
  }
}

TEST_CASE("degree bound zero checks only the unit word") {
  const Context ctx = Context::polynomial(2);
  const HopfReport report = hopf_check(ctx, 0);
  CHECK(report.all_hold());
  CHECK(report.words_enumerated == 1);
}

TEST_CASE("the reverse convolution row is informational, not asserted") {
  const Context ctx = Context::polynomial(2);
  const HopfReport report = hopf_check(ctx, 2);
  bool found = false;
  for (const HopfLawResult& law : report.laws) {
    if (law.asserted) continue;
    found = true;
    // One-sidedness: the reverse convolution really does differ from e,
    // and that must not flip the overall verdict.
    CHECK(law.failures > 0);
    CHECK(law.first_counterexample.find("[1, 1]") != std::string::npos);
  }
  CHECK(found);
  CHECK(report.all_hold());
}

TEST_CASE("a corrupted antipode table is reported with its witness word") {
  const Context ctx = Context::polynomial(2);
  LinearMapTable corrupted = antipode_table(ctx, 2);
  corrupted.assign(word({{1, 0}}), lam(ctx, word({{1, 0}})));
  const HopfReport report = hopf_check(ctx, 2, &corrupted);
  CHECK_FALSE(report.all_hold());
  CHECK(report.str().find("FAIL") != std::string::npos);
  bool saw_antipode_row = false;
  for (const HopfLawResult& law : report.laws) {
    if (law.law.find("(id * S)") == std::string::npos) continue;
    saw_antipode_row = true;
    CHECK_FALSE(law.holds);
    CHECK(law.failures > 0);
    CHECK(law.first_counterexample.find("[x1]") != std::string::npos);
  }
  CHECK(saw_antipode_row);
}

}  // namespace
