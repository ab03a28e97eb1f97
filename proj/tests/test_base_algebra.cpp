#include "tdshuffle/base_algebra.hpp"

#include "doctest.h"

#include "tdshuffle/random_gen.hpp"

namespace {

using namespace tdshuffle;

BaseMonomial mono(std::vector<unsigned> exponents) {
  return BaseMonomial::from_exponents(std::move(exponents));
}

TEST_CASE("monomials multiply by adding exponents") {
  const BaseMonomial x = BaseMonomial::generator(2, 0);
  const BaseMonomial y = BaseMonomial::generator(2, 1);
  CHECK(x * y == mono({1, 1}));
  CHECK((x * x) * y == mono({2, 1}));
  CHECK(x * BaseMonomial(2) == x);
  CHECK(mono({2, 1}).degree() == 3);
  CHECK(BaseMonomial(2).is_unit());
  CHECK_THROWS_AS((void)BaseMonomial::generator(2, 2), std::invalid_argument);
}

TEST_CASE("monomial text names generators with one-based indices") {
  CHECK(BaseMonomial(3).str() == "1");
  CHECK(BaseMonomial::generator(3, 0).str() == "x1");
  CHECK(BaseMonomial::from_exponents({2, 0, 1}).str() == "x1^2*x3");
}

TEST_CASE("mixing generator counts is rejected") {
  CHECK_THROWS_AS((void)(BaseMonomial(2) * BaseMonomial(3)),
                  std::invalid_argument);
  BaseElement e(2);
  CHECK_THROWS_AS(e.add_term(BaseMonomial(3), Coefficient(1)),
                  std::invalid_argument);
}

TEST_CASE("the squared generator splits binomially under the coproduct") {
  const PolynomialBialgebra base(2);
  const BaseMonomial x = BaseMonomial::generator(2, 0);

  BaseTensorSquare expected(2);
  expected.add_term(x * x, BaseMonomial(2), Coefficient(1));
  expected.add_term(x, x, Coefficient(2));
  expected.add_term(BaseMonomial(2), x * x, Coefficient(1));
  CHECK(base.coproduct_basis(x * x) == expected);
}

TEST_CASE("a product of distinct generators splits into all four pieces") {
  const PolynomialBialgebra base(2);
  const BaseMonomial x = BaseMonomial::generator(2, 0);
  const BaseMonomial y = BaseMonomial::generator(2, 1);

  BaseTensorSquare expected(2);
  expected.add_term(x * y, BaseMonomial(2), Coefficient(1));
  expected.add_term(x, y, Coefficient(1));
  expected.add_term(y, x, Coefficient(1));
  expected.add_term(BaseMonomial(2), x * y, Coefficient(1));
  CHECK(base.coproduct_basis(x * y) == expected);
}

TEST_CASE("the coproduct is multiplicative against the square product") {
  const PolynomialBialgebra base(2);
  Rng rng(11);
  const GenOptions g{3, 1, 4};
  for (int i = 0; i < 50; ++i) {
    const BaseElement a = random_base_element(rng, 2, g);
    const BaseElement b = random_base_element(rng, 2, g);
    CHECK(base.coproduct(base.mul(a, b)) ==
          base.square_mul(base.coproduct(a), base.coproduct(b)));
  }
}

TEST_CASE("the counit keeps the constant term") {
  const PolynomialBialgebra base(2);
  BaseElement e = BaseElement::unit(2).scaled(Coefficient(3));
  e += BaseElement::generator(2, 0);
  CHECK(base.counit(e) == Coefficient(3));
  CHECK(base.counit_basis(BaseMonomial(2)) == Coefficient(1));
  CHECK(base.counit_basis(BaseMonomial::generator(2, 1)) == Coefficient(0));
}

TEST_CASE("monomial degree adds along the product") {
  const PolynomialBialgebra base(2);
  for (const auto& m1 : base.basis_up_to(3)) {
    for (const auto& m2 : base.basis_up_to(3)) {
      const BaseElement product = base.mul_basis(m1, m2);
      REQUIRE(product.terms().size() == 1);
      CHECK(base.degree_basis(product.terms().begin()->first) ==
            base.degree_basis(m1) + base.degree_basis(m2));
    }
  }
}

TEST_CASE("basis enumeration is complete and canonically ordered") {
  const PolynomialBialgebra base(2);
  const auto words = base.basis_up_to(2);
  REQUIRE(words.size() == 6);
  CHECK(words[0] == BaseMonomial(2));
  CHECK(words[1] == BaseMonomial::generator(2, 0));
  CHECK(words[2] == BaseMonomial::generator(2, 1));
  for (std::size_t i = 1; i < words.size(); ++i) {
    CHECK(words[i - 1] < words[i]);
  }

  const PolynomialBialgebra one_var(1);
  CHECK(one_var.basis_up_to(5).size() == 6);
}

TEST_CASE("element text extracts signs and collapses the unit monomial") {
  BaseElement e(2);
  e.add_term(BaseMonomial::generator(2, 0), -Coefficient(1));
  CHECK(e.str() == "-x1");
  e.add_term(BaseMonomial(2), Coefficient::lambda());
  CHECK(e.str() == "L - x1");
  CHECK(BaseElement(2).str() == "0");
}

}  // namespace
