#ifndef TDSHUFFLE_BASE_ALGEBRA_HPP
#define TDSHUFFLE_BASE_ALGEBRA_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tdshuffle/coefficient.hpp"

namespace tdshuffle {

// Basis monomial of the polynomial base algebra: an exponent vector over a
// fixed generator set x1..xv. Ordered by total degree, then lexicographically,
// which makes every container keyed on monomials deterministic.
class BaseMonomial {
 public:
  explicit BaseMonomial(std::size_t vars) : exponents_(vars, 0u) {}

  static BaseMonomial generator(std::size_t vars, std::size_t index);
  static BaseMonomial from_exponents(std::vector<unsigned> exponents);

  std::size_t vars() const { return exponents_.size(); }
  unsigned exponent(std::size_t index) const { return exponents_[index]; }
  const std::vector<unsigned>& exponents() const { return exponents_; }
  unsigned degree() const;
  bool is_unit() const;

  friend BaseMonomial operator*(const BaseMonomial& lhs,
                                const BaseMonomial& rhs);

  friend bool operator==(const BaseMonomial&, const BaseMonomial&) = default;
  std::strong_ordering operator<=>(const BaseMonomial& rhs) const;

  // Canonical text form: "1" for the unit, else "x1^2*x3" style with factors
  // in generator order and exponent 1 left implicit.
  std::string str() const;

 private:
  std::vector<unsigned> exponents_;
};

// Element of the base algebra: a Q[L]-linear combination of monomials with no
// zero terms stored.
class BaseElement {
 public:
  explicit BaseElement(std::size_t vars) : vars_(vars) {}

  static BaseElement unit(std::size_t vars);
  static BaseElement generator(std::size_t vars, std::size_t index);
  static BaseElement from_monomial(const BaseMonomial& monomial,
                                   const Coefficient& coeff = Coefficient(1));

  std::size_t vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<BaseMonomial, Coefficient>& terms() const { return terms_; }
  Coefficient coeff_of(const BaseMonomial& monomial) const;

  void add_term(const BaseMonomial& monomial, const Coefficient& coeff);

  BaseElement& operator+=(const BaseElement& rhs);
  BaseElement& operator-=(const BaseElement& rhs);
  friend BaseElement operator+(BaseElement lhs, const BaseElement& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BaseElement operator-(BaseElement lhs, const BaseElement& rhs) {
    lhs -= rhs;
    return lhs;
  }
  BaseElement operator-() const;
  BaseElement scaled(const Coefficient& factor) const;

  friend bool operator==(const BaseElement&, const BaseElement&) = default;

  std::string str() const;

 private:
  std::size_t vars_;
  std::map<BaseMonomial, Coefficient> terms_;
};

// Element of the tensor square of the base algebra, used for the base
// coproduct and its law checks. Both factors share the generator count.
class BaseTensorSquare {
 public:
  explicit BaseTensorSquare(std::size_t vars) : vars_(vars) {}

  std::size_t vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<BaseMonomial, BaseMonomial>, Coefficient>& terms()
      const {
    return terms_;
  }

  void add_term(const BaseMonomial& left, const BaseMonomial& right,
                const Coefficient& coeff);

  BaseTensorSquare& operator+=(const BaseTensorSquare& rhs);
  BaseTensorSquare& operator-=(const BaseTensorSquare& rhs);
  BaseTensorSquare operator-() const;
  BaseTensorSquare scaled(const Coefficient& factor) const;

  friend bool operator==(const BaseTensorSquare&,
                         const BaseTensorSquare&) = default;

  std::string str() const;

 private:
  std::size_t vars_;
  std::map<std::pair<BaseMonomial, BaseMonomial>, Coefficient> terms_;
};

// Capability interface the tensor layers consume: a commutative bialgebra
// with a distinguished monomial basis, a grading, and basis enumeration.
// Everything above this seam is base-agnostic.
class BaseOps {
 public:
  virtual ~BaseOps() = default;

  virtual std::size_t vars() const = 0;

  // Product of two basis monomials, expanded in the basis.
  virtual BaseElement mul_basis(const BaseMonomial& lhs,
                                const BaseMonomial& rhs) const = 0;
  virtual BaseTensorSquare coproduct_basis(const BaseMonomial& m) const = 0;
  virtual Coefficient counit_basis(const BaseMonomial& m) const = 0;
  virtual unsigned degree_basis(const BaseMonomial& m) const = 0;
  // All basis monomials of degree <= bound, in canonical order.
  virtual std::vector<BaseMonomial> basis_up_to(unsigned bound) const = 0;

  // Bilinear extensions; shared by every base.
  BaseElement mul(const BaseElement& lhs, const BaseElement& rhs) const;
  BaseTensorSquare coproduct(const BaseElement& a) const;
  Coefficient counit(const BaseElement& a) const;
  // Componentwise product on the tensor square.
  BaseTensorSquare square_mul(const BaseTensorSquare& lhs,
                              const BaseTensorSquare& rhs) const;
};

// The shipped base: polynomials over Q[L] in v primitive generators.
// Delta(xi) = xi (x) 1 + 1 (x) xi extended multiplicatively, counit kills
// every generator, degree is total degree.
class PolynomialBialgebra final : public BaseOps {
 public:
  explicit PolynomialBialgebra(std::size_t vars);

  std::size_t vars() const override { return vars_; }
  BaseElement mul_basis(const BaseMonomial& lhs,
                        const BaseMonomial& rhs) const override;
  BaseTensorSquare coproduct_basis(const BaseMonomial& m) const override;
  Coefficient counit_basis(const BaseMonomial& m) const override;
  unsigned degree_basis(const BaseMonomial& m) const override;
  std::vector<BaseMonomial> basis_up_to(unsigned bound) const override;

 private:
  std::size_t vars_;
};

}  // namespace tdshuffle

#endif
