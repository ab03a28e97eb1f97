#ifndef TDSHUFFLE_COEFFICIENT_HPP
#define TDSHUFFLE_COEFFICIENT_HPP

#include <compare>
#include <map>
#include <string>

#include "tdshuffle/rational.hpp"

namespace tdshuffle {

// Element of Q[L]: a univariate polynomial in the formal weight L with exact
// rational coefficients. Stored sparsely as exponent -> coefficient with no
// zero entries, so structural equality is polynomial equality.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(int value);  // NOLINT(google-explicit-constructor)
  Coefficient(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Coefficient lambda();
  static Coefficient monomial(unsigned power, const Rational& value);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  // Requires is_constant(); the value of a degree-0 polynomial.
  Rational constant_value() const;
  unsigned degree() const;

  // True when the polynomial is a single term c*L^k with c > 0. Rendering
  // uses this to decide whether a term needs parentheses.
  bool is_single_positive_term() const;
  bool is_single_term() const;

  const std::map<unsigned, Rational>& terms() const { return terms_; }

  Coefficient& operator+=(const Coefficient& rhs);
  Coefficient& operator-=(const Coefficient& rhs);
  Coefficient& operator*=(const Coefficient& rhs);
  friend Coefficient operator+(Coefficient lhs, const Coefficient& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Coefficient operator-(Coefficient lhs, const Coefficient& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Coefficient operator*(const Coefficient& lhs, const Coefficient& rhs);
  Coefficient operator-() const;

  friend bool operator==(const Coefficient&, const Coefficient&) = default;
  // Total order (degree, then coefficients from the top down); only used to
  // key deterministic containers, no algebraic meaning.
  std::strong_ordering operator<=>(const Coefficient& rhs) const;

  // Evaluation at a rational point; a ring homomorphism Q[L] -> Q.
  Rational eval(const Rational& at) const;
  // Substitution L -> image; a ring endomorphism of Q[L].
  Coefficient substitute(const Coefficient& image) const;

  // Canonical text form, highest power first, e.g. "(2/3)L^2 - 1".
  std::string str() const;

 private:
  void add_term(unsigned power, const Rational& value);

  std::map<unsigned, Rational> terms_;
};

}  // namespace tdshuffle

#endif
