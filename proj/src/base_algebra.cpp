#include "tdshuffle/base_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tdshuffle {

namespace {

void require_same_vars(std::size_t lhs, std::size_t rhs, const char* what) {
  if (lhs != rhs) {
    throw std::invalid_argument(std::string(what) +
                                ": generator counts differ (" +
                                std::to_string(lhs) + " vs " +
                                std::to_string(rhs) + ")");
  }
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  if (k > n - k) k = n - k;
  Integer result(1);
  for (unsigned i = 1; i <= k; ++i) {
    result *= Integer(n - k + i);
    result /= Integer(i);
  }
  return result;
}

// Sign-aware term prefix shared by the element renderers: returns the
// separator for this term and strips the sign into `magnitude`.
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

BaseMonomial BaseMonomial::generator(std::size_t vars, std::size_t index) {
  if (index >= vars) {
    throw std::invalid_argument("generator index " + std::to_string(index) +
                                " out of range for " + std::to_string(vars) +
                                " generators");
  }
  BaseMonomial m(vars);
  m.exponents_[index] = 1;
  return m;
}

BaseMonomial BaseMonomial::from_exponents(std::vector<unsigned> exponents) {
  BaseMonomial m(exponents.size());
  m.exponents_ = std::move(exponents);
  return m;
}

unsigned BaseMonomial::degree() const {
  unsigned total = 0;
  for (unsigned e : exponents_) total += e;
  return total;
}

bool BaseMonomial::is_unit() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](unsigned e) { return e == 0; });
}

BaseMonomial operator*(const BaseMonomial& lhs, const BaseMonomial& rhs) {
  require_same_vars(lhs.vars(), rhs.vars(), "monomial product");
  BaseMonomial out(lhs.vars());
  for (std::size_t i = 0; i < lhs.vars(); ++i) {
    out.exponents_[i] = lhs.exponents_[i] + rhs.exponents_[i];
  }
  return out;
}

std::strong_ordering BaseMonomial::operator<=>(const BaseMonomial& rhs) const {
  if (auto c = vars() <=> rhs.vars(); c != 0) return c;
  if (auto c = degree() <=> rhs.degree(); c != 0) return c;
  // Within a degree, heavier early generators come first, so containers
  // iterate 1, x1, x2, x1^2, x1*x2, x2^2, ...
  return rhs.exponents_ <=> exponents_;
}

std::string BaseMonomial::str() const {
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (any) out << "*";
    out << "x" << (i + 1);
    if (exponents_[i] > 1) out << "^" << exponents_[i];
    any = true;
  }
  return any ? out.str() : "1";
}

BaseElement BaseElement::unit(std::size_t vars) {
  return from_monomial(BaseMonomial(vars));
}

BaseElement BaseElement::generator(std::size_t vars, std::size_t index) {
  return from_monomial(BaseMonomial::generator(vars, index));
}

BaseElement BaseElement::from_monomial(const BaseMonomial& monomial,
                                       const Coefficient& coeff) {
  BaseElement e(monomial.vars());
  e.add_term(monomial, coeff);
  return e;
}

Coefficient BaseElement::coeff_of(const BaseMonomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Coefficient() : it->second;
}

void BaseElement::add_term(const BaseMonomial& monomial,
                           const Coefficient& coeff) {
  require_same_vars(vars_, monomial.vars(), "base element term");
  if (coeff.is_zero()) return;
  auto it = terms_.find(monomial);
  if (it == terms_.end()) {
    terms_.emplace(monomial, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

BaseElement& BaseElement::operator+=(const BaseElement& rhs) {
  require_same_vars(vars_, rhs.vars_, "base element sum");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BaseElement& BaseElement::operator-=(const BaseElement& rhs) {
  require_same_vars(vars_, rhs.vars_, "base element difference");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

BaseElement BaseElement::operator-() const {
  BaseElement out(vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

BaseElement BaseElement::scaled(const Coefficient& factor) const {
  BaseElement out(vars_);
  for (const auto& [m, c] : terms_) out.add_term(m, c * factor);
  return out;
}

std::string BaseElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Coefficient magnitude;
    out << sign_prefix(first, c, &magnitude);
    first = false;
    if (m.is_unit()) {
      if (magnitude.is_single_positive_term()) {
        out << magnitude.str();
      } else {
        out << "(" << magnitude.str() << ")";
      }
    } else {
      out << coeff_body_prefix(magnitude) << m.str();
    }
  }
  return out.str();
}

void BaseTensorSquare::add_term(const BaseMonomial& left,
                                const BaseMonomial& right,
                                const Coefficient& coeff) {
  require_same_vars(vars_, left.vars(), "tensor square left factor");
  require_same_vars(vars_, right.vars(), "tensor square right factor");
  if (coeff.is_zero()) return;
  auto key = std::make_pair(left, right);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

BaseTensorSquare& BaseTensorSquare::operator+=(const BaseTensorSquare& rhs) {
  require_same_vars(vars_, rhs.vars_, "tensor square sum");
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

BaseTensorSquare& BaseTensorSquare::operator-=(const BaseTensorSquare& rhs) {
  require_same_vars(vars_, rhs.vars_, "tensor square difference");
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, -c);
  return *this;
}

BaseTensorSquare BaseTensorSquare::operator-() const {
  BaseTensorSquare out(vars_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

BaseTensorSquare BaseTensorSquare::scaled(const Coefficient& factor) const {
  BaseTensorSquare out(vars_);
  for (const auto& [key, c] : terms_) {
    out.add_term(key.first, key.second, c * factor);
  }
  return out;
}

std::string BaseTensorSquare::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    Coefficient magnitude;
    out << sign_prefix(first, c, &magnitude);
    first = false;
    out << coeff_body_prefix(magnitude) << key.first.str() << " (x) "
        << key.second.str();
  }
  return out.str();
}

BaseElement BaseOps::mul(const BaseElement& lhs, const BaseElement& rhs) const {
  require_same_vars(lhs.vars(), rhs.vars(), "base product");
  BaseElement out(lhs.vars());
  for (const auto& [ml, cl] : lhs.terms()) {
    for (const auto& [mr, cr] : rhs.terms()) {
      const Coefficient c = cl * cr;
      const BaseElement product = mul_basis(ml, mr);
      for (const auto& [m, cm] : product.terms()) {
        out.add_term(m, c * cm);
      }
    }
  }
  return out;
}

BaseTensorSquare BaseOps::coproduct(const BaseElement& a) const {
  BaseTensorSquare out(a.vars());
  for (const auto& [m, c] : a.terms()) {
    out += coproduct_basis(m).scaled(c);
  }
  return out;
}

Coefficient BaseOps::counit(const BaseElement& a) const {
  Coefficient out;
  for (const auto& [m, c] : a.terms()) out += c * counit_basis(m);
  return out;
}

BaseTensorSquare BaseOps::square_mul(const BaseTensorSquare& lhs,
                                     const BaseTensorSquare& rhs) const {
  require_same_vars(lhs.vars(), rhs.vars(), "tensor square product");
  BaseTensorSquare out(lhs.vars());
  for (const auto& [kl, cl] : lhs.terms()) {
    for (const auto& [kr, cr] : rhs.terms()) {
      const Coefficient c = cl * cr;
      const BaseElement left = mul_basis(kl.first, kr.first);
      const BaseElement right = mul_basis(kl.second, kr.second);
      for (const auto& [ml, cml] : left.terms()) {
        for (const auto& [mr, cmr] : right.terms()) {
          out.add_term(ml, mr, c * cml * cmr);
        }
      }
    }
  }
  return out;
}

PolynomialBialgebra::PolynomialBialgebra(std::size_t vars) : vars_(vars) {
  if (vars == 0) {
    throw std::invalid_argument("polynomial base needs at least one generator");
  }
}

BaseElement PolynomialBialgebra::mul_basis(const BaseMonomial& lhs,
                                           const BaseMonomial& rhs) const {
  return BaseElement::from_monomial(lhs * rhs);
}

BaseTensorSquare PolynomialBialgebra::coproduct_basis(
    const BaseMonomial& m) const {
  // Generators are primitive, so Delta(x^e) expands by the binomial theorem
  // in each variable: sum over k <= e of prod(binom(e_i, k_i)) x^k (x) x^(e-k).
  BaseTensorSquare out(vars_);
  std::vector<unsigned> k(vars_, 0u);
  while (true) {
    Integer coeff(1);
    std::vector<unsigned> rest(vars_);
    for (std::size_t i = 0; i < vars_; ++i) {
      coeff *= binomial(m.exponent(i), k[i]);
      rest[i] = m.exponent(i) - k[i];
    }
    out.add_term(BaseMonomial::from_exponents(k),
                 BaseMonomial::from_exponents(rest),
                 Coefficient(Rational(coeff)));
    // Odometer step over 0 <= k_i <= e_i.
    std::size_t pos = 0;
    while (pos < vars_ && k[pos] == m.exponent(pos)) {
      k[pos] = 0;
      ++pos;
    }
    if (pos == vars_) break;
    ++k[pos];
  }
  return out;
}

Coefficient PolynomialBialgebra::counit_basis(const BaseMonomial& m) const {
  return m.is_unit() ? Coefficient(1) : Coefficient();
}

unsigned PolynomialBialgebra::degree_basis(const BaseMonomial& m) const {
  return m.degree();
}

std::vector<BaseMonomial> PolynomialBialgebra::basis_up_to(
    unsigned bound) const {
  std::vector<BaseMonomial> out;
  std::vector<unsigned> e(vars_, 0u);
  // Odometer over exponent vectors, pruned by total degree.
  while (true) {
    unsigned total = 0;
    for (unsigned x : e) total += x;
    if (total <= bound) out.push_back(BaseMonomial::from_exponents(e));
    std::size_t pos = 0;
    while (pos < vars_ && e[pos] == bound) {
      e[pos] = 0;
      ++pos;
    }
    if (pos == vars_) break;
    ++e[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tdshuffle
