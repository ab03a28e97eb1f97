#include "tdshuffle/coefficient.hpp"

#include <sstream>
#include <stdexcept>

namespace tdshuffle {

Coefficient::Coefficient(int value) {
  if (value != 0) terms_.emplace(0u, Rational(value));
}

Coefficient::Coefficient(const Rational& value) {
  if (value != 0) terms_.emplace(0u, value);
}

Coefficient Coefficient::lambda() { return monomial(1, Rational(1)); }

Coefficient Coefficient::monomial(unsigned power, const Rational& value) {
  Coefficient c;
  if (value != 0) c.terms_.emplace(power, value);
  return c;
}

bool Coefficient::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

bool Coefficient::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational Coefficient::constant_value() const {
  if (!is_constant()) {
    throw std::invalid_argument(
        "constant_value: coefficient has positive degree: " + str());
  }
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

unsigned Coefficient::degree() const {
  return terms_.empty() ? 0u : terms_.rbegin()->first;
}

bool Coefficient::is_single_positive_term() const {
  return terms_.size() == 1 && terms_.begin()->second > 0;
}

bool Coefficient::is_single_term() const { return terms_.size() == 1; }

void Coefficient::add_term(unsigned power, const Rational& value) {
  auto it = terms_.find(power);
  if (it == terms_.end()) {
    if (value != 0) terms_.emplace(power, value);
    return;
  }
  it->second += value;
  if (it->second == 0) terms_.erase(it);
}

Coefficient& Coefficient::operator+=(const Coefficient& rhs) {
  for (const auto& [power, value] : rhs.terms_) add_term(power, value);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& rhs) {
  for (const auto& [power, value] : rhs.terms_) add_term(power, -value);
  return *this;
}

Coefficient operator*(const Coefficient& lhs, const Coefficient& rhs) {
  Coefficient out;
  for (const auto& [pl, vl] : lhs.terms_) {
    for (const auto& [pr, vr] : rhs.terms_) {
      out.add_term(pl + pr, vl * vr);
    }
  }
  return out;
}

Coefficient& Coefficient::operator*=(const Coefficient& rhs) {
  *this = *this * rhs;
  return *this;
}

Coefficient Coefficient::operator-() const {
  Coefficient out;
  for (const auto& [power, value] : terms_) out.terms_.emplace(power, -value);
  return out;
}

std::strong_ordering Coefficient::operator<=>(const Coefficient& rhs) const {
  auto lit = terms_.rbegin();
  auto rit = rhs.terms_.rbegin();
  for (; lit != terms_.rend() && rit != rhs.terms_.rend(); ++lit, ++rit) {
    if (lit->first != rit->first) {
      return lit->first <=> rit->first;
    }
    if (lit->second != rit->second) {
      return lit->second < rit->second ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
    }
  }
  if (lit != terms_.rend()) return std::strong_ordering::greater;
  if (rit != rhs.terms_.rend()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

Rational Coefficient::eval(const Rational& at) const {
  // Horner evaluation over the sparse terms, highest power first.
  Rational acc(0);
  unsigned consumed_power = 0;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (first) {
      acc = it->second;
      consumed_power = it->first;
      first = false;
      continue;
    }
    for (unsigned k = it->first; k < consumed_power; ++k) acc *= at;
    consumed_power = it->first;
    acc += it->second;
  }
  for (unsigned k = 0; k < consumed_power && !first; ++k) acc *= at;
  return acc;
}

Coefficient Coefficient::substitute(const Coefficient& image) const {
  Coefficient acc;
  unsigned consumed_power = 0;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (first) {
      acc = Coefficient(it->second);
      consumed_power = it->first;
      first = false;
      continue;
    }
    for (unsigned k = it->first; k < consumed_power; ++k) acc *= image;
    consumed_power = it->first;
    acc += Coefficient(it->second);
  }
  for (unsigned k = 0; k < consumed_power && !first; ++k) acc *= image;
  return acc;
}

namespace {

// One term's compact body, sign stripped: "1", "2/3", "L^2", "2L^2", "(2/3)L".
std::string term_body(unsigned power, const Rational& magnitude) {
  std::string lpart;
  if (power == 1) {
    lpart = "L";
  } else if (power > 1) {
    lpart = "L^" + std::to_string(power);
  }
  if (lpart.empty()) return magnitude.str();
  if (magnitude == 1) return lpart;
  if (is_integer(magnitude)) return magnitude.str() + lpart;
  return "(" + magnitude.str() + ")" + lpart;
}

}  // namespace

std::string Coefficient::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool negative = it->second < 0;
    const Rational magnitude = negative ? Rational(-it->second) : it->second;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    out << term_body(it->first, magnitude);
  }
  return out.str();
}

}  // namespace tdshuffle
