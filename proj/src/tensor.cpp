#include "tdshuffle/tensor.hpp"

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

void require_same_space(Space lhs, Space rhs, const char* what) {
  if (lhs != rhs) {
    throw std::invalid_argument(std::string(what) + ": space tags differ (" +
                                space_name(lhs) + " vs " + space_name(rhs) +
                                ")");
  }
}

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

std::string space_name(Space space) {
  return space == Space::Plus ? "word space" : "length >= 1 word space";
}

TensorWord::TensorWord(std::vector<BaseMonomial> letters)
    : letters_(std::move(letters)) {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    require_same_vars(letters_[0].vars(), letters_[i].vars(), "word letters");
  }
}

TensorWord TensorWord::unit(std::size_t vars) {
  return TensorWord({BaseMonomial(vars)});
}

const BaseMonomial& TensorWord::head() const {
  if (letters_.empty()) {
    throw std::invalid_argument("head of the empty word");
  }
  return letters_.front();
}

TensorWord TensorWord::tail() const {
  if (letters_.empty()) {
    throw std::invalid_argument("tail of the empty word");
  }
  return TensorWord(
      std::vector<BaseMonomial>(letters_.begin() + 1, letters_.end()));
}

TensorWord TensorWord::prepended(const BaseMonomial& letter) const {
  std::vector<BaseMonomial> letters;
  letters.reserve(letters_.size() + 1);
  letters.push_back(letter);
  letters.insert(letters.end(), letters_.begin(), letters_.end());
  return TensorWord(std::move(letters));
}

std::strong_ordering TensorWord::operator<=>(const TensorWord& rhs) const {
  if (auto c = letters_.size() <=> rhs.letters_.size(); c != 0) return c;
  return letters_ <=> rhs.letters_;
}

std::string TensorWord::str() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) out << ", ";
    out << letters_[i].str();
  }
  out << "]";
  return out.str();
}

TensorElement TensorElement::from_word(Space space, std::size_t vars,
                                       const TensorWord& word,
                                       const Coefficient& coeff) {
  TensorElement e(space, vars);
  e.add_term(word, coeff);
  return e;
}

TensorElement TensorElement::scalar(std::size_t vars,
                                    const Coefficient& coeff) {
  return from_word(Space::Plus, vars, TensorWord::empty(), coeff);
}

TensorElement TensorElement::unit_word(Space space, std::size_t vars) {
  return from_word(space, vars, TensorWord::unit(vars));
}

Coefficient TensorElement::coeff_of(const TensorWord& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Coefficient() : it->second;
}

void TensorElement::add_term(const TensorWord& word, const Coefficient& coeff) {
  if (space_ == Space::Lambda && word.is_empty()) {
    throw std::invalid_argument(
        "the empty word does not live in the length >= 1 word space");
  }
  if (!word.is_empty()) {
    require_same_vars(vars_, word.letter(0).vars(), "tensor element term");
  }
  if (coeff.is_zero()) return;
  auto it = terms_.find(word);
  if (it == terms_.end()) {
    terms_.emplace(word, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void TensorElement::add_scaled(const TensorElement& rhs,
                               const Coefficient& factor) {
  require_same_space(space_, rhs.space_, "tensor element sum");
  require_same_vars(vars_, rhs.vars_, "tensor element sum");
  for (const auto& [w, c] : rhs.terms_) add_term(w, c * factor);
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
  add_scaled(rhs, Coefficient(1));
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs) {
  add_scaled(rhs, Coefficient(-1));
  return *this;
}

TensorElement TensorElement::operator-() const {
  TensorElement out(space_, vars_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

TensorElement TensorElement::scaled(const Coefficient& factor) const {
  TensorElement out(space_, vars_);
  out.add_scaled(*this, factor);
  return out;
}

TensorElement TensorElement::as_plus() const {
  TensorElement out(Space::Plus, vars_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, c);
  return out;
}

TensorElement TensorElement::as_lambda() const {
  TensorElement out(Space::Lambda, vars_);
  for (const auto& [w, c] : terms_) {
    if (w.is_empty()) {
      throw std::invalid_argument(
          "element contains the empty word; it does not lie in the "
          "length >= 1 word space");
    }
    out.terms_.emplace(w, c);
  }
  return out;
}

std::string TensorElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Coefficient magnitude;
    out << sign_prefix(first, c, &magnitude);
    first = false;
    if (w.is_empty()) {
      if (magnitude.is_single_positive_term()) {
        out << magnitude.str();
      } else {
        out << "(" << magnitude.str() << ")";
      }
    } else {
      out << coeff_body_prefix(magnitude) << w.str();
    }
  }
  return out.str();
}

Coefficient TensorSquareElement::coeff_of(const TensorWord& left,
                                          const TensorWord& right) const {
  auto it = terms_.find(std::make_pair(left, right));
  return it == terms_.end() ? Coefficient() : it->second;
}

void TensorSquareElement::add_term(const TensorWord& left,
                                   const TensorWord& right,
                                   const Coefficient& coeff) {
  if (left.is_empty() || right.is_empty()) {
    throw std::invalid_argument(
        "tensor square components must have length >= 1");
  }
  require_same_vars(vars_, left.letter(0).vars(), "tensor square left factor");
  require_same_vars(vars_, right.letter(0).vars(),
                    "tensor square right factor");
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

void TensorSquareElement::add_scaled(const TensorSquareElement& rhs,
                                     const Coefficient& factor) {
  require_same_vars(vars_, rhs.vars_, "tensor square sum");
  for (const auto& [key, c] : rhs.terms_) {
    add_term(key.first, key.second, c * factor);
  }
}

void TensorSquareElement::remove_term(const TensorWord& left,
                                      const TensorWord& right) {
  terms_.erase(std::make_pair(left, right));
}

TensorSquareElement& TensorSquareElement::operator+=(
    const TensorSquareElement& rhs) {
  add_scaled(rhs, Coefficient(1));
  return *this;
}

TensorSquareElement& TensorSquareElement::operator-=(
    const TensorSquareElement& rhs) {
  add_scaled(rhs, Coefficient(-1));
  return *this;
}

TensorSquareElement TensorSquareElement::operator-() const {
  TensorSquareElement out(vars_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

TensorSquareElement TensorSquareElement::scaled(
    const Coefficient& factor) const {
  TensorSquareElement out(vars_);
  out.add_scaled(*this, factor);
  return out;
}

std::string TensorSquareElement::str() const {
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

TensorElement pure_tensor(Space space, std::size_t vars,
                          const std::vector<BaseElement>& factors) {
  TensorElement out(space, vars);
  if (factors.empty()) {
    out.add_term(TensorWord::empty(), Coefficient(1));
    return out;
  }
  // Distribute left to right: partial words paired with their coefficients.
  std::vector<std::pair<std::vector<BaseMonomial>, Coefficient>> partial;
  partial.emplace_back(std::vector<BaseMonomial>{}, Coefficient(1));
  for (const auto& factor : factors) {
    require_same_vars(vars, factor.vars(), "pure tensor factor");
    std::vector<std::pair<std::vector<BaseMonomial>, Coefficient>> next;
    for (const auto& [word, coeff] : partial) {
      for (const auto& [m, c] : factor.terms()) {
        auto extended = word;
        extended.push_back(m);
        next.emplace_back(std::move(extended), coeff * c);
      }
    }
    partial = std::move(next);
  }
  for (auto& [word, coeff] : partial) {
    out.add_term(TensorWord(std::move(word)), coeff);
  }
  return out;
}

TensorElement graft(const BaseElement& head, const TensorElement& tail) {
  TensorElement out(Space::Plus, tail.vars());
  for (const auto& [m, cm] : head.terms()) {
    for (const auto& [w, cw] : tail.terms()) {
      out.add_term(w.prepended(m), cm * cw);
    }
  }
  return out;
}

}  // namespace tdshuffle
