#ifndef TDSHUFFLE_TENSOR_HPP
#define TDSHUFFLE_TENSOR_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tdshuffle/base_algebra.hpp"

namespace tdshuffle {

// Which tensor space an element lives in. Plus is the full word space
// including the empty word (scalars); Lambda is its subspace spanned by
// words of length >= 1, the carrier of the diamond product.
enum class Space : unsigned char { Plus, Lambda };

std::string space_name(Space space);

// Basis word: a finite sequence of base monomials (possibly empty). Words
// compare by length first, then letter-by-letter, so term maps iterate in a
// canonical order.
class TensorWord {
 public:
  TensorWord() = default;
  explicit TensorWord(std::vector<BaseMonomial> letters);

  static TensorWord empty() { return TensorWord(); }
  // The length-one word on the unit monomial; the diamond unit.
  static TensorWord unit(std::size_t vars);

  std::size_t length() const { return letters_.size(); }
  bool is_empty() const { return letters_.empty(); }
  const BaseMonomial& letter(std::size_t index) const {
    return letters_[index];
  }
  const std::vector<BaseMonomial>& letters() const { return letters_; }

  const BaseMonomial& head() const;
  TensorWord tail() const;
  TensorWord prepended(const BaseMonomial& letter) const;

  friend bool operator==(const TensorWord&, const TensorWord&) = default;
  std::strong_ordering operator<=>(const TensorWord& rhs) const;

  // Canonical text form, e.g. "[x1^2*x2, 1]"; the empty word is "[]".
  std::string str() const;

 private:
  std::vector<BaseMonomial> letters_;
};

// Q[L]-linear combination of words, tagged with the space it lives in.
// Lambda-tagged elements never contain the empty word.
class TensorElement {
 public:
  TensorElement(Space space, std::size_t vars) : space_(space), vars_(vars) {}

  static TensorElement from_word(Space space, std::size_t vars,
                                 const TensorWord& word,
                                 const Coefficient& coeff = Coefficient(1));
  static TensorElement scalar(std::size_t vars, const Coefficient& coeff);
  // The unit word with coefficient one, in the requested space.
  static TensorElement unit_word(Space space, std::size_t vars);

  Space space() const { return space_; }
  std::size_t vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<TensorWord, Coefficient>& terms() const { return terms_; }
  Coefficient coeff_of(const TensorWord& word) const;

  void add_term(const TensorWord& word, const Coefficient& coeff);
  void add_scaled(const TensorElement& rhs, const Coefficient& factor);

  TensorElement& operator+=(const TensorElement& rhs);
  TensorElement& operator-=(const TensorElement& rhs);
  friend TensorElement operator+(TensorElement lhs, const TensorElement& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend TensorElement operator-(TensorElement lhs, const TensorElement& rhs) {
    lhs -= rhs;
    return lhs;
  }
  TensorElement operator-() const;
  TensorElement scaled(const Coefficient& factor) const;

  // Retagging. as_lambda rejects elements containing the empty word;
  // as_plus always succeeds (the length >= 1 span embeds in the word space).
  TensorElement as_plus() const;
  TensorElement as_lambda() const;

  // Structural equality: same space tag, same terms.
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

  std::string str() const;

 private:
  Space space_;
  std::size_t vars_;
  std::map<TensorWord, Coefficient> terms_;
};

// Element of the tensor square of the length >= 1 word space; the coproduct
// codomain. Both components of every pair have length >= 1.
class TensorSquareElement {
 public:
  explicit TensorSquareElement(std::size_t vars) : vars_(vars) {}

  std::size_t vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<TensorWord, TensorWord>, Coefficient>& terms()
      const {
    return terms_;
  }
  Coefficient coeff_of(const TensorWord& left, const TensorWord& right) const;

  void add_term(const TensorWord& left, const TensorWord& right,
                const Coefficient& coeff);
  void add_scaled(const TensorSquareElement& rhs, const Coefficient& factor);
  void remove_term(const TensorWord& left, const TensorWord& right);

  TensorSquareElement& operator+=(const TensorSquareElement& rhs);
  TensorSquareElement& operator-=(const TensorSquareElement& rhs);
  friend TensorSquareElement operator+(TensorSquareElement lhs,
                                       const TensorSquareElement& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend TensorSquareElement operator-(TensorSquareElement lhs,
                                       const TensorSquareElement& rhs) {
    lhs -= rhs;
    return lhs;
  }
  TensorSquareElement operator-() const;
  TensorSquareElement scaled(const Coefficient& factor) const;

  friend bool operator==(const TensorSquareElement&,
                         const TensorSquareElement&) = default;

  std::string str() const;

 private:
  std::size_t vars_;
  std::map<std::pair<TensorWord, TensorWord>, Coefficient> terms_;
};

// Expands a pure tensor of base elements into the word basis by multilinear
// distribution. Any zero factor yields the zero element. Factors of length
// zero are not representable; an empty factor list yields the scalar one.
TensorElement pure_tensor(Space space, std::size_t vars,
                          const std::vector<BaseElement>& factors);

// Prepends a base element as a new head letter to every word of `tail`,
// distributing over the head's terms. A scalar (empty word) term of `tail`
// collapses: grafting head onto c yields c * word(head), a length-one word.
TensorElement graft(const BaseElement& head, const TensorElement& tail);

}  // namespace tdshuffle

#endif
