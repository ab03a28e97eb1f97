#include "tdshuffle/random_gen.hpp"

namespace tdshuffle {

std::uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return next() % n; }

std::uint64_t Rng::mix(std::uint64_t seed, std::uint64_t salt) {
  Rng r(seed ^ (salt * 0xD1B54A32D192ED03ull));
  return r.next();
}

Coefficient random_coefficient(Rng& rng) {
  switch (rng.below(6)) {
    case 0:
      return Coefficient(1);
    case 1:
      return Coefficient(-1);
    case 2:
      return Coefficient(make_rational(1, 2));
    case 3:
      return Coefficient(make_rational(-1, 2));
    case 4:
      return Coefficient::lambda();
    default:
      return Coefficient::lambda() - Coefficient(1);
  }
}

BaseMonomial random_monomial(Rng& rng, std::size_t vars, unsigned degree) {
  std::vector<unsigned> exponents(vars, 0u);
  for (unsigned i = 0; i < degree; ++i) {
    ++exponents[rng.below(vars)];
  }
  return BaseMonomial::from_exponents(std::move(exponents));
}

TensorWord random_word(Rng& rng, std::size_t vars, unsigned length,
                       const GenOptions& options) {
  unsigned budget = options.max_degree;
  std::vector<BaseMonomial> letters;
  letters.reserve(length);
  for (unsigned i = 0; i < length; ++i) {
    const unsigned cap = budget < 2 ? budget : 2;
    const unsigned d = static_cast<unsigned>(rng.below(cap + 1));
    budget -= d;
    letters.push_back(random_monomial(rng, vars, d));
  }
  return TensorWord(std::move(letters));
}

TensorElement random_element(Rng& rng, std::size_t vars,
                             const GenOptions& options, Space space) {
  TensorElement out(space, vars);
  const unsigned words = 1 + static_cast<unsigned>(rng.below(options.max_words));
  for (unsigned i = 0; i < words; ++i) {
    unsigned length;
    if (space == Space::Plus) {
      length = static_cast<unsigned>(rng.below(options.max_length + 1));
    } else {
      length = 1 + static_cast<unsigned>(rng.below(options.max_length));
    }
    const Coefficient coeff = random_coefficient(rng);
    if (length == 0) {
      out.add_term(TensorWord::empty(), coeff);
    } else {
      out.add_term(random_word(rng, vars, length, options), coeff);
    }
  }
  return out;
}

TensorSquareElement random_square(Rng& rng, std::size_t vars,
                                  const GenOptions& options) {
  TensorSquareElement out(vars);
  const unsigned pairs = 1 + static_cast<unsigned>(rng.below(2));
  for (unsigned i = 0; i < pairs; ++i) {
    const unsigned ll = 1 + static_cast<unsigned>(rng.below(options.max_length));
    const unsigned rl = 1 + static_cast<unsigned>(rng.below(options.max_length));
    out.add_term(random_word(rng, vars, ll, options),
                 random_word(rng, vars, rl, options),
                 random_coefficient(rng));
  }
  return out;
}

BaseElement random_base_element(Rng& rng, std::size_t vars,
                                const GenOptions& options) {
  BaseElement out(vars);
  const unsigned terms = 1 + static_cast<unsigned>(rng.below(3));
  for (unsigned i = 0; i < terms; ++i) {
    const unsigned d = static_cast<unsigned>(rng.below(options.max_degree + 1));
    out.add_term(random_monomial(rng, vars, d), random_coefficient(rng));
  }
  return out;
}

}  // namespace tdshuffle
