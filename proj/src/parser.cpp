#include "tdshuffle/parser.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"

#include "tdshuffle/products.hpp"

namespace tdshuffle {

namespace {

enum class Tok : unsigned char {
  Number,   // digit run
  Lambda,   // L
  Name,     // x<digits>
  Op,       // P
  LBracket,
  RBracket,
  LParen,
  RParen,
  Comma,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  Hash,     // shuffle
  Diamond,  // diamond
  End,
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Number: return "a number";
    case Tok::Lambda: return "'L'";
    case Tok::Name: return "a generator";
    case Tok::Op: return "'P'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::Hash: return "'#'";
    case Tok::Diamond: return "'<>'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;  // digits for Number/Name
};

std::vector<Token> lex(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto push = [&](Tok kind, std::size_t at, std::size_t len) {
    out.push_back(Token{kind, at, in.substr(at, len)});
  };
  while (i < in.size()) {
    const char c = in[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j])))
        ++j;
      push(Tok::Number, i, j - i);
      i = j;
      continue;
    }
    if (c == 'x') {
      std::size_t j = i + 1;
      while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j])))
        ++j;
      if (j == i + 1) throw ParseError(i, "'x' must be followed by an index");
      out.push_back(Token{Tok::Name, i, in.substr(i + 1, j - i - 1)});
      i = j;
      continue;
    }
    switch (c) {
      case 'L': push(Tok::Lambda, i, 1); ++i; continue;
      case 'P': push(Tok::Op, i, 1); ++i; continue;
      case '[': push(Tok::LBracket, i, 1); ++i; continue;
      case ']': push(Tok::RBracket, i, 1); ++i; continue;
      case '(': push(Tok::LParen, i, 1); ++i; continue;
      case ')': push(Tok::RParen, i, 1); ++i; continue;
      case ',': push(Tok::Comma, i, 1); ++i; continue;
      case '+': push(Tok::Plus, i, 1); ++i; continue;
      case '-': push(Tok::Minus, i, 1); ++i; continue;
      case '*': push(Tok::Star, i, 1); ++i; continue;
      case '/': push(Tok::Slash, i, 1); ++i; continue;
      case '^': push(Tok::Caret, i, 1); ++i; continue;
      case '#': push(Tok::Hash, i, 1); ++i; continue;
      case '<':
        if (i + 1 < in.size() && in[i + 1] == '>') {
          push(Tok::Diamond, i, 2);
          i += 2;
          continue;
        }
        throw ParseError(i, "'<' must be part of '<>'");
      default: break;
    }
    // UTF-8 aliases for the two word products.
    if (in.substr(i, 3) == "\xE2\x8A\x94") {  // shuffle glyph
      push(Tok::Hash, i, 3);
      i += 3;
      continue;
    }
    if (in.substr(i, 3) == "\xE2\x8B\x84") {  // diamond glyph
      push(Tok::Diamond, i, 3);
      i += 3;
      continue;
    }
    throw ParseError(i, std::string("unexpected character '") + c + "'");
  }
  out.push_back(Token{Tok::End, in.size(), {}});
  return out;
}

unsigned parse_small_uint(const Token& tok) {
  if (tok.text.size() > 6) {
    throw ParseError(tok.offset, "number too large for an exponent or index");
  }
  unsigned value = 0;
  for (char c : tok.text) value = value * 10 + static_cast<unsigned>(c - '0');
  return value;
}

// Evaluating parser. Values stay scalar as long as possible so that scalar
// multiplication and the pure-coefficient grammar need no generator count;
// the first word forces an element.
class Parser {
 public:
  Parser(const Context* ctx, std::string_view text)
      : ctx_(ctx), tokens_(lex(text)) {}

  TensorElement element() {
    Value v = expr();
    expect(Tok::End);
    return to_element(std::move(v));
  }

  Coefficient coefficient() {
    Value v = expr();
    expect(Tok::End);
    if (!v.scalar()) {
      throw ParseError(0, "expected a scalar, found a word expression");
    }
    return v.coeff;
  }

 private:
  struct Value {
    std::optional<TensorElement> elem;
    Coefficient coeff;

    bool scalar() const { return !elem.has_value(); }
  };

  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  Token expect(Tok kind) {
    if (peek().kind != kind) {
      throw ParseError(peek().offset,
                       std::string("expected ") + tok_name(kind) +
                           " but found " + tok_name(peek().kind));
    }
    return advance();
  }

  TensorElement to_element(Value v) {
    if (!v.scalar()) return *std::move(v.elem);
    if (ctx_ == nullptr) {
      throw ParseError(0, "scalar-only input expected here");
    }
    return TensorElement::scalar(ctx_->vars(), v.coeff);
  }

  // Rejects operands with a scalar part and moves to the length >= 1 space.
  TensorElement to_operand(Value v, std::size_t at, const char* what) {
    if (v.scalar()) {
      throw ParseError(at, std::string(what) +
                               " needs operands in the length >= 1 word "
                               "space, found a scalar");
    }
    if (!v.elem->coeff_of(TensorWord::empty()).is_zero()) {
      throw ParseError(at, std::string(what) +
                               " needs operands in the length >= 1 word "
                               "space, found a scalar term");
    }
    return v.elem->as_lambda();
  }

  Value add(Value lhs, Value rhs, bool subtract) {
    if (lhs.scalar() && rhs.scalar()) {
      if (subtract) {
        lhs.coeff -= rhs.coeff;
      } else {
        lhs.coeff += rhs.coeff;
      }
      return lhs;
    }
    TensorElement out = to_element(std::move(lhs));
    if (subtract) {
      out -= to_element(std::move(rhs));
    } else {
      out += to_element(std::move(rhs));
    }
    return Value{std::move(out), Coefficient()};
  }

  Value expr() {
    const bool negate = accept(Tok::Minus);
    Value out = product();
    if (negate) {
      if (out.scalar()) {
        out.coeff = -out.coeff;
      } else {
        out.elem = -*out.elem;
      }
    }
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool subtract = advance().kind == Tok::Minus;
      out = add(std::move(out), product(), subtract);
    }
    return out;
  }

  Value product() {
    Value out = scaled();
    while (peek().kind == Tok::Hash || peek().kind == Tok::Diamond) {
      const Token op = advance();
      Value rhs = scaled();
      if (op.kind == Tok::Hash) {
        out = Value{shuffle(*ctx_, to_element(std::move(out)).as_plus(),
                            to_element(std::move(rhs)).as_plus()),
                    Coefficient()};
      } else {
        out = Value{diamond(*ctx_,
                            to_operand(std::move(out), op.offset, "'<>'"),
                            to_operand(std::move(rhs), op.offset, "'<>'"))
                        .as_plus(),
                    Coefficient()};
      }
    }
    return out;
  }

  Value scaled() {
    Value out = primary();
    while (peek().kind == Tok::Star) {
      const Token op = advance();
      Value rhs = primary();
      if (rhs.scalar()) {
        if (out.scalar()) {
          out.coeff *= rhs.coeff;
        } else {
          out.elem = out.elem->scaled(rhs.coeff);
        }
      } else if (out.scalar()) {
        out = Value{rhs.elem->scaled(out.coeff), Coefficient()};
      } else {
        throw ParseError(op.offset,
                         "'*' multiplies by a scalar; use '#' for the "
                         "shuffle product or '<>' for the diamond product");
      }
    }
    return out;
  }

  // L ('^' INT)?; the caller has already consumed the L token.
  Coefficient lambda_power() {
    unsigned power = 1;
    if (accept(Tok::Caret)) power = parse_small_uint(expect(Tok::Number));
    return Coefficient::monomial(power, Rational(1));
  }

  Value primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Number: {
        advance();
        Rational value{Integer(std::string(tok.text))};
        if (accept(Tok::Slash)) {
          const Token den = expect(Tok::Number);
          const Integer d{std::string(den.text)};
          if (d == 0) throw ParseError(den.offset, "division by zero");
          value = make_rational(boost::multiprecision::numerator(value), d);
        }
        Coefficient c{value};
        if (accept(Tok::Lambda)) c *= lambda_power();
        return Value{std::nullopt, std::move(c)};
      }
      case Tok::Lambda:
        advance();
        return Value{std::nullopt, lambda_power()};
      case Tok::LBracket:
        return word();
      case Tok::Op: {
        advance();
        require_context(tok.offset);
        expect(Tok::LParen);
        Value inner = expr();
        expect(Tok::RParen);
        return Value{
            right_shift(*ctx_, to_operand(std::move(inner), tok.offset, "'P'"))
                .as_plus(),
            Coefficient()};
      }
      case Tok::LParen: {
        advance();
        Value inner = expr();
        expect(Tok::RParen);
        if (peek().kind == Tok::Lambda) {
          if (!inner.scalar()) {
            throw ParseError(peek().offset,
                             "an L power can only follow a scalar");
          }
          advance();
          inner.coeff *= lambda_power();
        }
        return inner;
      }
      default:
        throw ParseError(tok.offset,
                         std::string("expected a number, 'L', a word, 'P', "
                                     "or '(' but found ") +
                             tok_name(tok.kind));
    }
  }

  void require_context(std::size_t at) {
    if (ctx_ == nullptr) {
      throw ParseError(at, "words are not allowed in a scalar");
    }
  }

  // '[' letter (',' letter)* ']'
  Value word() {
    const Token open = expect(Tok::LBracket);
    require_context(open.offset);
    std::vector<BaseMonomial> letters;
    do {
      letters.push_back(letter());
    } while (accept(Tok::Comma));
    expect(Tok::RBracket);
    return Value{TensorElement::from_word(Space::Plus, ctx_->vars(),
                                          TensorWord(std::move(letters))),
                 Coefficient()};
  }

  // '1' or a '*'-joined run of generator powers.
  BaseMonomial letter() {
    if (peek().kind == Tok::Number) {
      const Token tok = advance();
      if (tok.text != "1") {
        throw ParseError(tok.offset, "a word letter is '1' or a monomial");
      }
      return BaseMonomial(ctx_->vars());
    }
    std::vector<unsigned> exponents(ctx_->vars(), 0u);
    do {
      const Token name = expect(Tok::Name);
      const unsigned index = parse_small_uint(name);
      if (index == 0 || index > ctx_->vars()) {
        throw ParseError(name.offset,
                         "unknown generator x" + std::string(name.text) +
                             ": generators are x1..x" +
                             std::to_string(ctx_->vars()));
      }
      unsigned power = 1;
      if (accept(Tok::Caret)) power = parse_small_uint(expect(Tok::Number));
      exponents[index - 1] += power;
    } while (accept(Tok::Star));
    return BaseMonomial::from_exponents(std::move(exponents));
  }

  const Context* ctx_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---- JSON form -------------------------------------------------------------

bool looks_like_json(std::string_view in) {
  std::size_t i = 0;
  while (i < in.size() && std::isspace(static_cast<unsigned char>(in[i])))
    ++i;
  if (i >= in.size() || in[i] != '[') return false;
  ++i;
  while (i < in.size() && std::isspace(static_cast<unsigned char>(in[i])))
    ++i;
  return i < in.size() && (in[i] == '{' || in[i] == ']');
}

TensorWord word_from_json(std::size_t vars, const nlohmann::json& letters) {
  if (!letters.is_array()) {
    throw ParseError(0, "\"word\" must be an array of letters");
  }
  std::vector<BaseMonomial> out;
  out.reserve(letters.size());
  for (const auto& letter : letters) {
    if (!letter.is_array() || letter.size() != vars) {
      throw ParseError(0, "each letter must list " + std::to_string(vars) +
                              " exponents");
    }
    std::vector<unsigned> exponents;
    exponents.reserve(vars);
    for (const auto& e : letter) {
      if (!e.is_number_integer() || e.get<long long>() < 0) {
        throw ParseError(0, "exponents must be nonnegative integers");
      }
      exponents.push_back(e.get<unsigned>());
    }
    out.push_back(BaseMonomial::from_exponents(std::move(exponents)));
  }
  return TensorWord(std::move(out));
}

TensorElement element_from_json(const Context& ctx, std::string_view input) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(input);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(at, "invalid JSON");
  }
  if (!doc.is_array()) {
    throw ParseError(0, "a JSON element is an array of terms");
  }
  TensorElement out(Space::Plus, ctx.vars());
  for (const auto& term : doc) {
    if (!term.is_object() || !term.contains("coeff") ||
        !term.contains("word") || !term["coeff"].is_string()) {
      throw ParseError(0,
                       "each term needs a \"coeff\" string and a \"word\"");
    }
    const Coefficient c =
        parse_coefficient(term["coeff"].get<std::string>());
    out.add_term(word_from_json(ctx.vars(), term["word"]), c);
  }
  return out;
}

}  // namespace

TensorElement parse_element(const Context& ctx, std::string_view input) {
  if (looks_like_json(input)) return element_from_json(ctx, input);
  return Parser(&ctx, input).element();
}

Coefficient parse_coefficient(std::string_view input) {
  return Parser(nullptr, input).coefficient();
}

}  // namespace tdshuffle
