#ifndef TDSHUFFLE_PARSER_HPP
#define TDSHUFFLE_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tdshuffle/context.hpp"

namespace tdshuffle {

// Diagnostic for malformed input: byte offset into the original text plus a
// message naming what was expected. Never signals an internal failure.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("parse error at byte " + std::to_string(offset) +
                           ": " + message),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Parses an element expression and evaluates it into the full word space.
//
// Text grammar (whitespace insensitive):
//   expr    := '-'? product (('+' | '-') product)*
//   product := scaled (('#' | '<>') scaled)*    shuffle / diamond
//   scaled  := primary ('*' primary)*           scalar multiplication
//   primary := NUMBER lpow? | lpow | word | 'P' '(' expr ')'
//            | '(' expr ')' lpow?
//   lpow    := 'L' ('^' INT)?
//   NUMBER  := INT ('/' INT)?
//   word    := '[' letter (',' letter)* ']'
//   letter  := '1' | gen ('*' gen)*
//   gen     := 'x' INT ('^' INT)?
// The Unicode names of the shuffle and diamond products are accepted as
// aliases for '#' and '<>'. A number or parenthesized scalar directly
// followed by an L power multiplies it. '*' requires a scalar on at least
// one side; '#' accepts anything; '<>' and 'P' reject operands with a
// scalar term.
//
// JSON input (detected by '[' followed by '{' or ']') is the render schema:
// an array of {"coeff": string, "word": [[exponents...], ...]} objects.
TensorElement parse_element(const Context& ctx, std::string_view input);

// Parses the scalar fragment of the grammar (no words or word operators).
Coefficient parse_coefficient(std::string_view input);

}  // namespace tdshuffle

#endif
