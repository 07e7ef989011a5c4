#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace satkit::dsl {

enum class TokenKind { Identifier, Integer, Symbol, End };

struct Token {
  TokenKind kind;
  std::string text;  // symbols: one of { } ( ) [ ] ; : , . = + - ->
  std::size_t line;
  std::size_t column;
};

// '#' starts a comment running to the end of the line. Throws ParseError
// (SyntaxError) at the first character that starts no token.
std::vector<Token> tokenize(std::string_view text);

std::string describe(const Token& t);

}  // namespace satkit::dsl
