#include "satkit/dsl/lexer.hpp"

#include <cctype>

#include "satkit/error.hpp"

namespace satkit::dsl {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t start = i, l = line, col = column;
    if (ident_start(c)) {
      while (i < text.size() && ident_char(text[i])) advance(1);
      out.push_back({TokenKind::Identifier, std::string(text.substr(start, i - start)), l, col});
    } else if (digit(c)) {
      while (i < text.size() && digit(text[i])) advance(1);
      if (i < text.size() && ident_start(text[i]))
        throw ParseError("SyntaxError", line, column, "identifiers cannot start with a digit");
      out.push_back({TokenKind::Integer, std::string(text.substr(start, i - start)), l, col});
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      advance(2);
      out.push_back({TokenKind::Symbol, "->", l, col});
    } else if (std::string_view("{}()[];:,.=+-").find(c) != std::string_view::npos) {
      advance(1);
      out.push_back({TokenKind::Symbol, std::string(1, c), l, col});
    } else {
      throw ParseError("SyntaxError", l, col, "unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({TokenKind::End, "", line, column});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::End: return "end of file";
    case TokenKind::Identifier: return "identifier '" + t.text + "'";
    case TokenKind::Integer: return "integer " + t.text;
    case TokenKind::Symbol: return "'" + t.text + "'";
  }
  return "";
}

}  // namespace satkit::dsl
