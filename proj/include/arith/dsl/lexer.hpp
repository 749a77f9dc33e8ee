#pragma once

#include "arith/dsl/ast.hpp"

#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arith::dsl {

enum class Tok {
  Integer,
  Ident,
  // keywords
  Forall,
  Exists,
  In,
  And,
  Or,
  Not,
  Div,
  Mod,
  // punctuation
  Plus,
  Minus,
  Star,
  Caret,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  DotDot,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  Bar,
  Tilde,
  Wedge,   // /\.
  Vee,     // \/.
  Arrow,   // ->
  BiArrow, // <->
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string_view text;
  Span span;
};

inline std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  if (t.kind == Tok::Integer) return "integer '" + std::string(t.text) + "'";
  if (t.kind == Tok::Ident) return "identifier '" + std::string(t.text) + "'";
  return "'" + std::string(t.text) + "'";
}

// Splits text into tokens; the result always ends with an End token.
inline std::vector<Token> tokenize(std::string_view text) {
  static constexpr std::array<std::pair<std::string_view, Tok>, 8> keywords{{
      {"forall", Tok::Forall},
      {"exists", Tok::Exists},
      {"in", Tok::In},
      {"and", Tok::And},
      {"or", Tok::Or},
      {"not", Tok::Not},
      {"div", Tok::Div},
      {"mod", Tok::Mod},
  }};
  // Longest symbols first.
  static constexpr std::array<std::pair<std::string_view, Tok>, 22> symbols{{
      {"<->", Tok::BiArrow}, {"->", Tok::Arrow}, {"<=", Tok::Le},     {">=", Tok::Ge},       {"<>", Tok::Ne},
      {"..", Tok::DotDot},   {"/\\", Tok::Wedge}, {"\\/", Tok::Vee},  {"+", Tok::Plus},      {"-", Tok::Minus},
      {"*", Tok::Star},      {"^", Tok::Caret},   {"(", Tok::LParen}, {")", Tok::RParen},    {"[", Tok::LBracket},
      {"]", Tok::RBracket},  {",", Tok::Comma},   {"=", Tok::Eq},     {"<", Tok::Lt},        {">", Tok::Gt},
      {"|", Tok::Bar},       {"~", Tok::Tilde},
  }};

  std::vector<Token> tokens;
  std::size_t i = 0;
  int line = 1;
  int column = 1;
  const auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };

  while (true) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) advance(1);
    Span span{i, 0, line, column};
    if (i == text.size()) {
      tokens.push_back({Tok::End, text.substr(i, 0), span});
      return tokens;
    }
    const auto c = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    Tok kind = Tok::End;
    if (std::isdigit(c)) {
      while (i + len < text.size() && std::isdigit(static_cast<unsigned char>(text[i + len]))) ++len;
      if (c == '0' && len > 1)
        throw ParseError(ErrorKind::Lexical, span, "integer '" + std::string(text.substr(i, len)) + "' has a leading zero");
      kind = Tok::Integer;
    } else if (std::isalpha(c) || c == '_') {
      while (i + len < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i + len])) || text[i + len] == '_'))
        ++len;
      kind = Tok::Ident;
      for (const auto& [word, k] : keywords)
        if (text.substr(i, len) == word) kind = k;
    } else {
      for (const auto& [sym, k] : symbols) {
        if (text.substr(i, sym.size()) == sym) {
          len = sym.size();
          kind = k;
          break;
        }
      }
      if (len == 0) {
        span.length = 1;
        std::string shown = c < 0x80 ? std::string(1, text[i]) : "non-ASCII byte";
        std::string hint = c == '/' ? " (use 'div' for division)" : c == '%' ? " (use 'mod' for remainder)" : "";
        throw ParseError(ErrorKind::Lexical, span, "unexpected character '" + shown + "'" + hint);
      }
    }
    span.length = len;
    tokens.push_back({kind, text.substr(i, len), span});
    advance(len);
  }
}

}  // namespace arith::dsl
