#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "ftl/source.hpp"

namespace ftl {

enum class TokenKind {
  Word,
  Variable,
  Symbol,
  Period,
  Comma,
  BlockKeyword,
};

inline const char* to_string(TokenKind k) {
  switch (k) {
    case TokenKind::Word: return "word";
    case TokenKind::Variable: return "variable";
    case TokenKind::Symbol: return "symbol";
    case TokenKind::Period: return "period";
    case TokenKind::Comma: return "comma";
    case TokenKind::BlockKeyword: return "block-keyword";
  }
  return "?";
}

/// ASCII lowercase fold. Word comparison in the grammar is case-insensitive
/// (sentence-initial words are capitalized); variables stay case-sensitive.
inline std::string fold(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

struct Token {
  TokenKind kind;
  std::string text;
  SourcePos pos;
  // whitespace and comments between the previous token and this one
  std::string leading;

  bool is_word(const char* w) const { return kind == TokenKind::Word && fold(text) == w; }
  bool is_keyword(const char* w) const { return kind == TokenKind::BlockKeyword && text == w; }
  bool is_symbol(const char* s) const { return kind == TokenKind::Symbol && text == s; }
};

/// Token list plus the trailing gap after the last token, so that
/// `gap0 text0 gap1 text1 ... trailing` reproduces the source byte for byte.
struct TokenStream {
  std::vector<Token> tokens;
  std::string trailing;

  std::string reconstruct() const {
    std::string out;
    for (const Token& t : tokens) {
      out += t.leading;
      out += t.text;
    }
    out += trailing;
    return out;
  }
};

namespace detail {

inline bool is_word_char(char c) { return std::isalpha(static_cast<unsigned char>(c)); }

inline bool is_symbol_char(char c) {
  switch (c) {
    case '!': case '=': case '<': case '>': case '+': case '-':
    case '*': case '/': case '|': case '&': case '^': case '~':
    case '%': case '$': case '@':
      return true;
    default:
      return false;
  }
}

inline bool is_block_keyword(const std::string& w) {
  return w == "Signature" || w == "Definition" || w == "Axiom" || w == "Theorem" ||
         w == "Lemma" || w == "Proposition" || w == "Proof" || w == "Case" || w == "end";
}

}  // namespace detail

/// Splits a source text into tokens. Lines whose first non-blank character is
/// `#` are comments: skipped, but lines and columns keep counting.
///
/// A single letter other than the article "a"/"A", optionally followed by
/// digits, is a variable; longer alphabetic runs (internal hyphens allowed)
/// are words. Reserved block words keep their own token kind.
inline TokenStream tokenize(const std::string& source, const std::string& file = "") {
  TokenStream out;
  size_t i = 0;
  const size_t n = source.size();
  int line = 1, col = 1;
  std::string gap;
  bool at_line_start = true;

  auto advance = [&](size_t count) {
    for (size_t k = 0; k < count; ++k, ++i) {
      if (source[i] == '\n') {
        ++line;
        col = 1;
        at_line_start = true;
      } else {
        ++col;
        if (!std::isspace(static_cast<unsigned char>(source[i]))) at_line_start = false;
      }
    }
  };

  while (i < n) {
    char c = source[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      gap += c;
      advance(1);
      continue;
    }
    if (c == '#' && at_line_start) {
      size_t j = i;
      while (j < n && source[j] != '\n') ++j;
      gap.append(source, i, j - i);
      advance(j - i);
      continue;
    }

    Token t;
    t.pos = {line, col};
    t.leading = std::move(gap);
    gap.clear();

    if (detail::is_word_char(c)) {
      size_t j = i + 1;
      while (j < n && (detail::is_word_char(source[j]) ||
                       (source[j] == '-' && j + 1 < n && detail::is_word_char(source[j + 1]))))
        ++j;
      if (j == i + 1) {
        // single letter: maybe a variable, maybe trailing digits follow
        size_t d = j;
        while (d < n && std::isdigit(static_cast<unsigned char>(source[d]))) ++d;
        std::string text = source.substr(i, d - i);
        if (text == "a" || text == "A") {
          t.kind = TokenKind::Word;
          t.text = text;
        } else {
          t.kind = TokenKind::Variable;
          t.text = text;
        }
        advance(t.text.size());
      } else {
        t.text = source.substr(i, j - i);
        t.kind = detail::is_block_keyword(t.text) ? TokenKind::BlockKeyword : TokenKind::Word;
        advance(t.text.size());
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      throw IllegalCharacterError({file, {line, col}, std::string("stray digit '") + c + "'"});
    } else if (c == '.') {
      t.kind = TokenKind::Period;
      t.text = ".";
      advance(1);
    } else if (c == ',') {
      t.kind = TokenKind::Comma;
      t.text = ",";
      advance(1);
    } else if (detail::is_symbol_char(c)) {
      size_t j = i + 1;
      while (j < n && detail::is_symbol_char(source[j])) ++j;
      t.kind = TokenKind::Symbol;
      t.text = source.substr(i, j - i);
      advance(t.text.size());
    } else {
      throw IllegalCharacterError(
          {file, {line, col}, std::string("illegal character '") + c + "'"});
    }
    out.tokens.push_back(std::move(t));
  }
  out.trailing = std::move(gap);
  return out;
}

}  // namespace ftl
