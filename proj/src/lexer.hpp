#pragma once

#include <string>
#include <vector>

#include "pomega/errors.hpp"

namespace pomega::detail {

struct Token {
  enum class Kind { Ident, Number, Sym, End };
  Kind kind;
  std::string text;
  int line;
  int col;
};

/// Tokenizer shared by the three formula parsers. Multi-character symbols are
/// matched longest-first.
class Lexer {
public:
  explicit Lexer(const std::string& input) {
    static const char* symbols[] = {"<->", "<=>", "->", "=>", "&&", "||", "!=",
                                    "<=",  "==",  "~",  "&",  "|",  "(",  ")",
                                    ".",   ",",   "=",  "!"};
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
      for (std::size_t k = 0; k < n; ++k) {
        if (input[i + k] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      i += n;
    };
    while (i < input.size()) {
      const char c = input[i];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance(1);
        continue;
      }
      if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < input.size() &&
               (isalnum(static_cast<unsigned char>(input[j])) || input[j] == '_'))
          ++j;
        tokens_.push_back({Token::Kind::Ident, input.substr(i, j - i), line, col});
        advance(j - i);
        continue;
      }
      if (isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < input.size() && isdigit(static_cast<unsigned char>(input[j]))) ++j;
        tokens_.push_back({Token::Kind::Number, input.substr(i, j - i), line, col});
        advance(j - i);
        continue;
      }
      bool matched = false;
      for (const char* sym : symbols) {
        const std::size_t len = std::char_traits<char>::length(sym);
        if (input.compare(i, len, sym) == 0) {
          tokens_.push_back({Token::Kind::Sym, sym, line, col});
          advance(len);
          matched = true;
          break;
        }
      }
      if (!matched)
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    tokens_.push_back({Token::Kind::End, "", line, col});
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  std::size_t save() const { return pos_; }
  void restore(std::size_t p) { pos_ = p; }

  bool at_sym(const std::string& s) const {
    return peek().kind == Token::Kind::Sym && peek().text == s;
  }
  bool eat_sym(const std::string& s) {
    if (!at_sym(s)) return false;
    next();
    return true;
  }
  void expect_sym(const std::string& s) {
    if (!eat_sym(s))
      throw ParseError("expected '" + s + "', found '" + peek().text + "'", peek().line,
                       peek().col);
  }
  void expect_end() {
    if (peek().kind != Token::Kind::End)
      throw ParseError("unexpected trailing input '" + peek().text + "'", peek().line,
                       peek().col);
  }

private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

} // namespace pomega::detail
