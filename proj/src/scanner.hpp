#pragma once

// Character scanner shared by the word and presentation parsers.

#include "fpg/errors.hpp"
#include "fpg/word.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

namespace fpg::detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  // Skips blanks and `#` comment lines. A `#` only opens a comment when it is
  // the first non-blank character of its line; elsewhere it belongs to a
  // copy-suffixed identifier.
  void skip_space() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '#' && line_is_blank_so_far()) {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char ch) {
    if (peek() == ch) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) {
      fail(std::string("expected '") + ch + "'" + found());
    }
  }

  bool at_identifier() {
    return std::isalpha(static_cast<unsigned char>(peek())) != 0;
  }

  std::string identifier() {
    if (!at_identifier()) fail("expected generator name" + found());
    std::size_t start = pos_;
    auto is_body = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    while (pos_ < text_.size() && is_body(text_[pos_])) advance();
    if (pos_ + 1 < text_.size() && text_[pos_] == '#' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      advance();
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      }
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  BigInt integer() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      advance();
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
    if (start == pos_) fail("expected integer" + found());
    BigInt value(std::string(text_.substr(start, pos_ - start)));
    return negative ? BigInt(-value) : value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, column_);
  }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  bool line_is_blank_so_far() const {
    for (std::size_t i = pos_; i > 0; --i) {
      char c = text_[i - 1];
      if (c == '\n') return true;
      if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
  }

  std::string found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// word := factor ("*"? factor)*
// factor := ident ("^" integer)? | "(" word ")" ("^" integer)? | "1"
Word parse_word(Scanner& in);

}  // namespace fpg::detail
