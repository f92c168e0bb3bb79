#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "error.hpp"

namespace seifert_lens::detail {

// Whitespace-insensitive cursor over a single input string.
class Cursor {
 public:
  explicit Cursor(std::string_view input) : input_(input) {}

  void skip_ws() {
    while (pos_ < input_.size() &&
           std::isspace(static_cast<unsigned char>(input_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= input_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < input_.size() ? input_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool consume(std::string_view token) {
    skip_ws();
    if (input_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("'") + c + "'");
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < input_.size() && (input_[pos_] == '-' || input_[pos_] == '+')) ++pos_;
    while (pos_ < input_.size() && input_[pos_] == ' ') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < input_.size() &&
           std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
      ++pos_;
    }
    if (digits == pos_) {
      pos_ = start;
      fail("integer");
    }
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(input_.data() + digits, input_.data() + pos_, value);
    if (ec != std::errc{}) {
      pos_ = digits;
      fail("integer in 64-bit range");
    }
    return input_[start] == '-' ? -value : value;
  }

  bool at_identifier() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string identifier() {
    if (!at_identifier()) fail("identifier");
    std::size_t start = pos_;
    while (pos_ < input_.size() &&
           (std::isalnum(static_cast<unsigned char>(input_[pos_])) ||
            input_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(input_.substr(start, pos_ - start));
  }

  void expect_end() {
    if (!at_end()) fail("end of input");
  }

  [[noreturn]] void fail(std::string const& expected) {
    skip_ws();
    throw ParseError(pos_, expected, std::string(input_));
  }

  std::size_t position() const { return pos_; }
  void seek(std::size_t pos) { pos_ = pos; }

 private:
  std::string_view input_;
  std::size_t pos_ = 0;
};

}  // namespace seifert_lens::detail
