#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seifert_lens {

/// Raised by every text parser in the library. The offset is a byte offset
/// into the input string.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected, std::string const& input)
      : std::runtime_error(format(offset, expected, input)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  std::string const& expected() const noexcept { return expected_; }

 private:
  static std::string format(std::size_t offset, std::string const& expected,
                            std::string const& input) {
    std::string msg = "parse error at offset " + std::to_string(offset) +
                      ": expected " + expected;
    if (offset < input.size()) {
      msg += ", found '" + std::string(1, input[offset]) + "'";
    } else {
      msg += ", found end of input";
    }
    return msg;
  }

  std::size_t offset_;
  std::string expected_;
};

/// Coset enumeration hit its live-coset limit where a definite answer was required.
class CosetLimitExceeded : public std::runtime_error {
 public:
  explicit CosetLimitExceeded(std::size_t limit)
      : std::runtime_error("coset enumeration exceeded limit of " +
                           std::to_string(limit) + " live cosets"),
        limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

/// A self-check inside a certificate failed. Never expected; indicates a bug.
class CertificateFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnsupportedBase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace seifert_lens
