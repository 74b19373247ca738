#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "knotcalc/errors.hpp"
#include "knotcalc/integer.hpp"

namespace knotcalc::detail {

// Byte cursor shared by the small hand-written readers. Whitespace is
// insignificant everywhere it is used.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  std::size_t offset() const noexcept { return pos_; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool consume(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  // Unsigned decimal digits, no leading sign.
  Int read_unsigned() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  // Optional leading '-' or '+'.
  Int read_signed() {
    bool negative = false;
    if (consume('-')) {
      negative = true;
    } else {
      consume('+');
    }
    Int v = read_unsigned();
    return negative ? Int(-v) : v;
  }

  std::int64_t read_int64() {
    std::size_t start = offset();
    Int v = read_signed();
    if (!v.fits_slong_p()) throw ParseError(start, "integer out of range");
    return v.get_si();
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace knotcalc::detail
