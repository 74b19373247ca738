#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotcalc {

/// Malformed text. `offset()` is the byte position where the reader gave up.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Well-formed input that violates a mathematical constraint, or an
/// operation called outside its precondition.
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A derived identity failed to hold. Never expected; signals a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace knotcalc
