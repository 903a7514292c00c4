#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stallings {

// Base for every error raised by the library. Each subclass corresponds to
// one documented failure mode of a public operation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class IllegalMove : public Error {
 public:
  IllegalMove(std::size_t move_index, std::size_t position,
              const std::string& reason)
      : Error("illegal move #" + std::to_string(move_index) + " at position " +
              std::to_string(position) + ": " + reason),
        move_index_(move_index),
        position_(position),
        reason_(reason) {}
  std::size_t move_index() const noexcept { return move_index_; }
  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t move_index_;
  std::size_t position_;
  std::string reason_;
};

#define STALLINGS_SIMPLE_ERROR(Name)      \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  };

STALLINGS_SIMPLE_ERROR(ContainsS)
STALLINGS_SIMPLE_ERROR(NotEqualInFxF)
STALLINGS_SIMPLE_ERROR(EmptyInterval)
STALLINGS_SIMPLE_ERROR(NotDyadicCover)
STALLINGS_SIMPLE_ERROR(NotAdjacent)
STALLINGS_SIMPLE_ERROR(NotBalanced)
STALLINGS_SIMPLE_ERROR(BadPartition)
STALLINGS_SIMPLE_ERROR(PositionMismatch)
STALLINGS_SIMPLE_ERROR(IndexOutOfRange)
STALLINGS_SIMPLE_ERROR(ShapeMismatch)
STALLINGS_SIMPLE_ERROR(BadXY)
STALLINGS_SIMPLE_ERROR(TooShort)
STALLINGS_SIMPLE_ERROR(NotNullHomotopic)
STALLINGS_SIMPLE_ERROR(BadLength)
STALLINGS_SIMPLE_ERROR(TraceFormatError)

#undef STALLINGS_SIMPLE_ERROR

// A measured cost exceeded the bound its construction guarantees. This is an
// internal failure, never a user error.
class BoundViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace stallings
