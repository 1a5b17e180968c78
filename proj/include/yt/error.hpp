#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace yt {

enum class ErrorKind {
  RowOrderViolation,
  ColumnOrderViolation,
  ShapeMismatch,
  NotATableau,
  OffsetTooSmall,
  OrderViolation,
  UnderflowBelowOne,
  SkewInputNotSupported,
  IndexOutOfRange,
  NotSquare,
  NegativeEntry,
  NotLittlewoodRichardson,
  NotInImage,
  NotRectangular,
  MapMismatch,
  Unreachable,
  TypeMismatch,
  Overflow,
  ParseError,
};

const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);
  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& detail);

// Checked 64-bit arithmetic: overflow raises ErrorKind::Overflow.
inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "addition");
  return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "subtraction");
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "multiplication");
  return r;
}

}  // namespace yt
