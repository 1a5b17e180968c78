#include "yt/error.hpp"

namespace yt {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RowOrderViolation: return "RowOrderViolation";
    case ErrorKind::ColumnOrderViolation: return "ColumnOrderViolation";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotATableau: return "NotATableau";
    case ErrorKind::OffsetTooSmall: return "OffsetTooSmall";
    case ErrorKind::OrderViolation: return "OrderViolation";
    case ErrorKind::UnderflowBelowOne: return "UnderflowBelowOne";
    case ErrorKind::SkewInputNotSupported: return "SkewInputNotSupported";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::NotLittlewoodRichardson: return "NotLittlewoodRichardson";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::NotRectangular: return "NotRectangular";
    case ErrorKind::MapMismatch: return "MapMismatch";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace yt
