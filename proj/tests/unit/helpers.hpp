#pragma once

#include <gtest/gtest.h>

#include <ostream>

#include "yt/circuits.hpp"
#include "yt/error.hpp"
#include "yt/io.hpp"
#include "yt/tableau.hpp"

namespace yt {

inline void PrintTo(const Tableau& t, std::ostream* os) { *os << to_json(t); }
inline void PrintTo(const IntMatrix& m, std::ostream* os) { *os << to_json(m); }
inline void PrintTo(const PlaneFunction& p, std::ostream* os) { *os << to_json(p); }
inline void PrintTo(const Value& v, std::ostream* os) { *os << describe(v); }

}  // namespace yt

namespace yt::test {

// Skew rows list only the cells outside the inner shape.
inline Tableau T(const Partition& outer, const Partition& inner, const Rows& cells, int k = -1) {
  return Tableau::from_rows(outer, inner, cells, k);
}
inline Tableau T(const Partition& outer, const Rows& cells, int k = -1) { return T(outer, {}, cells, k); }

// [[.,1],[2]]
inline Tableau a0() { return T({2, 1}, {1}, {{1}, {2}}); }

template <class F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no yt::Error thrown";
  return ErrorKind::ParseError;
}

}  // namespace yt::test
