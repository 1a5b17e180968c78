#pragma once

#include <string>
#include <variant>
#include <vector>

#include "yt/error.hpp"
#include "yt/matrix.hpp"
#include "yt/tableau.hpp"

namespace yt {

// Text blocks:
//
//   lambda: 2 1        matrix: 2        plane: 2 1
//   mu: 1              1 0              0 1
//   k: 3               0 1              2
//   . 1
//   2
//
// `mu:` is omitted when empty and `k:` when it equals the largest entry.
// Rows with no cells are empty lines. Blank lines between blocks are ignored.
// JSON mirrors: {"lambda":[...],"mu":[...],"rows":[[null,1],[2]],"k":3},
// {"matrix":[[1,0],[0,1]]}, {"shape":[2,1],"values":[[0,1],[2]]}.

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

using Item = std::variant<Tableau, IntMatrix, PlaneFunction>;

enum class Format { Text, Json };

std::vector<Item> parse_items(const std::string& src, Format f);
std::string emit_items(const std::vector<Item>& items, Format f);

std::string to_text(const Tableau& t);
std::string to_text(const IntMatrix& m);
std::string to_text(const PlaneFunction& p);
std::string to_json(const Tableau& t);
std::string to_json(const IntMatrix& m);
std::string to_json(const PlaneFunction& p);

Tableau parse_tableau(const std::string& src, Format f = Format::Text);
IntMatrix parse_matrix(const std::string& src, Format f = Format::Text);
PlaneFunction parse_plane(const std::string& src, Format f = Format::Text);

const char* item_kind(const Item& it);

}  // namespace yt
