#include "yt/io.hpp"

#include <charconv>
#include <sstream>

#include "json.hpp"

namespace yt {

using nlohmann::json;

ParseError::ParseError(int line, int column, const std::string& msg)
    : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int column;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> split_lines(const std::string& src) {
  std::vector<Line> out;
  std::istringstream in(src);
  std::string s;
  int n = 0;
  while (std::getline(in, s)) {
    ++n;
    if (!s.empty() && s.back() == '\r') s.pop_back();
    Line l{n, {}};
    size_t p = 0;
    while (p < s.size()) {
      if (s[p] == ' ' || s[p] == '\t') {
        ++p;
        continue;
      }
      size_t q = p;
      while (q < s.size() && s[q] != ' ' && s[q] != '\t') ++q;
      l.tokens.push_back({s.substr(p, q - p), static_cast<int>(p) + 1});
      p = q;
    }
    out.push_back(std::move(l));
  }
  return out;
}

int64_t to_int(const Line& l, const Token& t) {
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ParseError(l.number, t.column, "expected an integer, got '" + t.text + "'");
  return v;
}

std::vector<int64_t> ints_after_key(const Line& l) {
  std::vector<int64_t> v;
  for (size_t t = 1; t < l.tokens.size(); ++t) v.push_back(to_int(l, l.tokens[t]));
  return v;
}

class TextReader {
 public:
  explicit TextReader(const std::string& src) : lines_(split_lines(src)) {}

  std::vector<Item> all() {
    std::vector<Item> out;
    for (;;) {
      while (pos_ < lines_.size() && lines_[pos_].tokens.empty()) ++pos_;
      if (pos_ == lines_.size()) return out;
      const Line& h = lines_[pos_];
      const std::string& key = h.tokens[0].text;
      if (key == "lambda:") {
        out.emplace_back(tableau());
      } else if (key == "matrix:") {
        out.emplace_back(matrix());
      } else if (key == "plane:") {
        out.emplace_back(plane());
      } else {
        throw ParseError(h.number, h.tokens[0].column, "expected 'lambda:', 'matrix:' or 'plane:'");
      }
    }
  }

 private:
  bool has_key(const char* key) const {
    return pos_ < lines_.size() && !lines_[pos_].tokens.empty() && lines_[pos_].tokens[0].text == key;
  }

  const Line& next_row(int header_line) {
    if (pos_ == lines_.size()) throw ParseError(header_line, 1, "block ends before all rows were read");
    return lines_[pos_++];
  }

  Item tableau() {
    const Line& h = lines_[pos_++];
    Partition lam = ints_after_key(h), mu;
    int k = -1;
    if (has_key("mu:")) mu = ints_after_key(lines_[pos_++]);
    if (has_key("k:")) {
      const Line& l = lines_[pos_++];
      if (l.tokens.size() != 2) throw ParseError(l.number, 1, "'k:' takes one integer");
      k = static_cast<int>(to_int(l, l.tokens[1]));
    }
    size_t n = std::max(lam.size(), mu.size());
    Rows cells(n);
    for (size_t i = 0; i < n; ++i) {
      const Line& l = next_row(h.number);
      int64_t inner = part(mu, i), outer = part(lam, i);
      if (static_cast<int64_t>(l.tokens.size()) != outer)
        throw ParseError(l.number, 1, "row " + std::to_string(i + 1) + " has " + std::to_string(l.tokens.size()) +
                                          " cells, lambda needs " + std::to_string(outer));
      for (size_t t = 0; t < l.tokens.size(); ++t) {
        const Token& tok = l.tokens[t];
        bool dot = tok.text == ".";
        if (static_cast<int64_t>(t) < inner) {
          if (!dot) throw ParseError(l.number, tok.column, "expected '.' for an inner cell");
        } else {
          if (dot) throw ParseError(l.number, tok.column, "'.' outside the inner shape");
          cells[i].push_back(to_int(l, tok));
        }
      }
    }
    try {
      return Tableau::from_rows(lam, mu, cells, k);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ShapeMismatch && (!is_partition(lam) || !is_partition(mu) || !contains(lam, mu)))
        throw ParseError(h.number, 1, e.detail());
      throw;
    }
  }

  Item matrix() {
    const Line& h = lines_[pos_++];
    if (h.tokens.size() != 2) throw ParseError(h.number, 1, "'matrix:' takes one integer");
    int64_t k = to_int(h, h.tokens[1]);
    if (k < 0) throw ParseError(h.number, h.tokens[1].column, "negative dimension");
    std::vector<std::vector<int64_t>> rows;
    for (int64_t i = 0; i < k; ++i) {
      const Line& l = next_row(h.number);
      if (static_cast<int64_t>(l.tokens.size()) != k)
        throw ParseError(l.number, 1, "matrix row needs " + std::to_string(k) + " entries");
      std::vector<int64_t> r;
      for (const Token& t : l.tokens) r.push_back(to_int(l, t));
      rows.push_back(std::move(r));
    }
    return IntMatrix::from_rows(rows);
  }

  Item plane() {
    const Line& h = lines_[pos_++];
    PlaneFunction p{ints_after_key(h), {}};
    if (!is_partition(p.shape)) throw ParseError(h.number, 1, "shape is not a partition");
    for (int64_t len : p.shape) {
      const Line& l = next_row(h.number);
      if (static_cast<int64_t>(l.tokens.size()) != len)
        throw ParseError(l.number, 1, "row needs " + std::to_string(len) + " entries");
      std::vector<int64_t> r;
      for (const Token& t : l.tokens) r.push_back(to_int(l, t));
      p.values.push_back(std::move(r));
    }
    p.check();
    return p;
  }

  std::vector<Line> lines_;
  size_t pos_ = 0;
};

std::string join(const std::vector<int64_t>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string with_key(const char* key, const std::vector<int64_t>& v) {
  std::string s = key;
  if (!v.empty()) s += " " + join(v);
  return s + "\n";
}

json tableau_json(const Tableau& full) {
  Tableau t = full.trimmed();
  Partition lam = t.outer(), mu = trim(t.inner());
  Rows cells = t.cells();
  json rows = json::array();
  for (int i = 0; i < t.rows(); ++i) {
    json r = json::array();
    for (int64_t c = 0; c < part(mu, i); ++c) r.push_back(nullptr);
    for (int64_t x : cells[i]) r.push_back(x);
    rows.push_back(r);
  }
  json j = {{"lambda", lam}, {"rows", rows}};
  if (total(mu) > 0) j["mu"] = mu;
  if (t.alphabet() != t.max_entry()) j["k"] = t.alphabet();
  return j;
}

json matrix_json(const IntMatrix& m) { return {{"matrix", m.to_rows()}}; }

json plane_json(const PlaneFunction& p) { return {{"shape", p.shape}, {"values", p.values}}; }

// Position of a JSON value is not tracked by the library; errors in content
// report line 1 column 1 of the document and name the offending field.
[[noreturn]] void json_fail(const std::string& msg) { throw ParseError(1, 1, msg); }

std::vector<int64_t> int_array(const json& j, const char* what) {
  if (!j.is_array()) json_fail(std::string("'") + what + "' must be an array");
  std::vector<int64_t> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) json_fail(std::string("'") + what + "' must hold integers");
    v.push_back(x.get<int64_t>());
  }
  return v;
}

Item item_from_json(const json& j) {
  if (!j.is_object()) json_fail("expected an object");
  if (j.contains("lambda")) {
    Partition lam = int_array(j["lambda"], "lambda");
    Partition mu = j.contains("mu") ? int_array(j["mu"], "mu") : Partition{};
    if (!j.contains("rows") || !j["rows"].is_array()) json_fail("'rows' must be an array");
    Rows cells;
    size_t i = 0;
    for (const auto& r : j["rows"]) {
      if (!r.is_array()) json_fail("each row must be an array");
      cells.emplace_back();
      size_t t = 0;
      for (const auto& x : r) {
        bool inner = static_cast<int64_t>(t) < part(mu, i);
        if (inner != x.is_null()) json_fail("row " + std::to_string(i + 1) + ": null marks exactly the inner cells");
        if (!inner) {
          if (!x.is_number_integer()) json_fail("row " + std::to_string(i + 1) + ": entries must be integers");
          cells.back().push_back(x.get<int64_t>());
        }
        ++t;
      }
      if (static_cast<int64_t>(t) != part(lam, i)) json_fail("row " + std::to_string(i + 1) + " does not match lambda");
      ++i;
    }
    int k = j.contains("k") ? j["k"].get<int>() : -1;
    if (!is_partition(lam) || !is_partition(mu) || !contains(lam, mu)) json_fail("lambda/mu is not a skew shape");
    return Tableau::from_rows(lam, mu, cells, k);
  }
  if (j.contains("matrix")) {
    if (!j["matrix"].is_array()) json_fail("'matrix' must be an array");
    std::vector<std::vector<int64_t>> rows;
    for (const auto& r : j["matrix"]) rows.push_back(int_array(r, "matrix"));
    for (const auto& r : rows)
      if (r.size() != rows.size()) json_fail("'matrix' must be square");
    return IntMatrix::from_rows(rows);
  }
  if (j.contains("shape")) {
    PlaneFunction p{int_array(j["shape"], "shape"), {}};
    if (!is_partition(p.shape)) json_fail("'shape' is not a partition");
    if (!j.contains("values") || !j["values"].is_array()) json_fail("'values' must be an array");
    for (const auto& r : j["values"]) p.values.push_back(int_array(r, "values"));
    p.check();
    return p;
  }
  json_fail("object has none of 'lambda', 'matrix', 'shape'");
}

std::pair<int, int> line_col(const std::string& s, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < s.size(); ++i) {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

std::string to_text(const Tableau& full) {
  Tableau t = full.trimmed();
  std::string s = with_key("lambda:", t.outer());
  Partition mu = trim(t.inner());
  if (total(mu) > 0) s += with_key("mu:", mu);
  if (t.alphabet() != t.max_entry()) s += "k: " + std::to_string(t.alphabet()) + "\n";
  Rows cells = t.cells();
  for (int i = 0; i < t.rows(); ++i) {
    std::string r;
    for (int64_t c = 0; c < part(mu, i); ++c) r += r.empty() ? "." : " .";
    for (int64_t x : cells[i]) r += (r.empty() ? "" : " ") + std::to_string(x);
    s += r + "\n";
  }
  return s;
}

std::string to_text(const IntMatrix& m) {
  std::string s = "matrix: " + std::to_string(m.rows()) + "\n";
  for (const auto& r : m.to_rows()) s += join(r) + "\n";
  return s;
}

std::string to_text(const PlaneFunction& p) {
  std::string s = with_key("plane:", p.shape);
  for (const auto& r : p.values) s += join(r) + "\n";
  return s;
}

std::string to_json(const Tableau& t) { return tableau_json(t).dump(); }
std::string to_json(const IntMatrix& m) { return matrix_json(m).dump(); }
std::string to_json(const PlaneFunction& p) { return plane_json(p).dump(); }

std::vector<Item> parse_items(const std::string& src, Format f) {
  if (f == Format::Text) return TextReader(src).all();
  json doc;
  try {
    doc = json::parse(src);
  } catch (const json::parse_error& e) {
    auto [l, c] = line_col(src, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(l, c, "malformed JSON");
  }
  std::vector<Item> out;
  try {
    if (doc.is_array()) {
      for (const auto& j : doc) out.push_back(item_from_json(j));
    } else {
      out.push_back(item_from_json(doc));
    }
  } catch (const json::exception& e) {
    json_fail(e.what());
  }
  return out;
}

std::string emit_items(const std::vector<Item>& items, Format f) {
  if (f == Format::Text) {
    std::string s;
    for (size_t i = 0; i < items.size(); ++i) {
      if (i) s += "\n";
      s += std::visit([](const auto& x) { return to_text(x); }, items[i]);
    }
    return s;
  }
  json arr = json::array();
  for (const auto& it : items)
    arr.push_back(std::visit(
        [](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Tableau>) return tableau_json(x);
          else if constexpr (std::is_same_v<T, IntMatrix>) return matrix_json(x);
          else return plane_json(x);
        },
        it));
  return (items.size() == 1 ? arr[0] : arr).dump() + "\n";
}

namespace {

template <class T>
T single(const std::string& src, Format f, const char* what) {
  auto items = parse_items(src, f);
  if (items.size() != 1 || !std::holds_alternative<T>(items[0]))
    throw ParseError(1, 1, std::string("expected exactly one ") + what);
  return std::get<T>(items[0]);
}

}  // namespace

Tableau parse_tableau(const std::string& src, Format f) { return single<Tableau>(src, f, "tableau"); }
IntMatrix parse_matrix(const std::string& src, Format f) { return single<IntMatrix>(src, f, "matrix"); }
PlaneFunction parse_plane(const std::string& src, Format f) { return single<PlaneFunction>(src, f, "plane function"); }

const char* item_kind(const Item& it) {
  switch (it.index()) {
    case 0: return "tableau";
    case 1: return "matrix";
    default: return "plane";
  }
}

}  // namespace yt
