#include "yt/matrix.hpp"

#include <algorithm>

#include "yt/error.hpp"

namespace yt {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) fail(ErrorKind::ShapeMismatch, "negative matrix dimension");
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int64_t>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) fail(ErrorKind::ShapeMismatch, "ragged matrix");
    for (int j = 0; j < c; ++j) {
      if (rows[i][j] < 0) fail(ErrorKind::NegativeEntry, "negative matrix entry");
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

Weight IntMatrix::row_sums() const {
  Weight a(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) a[i] = checked_add(a[i], at(i, j));
  return a;
}

Weight IntMatrix::col_sums() const {
  Weight b(cols_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) b[j] = checked_add(b[j], at(i, j));
  return b;
}

int64_t IntMatrix::sum() const { return total(row_sums()); }

int64_t IntMatrix::max_entry() const {
  int64_t m = 0;
  for (int64_t x : v_) m = std::max(m, x);
  return m;
}

std::vector<std::vector<int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<int64_t>> out(rows_, std::vector<int64_t>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i][j] = at(i, j);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
  return m;
}

IntMatrix IntMatrix::flip_rows() const {
  IntMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(i, j, at(rows_ - 1 - i, j));
  return m;
}

IntMatrix IntMatrix::flip_cols() const {
  IntMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(i, j, at(i, cols_ - 1 - j));
  return m;
}

IntMatrix IntMatrix::rotate180() const { return flip_rows().flip_cols(); }

IntMatrix IntMatrix::padded(int rows, int cols) const {
  IntMatrix m(std::max(rows, rows_), std::max(cols, cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
  return m;
}

PlaneFunction PlaneFunction::zero(const Partition& shape) {
  PlaneFunction f;
  f.shape = trim(shape);
  for (int64_t p : f.shape) f.values.emplace_back(static_cast<size_t>(p), 0);
  return f;
}

void PlaneFunction::check() const {
  if (!is_partition(shape)) fail(ErrorKind::ShapeMismatch, "plane function shape is not a partition");
  if (values.size() != shape.size()) fail(ErrorKind::ShapeMismatch, "plane function has the wrong number of rows");
  for (size_t i = 0; i < shape.size(); ++i) {
    if (static_cast<int64_t>(values[i].size()) != shape[i])
      fail(ErrorKind::ShapeMismatch, "plane function row " + std::to_string(i + 1) + " has the wrong length");
    for (int64_t v : values[i])
      if (v < 0) fail(ErrorKind::NegativeEntry, "plane function has a negative value");
  }
}

int PlaneFunction::min_diagonal() const { return 1 - static_cast<int>(length(shape)); }

int PlaneFunction::max_diagonal() const { return static_cast<int>(part(shape, 0)) - 1; }

std::pair<int, int> last_cell_on_diagonal(const Partition& shape, int c) {
  int last = -1;
  for (int i = 0; i < static_cast<int>(shape.size()); ++i) {
    int j = i + c;
    if (j >= 0 && j < shape[i]) last = i;
  }
  if (last < 0) fail(ErrorKind::IndexOutOfRange, "diagonal outside the shape");
  return {last, last + c};
}

int64_t PlaneFunction::diagonal_sum(int c) const {
  int64_t s = 0;
  for (int i = 0; i < static_cast<int>(shape.size()); ++i) {
    int j = i + c;
    if (j >= 0 && j < shape[i]) s = checked_add(s, values[i][j]);
  }
  return s;
}

int64_t PlaneFunction::rectangular_sum(int c) const {
  auto [ic, jc] = last_cell_on_diagonal(shape, c);
  int64_t s = 0;
  for (int i = 0; i <= ic; ++i)
    for (int j = 0; j <= jc; ++j) s = checked_add(s, values[i][j]);
  return s;
}

bool PlaneFunction::is_reverse_plane_partition() const {
  for (size_t i = 0; i < shape.size(); ++i)
    for (size_t j = 0; j < values[i].size(); ++j) {
      if (values[i][j] < 0) return false;
      if (j > 0 && values[i][j] < values[i][j - 1]) return false;
      if (i > 0 && values[i][j] < values[i - 1][j]) return false;
    }
  return true;
}

bool PlaneFunction::is_rectangular() const {
  Partition s = trim(shape);
  return s.empty() || s.front() == s.back();
}

bool operator==(const PlaneFunction& a, const PlaneFunction& b) {
  Partition s = trim(a.shape);
  if (s != trim(b.shape) || a.values.size() < s.size() || b.values.size() < s.size()) return false;
  return std::equal(a.values.begin(), a.values.begin() + static_cast<long>(s.size()), b.values.begin());
}

}  // namespace yt
