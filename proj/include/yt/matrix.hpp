#pragma once

#include <cstdint>
#include <vector>

#include "yt/partition.hpp"

namespace yt {

// Nonnegative integer matrix, row-major. RSK inputs are square; plane
// functions and block constructions may be rectangular.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  static IntMatrix from_rows(const std::vector<std::vector<int64_t>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  int64_t at(int i, int j) const { return v_[static_cast<size_t>(i) * cols_ + j]; }
  void set(int i, int j, int64_t x) { v_[static_cast<size_t>(i) * cols_ + j] = x; }

  Weight row_sums() const;  // a
  Weight col_sums() const;  // b
  int64_t sum() const;
  int64_t max_entry() const;
  std::vector<std::vector<int64_t>> to_rows() const;

  IntMatrix transpose() const;    // V'
  IntMatrix flip_rows() const;    // V with rows reversed: (v_{k+1-i,j})
  IntMatrix flip_cols() const;    // V with columns reversed: (v_{i,k+1-j})
  IntMatrix rotate180() const;    // V* = (v_{k+1-i,k+1-j})
  IntMatrix padded(int rows, int cols) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int64_t> v_;
};

// Nonnegative function on the diagram of a partition.
struct PlaneFunction {
  Partition shape;
  std::vector<std::vector<int64_t>> values;  // values[i].size() == shape[i]

  static PlaneFunction zero(const Partition& shape);
  void check() const;
  int64_t at(int i, int j) const { return values[i][j]; }
  // Diagonal j - i = c, 0-based cells.
  int64_t diagonal_sum(int c) const;
  // Sum over the rectangle spanned by (1,1) and the last cell of diagonal c.
  int64_t rectangular_sum(int c) const;
  // Range of diagonals: -l < c < lambda_1.
  int min_diagonal() const;
  int max_diagonal() const;
  bool is_reverse_plane_partition() const;
  bool is_rectangular() const;

  friend bool operator==(const PlaneFunction& a, const PlaneFunction& b);
};

// Last cell (0-based) on diagonal c of shape.
std::pair<int, int> last_cell_on_diagonal(const Partition& shape, int c);

}  // namespace yt
