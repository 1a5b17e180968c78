#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "yt/partition.hpp"

namespace yt {

using Rows = std::vector<std::vector<int64_t>>;

// Semistandard skew tableau stored as its Gelfand-Tsetlin pattern.
//
// For rows i = 0..rows()-1 and j = 0..alphabet(), at(i, j) is mu_i plus the
// number of entries <= j in row i. Column 0 is the inner shape, column k the
// outer shape. The pattern is stored column-major so that a Bender-Knuth
// step touches three contiguous columns.
class Tableau {
 public:
  Tableau() = default;

  // a[i][j] row by row; every row has the same length k+1.
  static Tableau from_gt(const Rows& a);
  // cells[i] lists the entries of skew row i, left to right. k < 0 means
  // "largest entry used".
  static Tableau from_rows(const Partition& outer, const Partition& inner, const Rows& cells,
                           int k = -1);
  // c[i][j-1] = number of j's in row i.
  static Tableau from_recording(const Partition& inner, const Rows& c);
  // Column-major pattern, rows * (k+1) entries.
  static Tableau from_raw(int rows, int k, std::vector<int64_t> data, bool validate = true);

  static Tableau empty(const Partition& shape, int k = 0);
  // Row i filled with i. k < 0 means the number of nonzero parts.
  static Tableau canonical(const Partition& lambda, int k = -1);

  int rows() const { return rows_; }
  int alphabet() const { return k_; }
  int64_t at(int i, int j) const { return g_[static_cast<size_t>(j) * rows_ + i]; }
  // at() with j clamped to the alphabet and i past the last row read as 0.
  int64_t at_padded(int i, int j) const;

  Partition outer() const;
  Partition inner() const;
  int64_t count(int i, int v) const;  // number of v's in row i, v in 1..k
  Weight weight() const;               // length k
  Rows recording() const;              // rows x k
  Rows cells() const;                  // entries of each skew row
  Rows gt() const;
  int64_t size() const;
  int64_t max_entry() const;  // 0 when empty
  bool is_normal() const;
  bool is_empty() const { return size() == 0; }

  Tableau with_alphabet(int k) const;
  Tableau with_rows(int n) const;
  Tableau trimmed() const;  // drop trailing rows with outer part 0

  const std::vector<int64_t>& raw() const { return g_; }

  // Normalized shapes and identical fillings; alphabet and padding ignored.
  friend bool operator==(const Tableau& x, const Tableau& y);
  friend bool operator!=(const Tableau& x, const Tableau& y) { return !(x == y); }

 private:
  int rows_ = 0;
  int k_ = 0;
  std::vector<int64_t> g_;
};

using TableauPair = std::pair<Tableau, Tableau>;

std::vector<int64_t> word(const Tableau& a);
bool is_positive(const std::vector<int64_t>& w);
bool is_dominant(const std::vector<int64_t>& w);
bool is_lr(const Tableau& a);

// lower on nu/tau, upper on lambda/mu placed `gap` empty rows above lower and
// a columns right of its left margin. Gap rows have both parts equal to
// gap_fill (default a).
Tableau compose(const Tableau& lower, const Tableau& upper, int64_t a, int gap,
                int64_t gap_fill = -1);
Tableau compose(const Tableau& lower, const Tableau& upper);

Tableau attach(const Tableau& inner_part, const Tableau& outer_part);
TableauPair split_at_value(const Tableau& t, int r);
Tableau shift_values(const Tableau& t, int d);
Tableau rotate180(const Tableau& a);

// Rows [begin, end) as a tableau of their own.
Tableau row_slice(const Tableau& t, int begin, int end);
// Rows of top followed by rows of bottom; validated as one tableau.
Tableau stack_rows(const Tableau& top, const Tableau& bottom);

}  // namespace yt
