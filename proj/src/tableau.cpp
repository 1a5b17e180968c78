#include "yt/tableau.hpp"

#include <algorithm>
#include <string>

#include "yt/error.hpp"

namespace yt {

namespace {

std::string cell_name(int i, int64_t j) {
  return "cell (" + std::to_string(i + 1) + "," + std::to_string(j) + ")";
}

void validate_raw(int rows, int k, const std::vector<int64_t>& g) {
  auto at = [&](int i, int j) { return g[static_cast<size_t>(j) * rows + i]; };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j <= k; ++j) {
      if (at(i, j) < 0) fail(ErrorKind::NotATableau, "negative pattern entry in row " + std::to_string(i + 1));
      if (j > 0 && at(i, j) < at(i, j - 1))
        fail(ErrorKind::NotATableau, "pattern row " + std::to_string(i + 1) + " decreases at column " + std::to_string(j));
      if (i > 0 && j > 0 && at(i, j) > at(i - 1, j - 1))
        fail(ErrorKind::NotATableau, "pattern rows " + std::to_string(i) + "," + std::to_string(i + 1) +
                                         " do not interlace at column " + std::to_string(j));
    }
    if (i > 0 && at(i, 0) > at(i - 1, 0)) fail(ErrorKind::NotATableau, "inner shape is not a partition");
    if (i > 0 && at(i, k) > at(i - 1, k)) fail(ErrorKind::NotATableau, "outer shape is not a partition");
  }
}

}  // namespace

Tableau Tableau::from_raw(int rows, int k, std::vector<int64_t> data, bool validate) {
  if (rows < 0 || k < 0 || data.size() != static_cast<size_t>(rows) * (k + 1))
    fail(ErrorKind::NotATableau, "pattern has the wrong dimensions");
  if (validate) validate_raw(rows, k, data);
  Tableau t;
  t.rows_ = rows;
  t.k_ = k;
  t.g_ = std::move(data);
  return t;
}

Tableau Tableau::from_gt(const Rows& a) {
  int rows = static_cast<int>(a.size());
  int k = rows ? static_cast<int>(a[0].size()) - 1 : 0;
  if (rows && k < 0) fail(ErrorKind::NotATableau, "empty pattern row");
  std::vector<int64_t> g(static_cast<size_t>(rows) * (k + 1));
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(a[i].size()) != k + 1) fail(ErrorKind::NotATableau, "ragged pattern");
    for (int j = 0; j <= k; ++j) g[static_cast<size_t>(j) * rows + i] = a[i][j];
  }
  return from_raw(rows, k, std::move(g));
}

Tableau Tableau::from_rows(const Partition& outer, const Partition& inner, const Rows& cells, int k) {
  if (!is_partition(outer) || !is_partition(inner)) fail(ErrorKind::ShapeMismatch, "shape is not a partition");
  if (!contains(outer, inner)) fail(ErrorKind::ShapeMismatch, "inner shape not contained in outer shape");
  int rows = static_cast<int>(std::max(outer.size(), inner.size()));
  if (static_cast<int>(cells.size()) > rows) fail(ErrorKind::ShapeMismatch, "more filled rows than the shape has");
  static const std::vector<int64_t> none;
  auto row = [&](int i) -> const std::vector<int64_t>& { return i < static_cast<int>(cells.size()) ? cells[i] : none; };
  int64_t mx = 0;
  for (int i = 0; i < rows; ++i) {
    int64_t mu = part(inner, i), lam = part(outer, i);
    const auto& r = row(i);
    if (static_cast<int64_t>(r.size()) != lam - mu)
      fail(ErrorKind::ShapeMismatch, "row " + std::to_string(i + 1) + " has " + std::to_string(r.size()) +
                                         " cells, shape needs " + std::to_string(lam - mu));
    for (size_t t = 0; t < r.size(); ++t) {
      int64_t col = mu + static_cast<int64_t>(t) + 1;
      if (r[t] < 1) fail(ErrorKind::ShapeMismatch, "nonpositive entry at " + cell_name(i, col));
      if (t > 0 && r[t] < r[t - 1]) fail(ErrorKind::RowOrderViolation, "row decreases at " + cell_name(i, col));
      if (i > 0 && col > part(inner, i - 1)) {
        int64_t above = row(i - 1)[static_cast<size_t>(col - part(inner, i - 1) - 1)];
        if (above >= r[t]) fail(ErrorKind::ColumnOrderViolation, "column not strict at " + cell_name(i, col));
      }
      mx = std::max(mx, r[t]);
    }
  }
  if (k < 0) k = static_cast<int>(mx);
  if (mx > k) fail(ErrorKind::IndexOutOfRange, "entry exceeds the declared maximum value");
  std::vector<int64_t> g(static_cast<size_t>(rows) * (k + 1));
  for (int i = 0; i < rows; ++i) {
    int64_t acc = part(inner, i);
    const auto& r = row(i);
    size_t t = 0;
    for (int j = 0; j <= k; ++j) {
      while (t < r.size() && r[t] == j) {
        ++acc;
        ++t;
      }
      g[static_cast<size_t>(j) * rows + i] = acc;
    }
  }
  return from_raw(rows, k, std::move(g));
}

Tableau Tableau::from_recording(const Partition& inner, const Rows& c) {
  if (!is_partition(inner)) fail(ErrorKind::NotATableau, "inner shape is not a partition");
  int rows = static_cast<int>(std::max(inner.size(), c.size()));
  int k = 0;
  for (const auto& r : c) k = std::max(k, static_cast<int>(r.size()));
  std::vector<int64_t> g(static_cast<size_t>(rows) * (k + 1));
  for (int i = 0; i < rows; ++i) {
    int64_t acc = part(inner, i);
    g[static_cast<size_t>(i)] = acc;
    for (int j = 1; j <= k; ++j) {
      int64_t v = (i < static_cast<int>(c.size()) && j <= static_cast<int>(c[i].size())) ? c[i][j - 1] : 0;
      if (v < 0) fail(ErrorKind::NotATableau, "negative recording entry");
      acc = checked_add(acc, v);
      g[static_cast<size_t>(j) * rows + i] = acc;
    }
  }
  return from_raw(rows, k, std::move(g));
}

Tableau Tableau::empty(const Partition& shape, int k) {
  if (!is_partition(shape)) fail(ErrorKind::ShapeMismatch, "shape is not a partition");
  int rows = static_cast<int>(shape.size());
  std::vector<int64_t> g(static_cast<size_t>(rows) * (k + 1));
  for (int j = 0; j <= k; ++j)
    for (int i = 0; i < rows; ++i) g[static_cast<size_t>(j) * rows + i] = shape[i];
  return from_raw(rows, k, std::move(g), false);
}

Tableau Tableau::canonical(const Partition& lambda, int k) {
  if (!is_partition(lambda)) fail(ErrorKind::ShapeMismatch, "shape is not a partition");
  int len = static_cast<int>(length(lambda));
  if (k < 0) k = len;
  if (k < len) fail(ErrorKind::IndexOutOfRange, "alphabet smaller than the number of rows");
  int rows = static_cast<int>(lambda.size());
  std::vector<int64_t> g(static_cast<size_t>(rows) * (k + 1));
  for (int j = 0; j <= k; ++j)
    for (int i = 0; i < rows; ++i) g[static_cast<size_t>(j) * rows + i] = j > i ? lambda[i] : 0;
  return from_raw(rows, k, std::move(g), false);
}

int64_t Tableau::at_padded(int i, int j) const {
  if (i >= rows_) return 0;
  return at(i, std::min(j, k_));
}

Partition Tableau::outer() const {
  Partition p(rows_);
  for (int i = 0; i < rows_; ++i) p[i] = at(i, k_);
  return p;
}

Partition Tableau::inner() const {
  Partition p(rows_);
  for (int i = 0; i < rows_; ++i) p[i] = at(i, 0);
  return p;
}

int64_t Tableau::count(int i, int v) const {
  if (i >= rows_ || v < 1 || v > k_) return 0;
  return at(i, v) - at(i, v - 1);
}

Weight Tableau::weight() const {
  Weight w(k_, 0);
  for (int v = 1; v <= k_; ++v)
    for (int i = 0; i < rows_; ++i) w[v - 1] += count(i, v);
  return w;
}

Rows Tableau::recording() const {
  Rows c(rows_, std::vector<int64_t>(k_));
  for (int i = 0; i < rows_; ++i)
    for (int v = 1; v <= k_; ++v) c[i][v - 1] = count(i, v);
  return c;
}

Rows Tableau::cells() const {
  Rows out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int v = 1; v <= k_; ++v) out[i].insert(out[i].end(), static_cast<size_t>(count(i, v)), v);
  return out;
}

Rows Tableau::gt() const {
  Rows a(rows_, std::vector<int64_t>(k_ + 1));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j <= k_; ++j) a[i][j] = at(i, j);
  return a;
}

int64_t Tableau::size() const {
  int64_t s = 0;
  for (int i = 0; i < rows_; ++i) s += at(i, k_) - at(i, 0);
  return s;
}

int64_t Tableau::max_entry() const {
  for (int v = k_; v >= 1; --v)
    for (int i = 0; i < rows_; ++i)
      if (count(i, v) > 0) return v;
  return 0;
}

bool Tableau::is_normal() const {
  for (int i = 0; i < rows_; ++i)
    if (at(i, 0) != 0) return false;
  return true;
}

Tableau Tableau::with_alphabet(int k) const {
  if (k < 0) fail(ErrorKind::IndexOutOfRange, "negative alphabet");
  if (k < k_ && max_entry() > k) fail(ErrorKind::IndexOutOfRange, "entries exceed the requested alphabet");
  std::vector<int64_t> g(static_cast<size_t>(rows_) * (k + 1));
  for (int j = 0; j <= k; ++j)
    for (int i = 0; i < rows_; ++i) g[static_cast<size_t>(j) * rows_ + i] = at(i, std::min(j, k_));
  return from_raw(rows_, k, std::move(g), false);
}

Tableau Tableau::with_rows(int n) const {
  for (int i = n; i < rows_; ++i)
    if (at(i, k_) != 0) fail(ErrorKind::ShapeMismatch, "cannot drop a nonempty row");
  std::vector<int64_t> g(static_cast<size_t>(n) * (k_ + 1), 0);
  for (int j = 0; j <= k_; ++j)
    for (int i = 0; i < std::min(n, rows_); ++i) g[static_cast<size_t>(j) * n + i] = at(i, j);
  return from_raw(n, k_, std::move(g), false);
}

Tableau Tableau::trimmed() const {
  int n = rows_;
  while (n > 0 && at(n - 1, k_) == 0) --n;
  return with_rows(n);
}

bool operator==(const Tableau& x, const Tableau& y) {
  if (!same_partition(x.outer(), y.outer()) || !same_partition(x.inner(), y.inner())) return false;
  int n = std::max(x.rows_, y.rows_);
  int k = std::max(x.k_, y.k_);
  for (int i = 0; i < n; ++i)
    for (int v = 1; v <= k; ++v)
      if (x.count(i, v) != y.count(i, v)) return false;
  return true;
}

std::vector<int64_t> word(const Tableau& a) {
  std::vector<int64_t> w;
  for (int i = 0; i < a.rows(); ++i)
    for (int v = a.alphabet(); v >= 1; --v) w.insert(w.end(), static_cast<size_t>(a.count(i, v)), v);
  return w;
}

bool is_positive(const std::vector<int64_t>& w) {
  std::vector<int64_t> m;
  for (int64_t x : w) {
    if (x < 1) return false;
    if (static_cast<size_t>(x) > m.size()) m.resize(static_cast<size_t>(x), 0);
    ++m[static_cast<size_t>(x - 1)];
  }
  for (size_t i = 1; i < m.size(); ++i)
    if (m[i] > m[i - 1]) return false;
  return true;
}

bool is_dominant(const std::vector<int64_t>& w) {
  std::vector<int64_t> m;
  for (int64_t x : w) {
    if (x < 1) return false;
    if (static_cast<size_t>(x) > m.size()) m.resize(static_cast<size_t>(x), 0);
    ++m[static_cast<size_t>(x - 1)];
    if (x > 1 && m[static_cast<size_t>(x - 1)] > m[static_cast<size_t>(x - 2)]) return false;
  }
  return true;
}

bool is_lr(const Tableau& a) { return is_dominant(word(a)); }

Tableau compose(const Tableau& lower, const Tableau& upper, int64_t a, int gap, int64_t gap_fill) {
  int64_t nu1 = lower.rows() ? lower.at(0, lower.alphabet()) : 0;
  if (gap_fill < 0) gap_fill = a;
  if (a < nu1 || gap < 0 || gap_fill < nu1 || gap_fill > a)
    fail(ErrorKind::OffsetTooSmall, "offset " + std::to_string(a) + " does not clear the lower diagram");
  int k = std::max(lower.alphabet(), upper.alphabet());
  int rows = upper.rows() + gap + lower.rows();
  std::vector<int64_t> g(static_cast<size_t>(rows) * (k + 1));
  for (int j = 0; j <= k; ++j) {
    int r = 0;
    for (int i = 0; i < upper.rows(); ++i) g[static_cast<size_t>(j) * rows + r++] = checked_add(a, upper.at_padded(i, j));
    for (int i = 0; i < gap; ++i) g[static_cast<size_t>(j) * rows + r++] = gap_fill;
    for (int i = 0; i < lower.rows(); ++i) g[static_cast<size_t>(j) * rows + r++] = lower.at_padded(i, j);
  }
  try {
    return Tableau::from_raw(rows, k, std::move(g));
  } catch (const Error& e) {
    fail(ErrorKind::OffsetTooSmall, e.detail());
  }
}

Tableau compose(const Tableau& lower, const Tableau& upper) {
  int64_t nu1 = lower.rows() ? lower.at(0, lower.alphabet()) : 0;
  return compose(lower, upper, nu1, 0);
}

Tableau attach(const Tableau& inner_part, const Tableau& outer_part) {
  if (!same_partition(inner_part.outer(), outer_part.inner()))
    fail(ErrorKind::ShapeMismatch, "outer shape " + to_string(trim(inner_part.outer())) + " differs from inner shape " +
                                       to_string(trim(outer_part.inner())));
  int rows = std::max(inner_part.rows(), outer_part.rows());
  Rows lo = inner_part.cells(), hi = outer_part.cells();
  Rows cells(rows);
  for (int i = 0; i < rows; ++i) {
    if (i < static_cast<int>(lo.size())) cells[i] = lo[i];
    if (i < static_cast<int>(hi.size())) cells[i].insert(cells[i].end(), hi[i].begin(), hi[i].end());
  }
  Partition outer = pad(outer_part.outer(), rows), inner = pad(inner_part.inner(), rows);
  try {
    return Tableau::from_rows(outer, inner, cells, std::max(inner_part.alphabet(), outer_part.alphabet()));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::RowOrderViolation || e.kind() == ErrorKind::ColumnOrderViolation)
      fail(ErrorKind::OrderViolation, e.detail());
    throw;
  }
}

TableauPair split_at_value(const Tableau& t, int r) {
  int k = t.alphabet(), rows = t.rows();
  r = std::clamp(r, 0, k);
  std::vector<int64_t> lo(static_cast<size_t>(rows) * (r + 1)), hi(static_cast<size_t>(rows) * (k + 1));
  for (int j = 0; j <= k; ++j)
    for (int i = 0; i < rows; ++i) {
      if (j <= r) lo[static_cast<size_t>(j) * rows + i] = t.at(i, j);
      hi[static_cast<size_t>(j) * rows + i] = t.at(i, std::max(j, r));
    }
  return {Tableau::from_raw(rows, r, std::move(lo), false), Tableau::from_raw(rows, k, std::move(hi), false)};
}

Tableau shift_values(const Tableau& t, int d) {
  int k = t.alphabet(), rows = t.rows();
  if (d >= 0) {
    int nk = k + d;
    std::vector<int64_t> g(static_cast<size_t>(rows) * (nk + 1));
    for (int j = 0; j <= nk; ++j)
      for (int i = 0; i < rows; ++i) g[static_cast<size_t>(j) * rows + i] = t.at(i, std::max(j - d, 0));
    return Tableau::from_raw(rows, nk, std::move(g), false);
  }
  int e = -d;
  for (int i = 0; i < rows; ++i)
    if (t.at(i, std::min(e, k)) != t.at(i, 0))
      fail(ErrorKind::UnderflowBelowOne, "row " + std::to_string(i + 1) + " has entries <= " + std::to_string(e));
  int nk = std::max(k - e, 0);
  std::vector<int64_t> g(static_cast<size_t>(rows) * (nk + 1));
  for (int j = 0; j <= nk; ++j)
    for (int i = 0; i < rows; ++i) g[static_cast<size_t>(j) * rows + i] = t.at(i, std::min(j + e, k));
  return Tableau::from_raw(rows, nk, std::move(g), false);
}

Tableau rotate180(const Tableau& a) {
  if (!a.is_normal()) fail(ErrorKind::SkewInputNotSupported, "rotate180 needs a normal shape");
  Partition lam = trim(a.outer());
  int l = static_cast<int>(lam.size()), k = a.alphabet();
  int64_t r = l ? lam[0] : 0;
  Partition inner(l);
  Rows c(l, std::vector<int64_t>(k));
  for (int i = 0; i < l; ++i) {
    inner[i] = r - lam[l - 1 - i];
    for (int j = 0; j < k; ++j) c[i][j] = a.count(l - 1 - i, k - j);
  }
  Tableau out = Tableau::from_recording(inner, c);
  return k > out.alphabet() ? out.with_alphabet(k) : out;
}

Tableau row_slice(const Tableau& t, int begin, int end) {
  begin = std::clamp(begin, 0, t.rows());
  end = std::clamp(end, begin, t.rows());
  int rows = end - begin, k = t.alphabet();
  std::vector<int64_t> g(static_cast<size_t>(rows) * (k + 1));
  for (int j = 0; j <= k; ++j)
    for (int i = 0; i < rows; ++i) g[static_cast<size_t>(j) * rows + i] = t.at(begin + i, j);
  return Tableau::from_raw(rows, k, std::move(g), false);
}

Tableau stack_rows(const Tableau& top, const Tableau& bottom) {
  int k = std::max(top.alphabet(), bottom.alphabet());
  int rows = top.rows() + bottom.rows();
  std::vector<int64_t> g(static_cast<size_t>(rows) * (k + 1));
  for (int j = 0; j <= k; ++j) {
    for (int i = 0; i < top.rows(); ++i) g[static_cast<size_t>(j) * rows + i] = top.at_padded(i, j);
    for (int i = 0; i < bottom.rows(); ++i) g[static_cast<size_t>(j) * rows + top.rows() + i] = bottom.at_padded(i, j);
  }
  try {
    return Tableau::from_raw(rows, k, std::move(g));
  } catch (const Error& e) {
    fail(ErrorKind::ShapeMismatch, "stacked rows do not form a tableau: " + e.detail());
  }
}

}  // namespace yt
