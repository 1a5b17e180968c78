#include "yt/oracles.hpp"

#include <algorithm>

#include "yt/error.hpp"

namespace yt::oracle {

namespace {

// Full rows of the filling, inner cells as 0.
Rows grid_of(const Tableau& a) {
  Rows g = a.cells();
  Partition mu = a.inner();
  for (int i = 0; i < a.rows(); ++i) g[i].insert(g[i].begin(), static_cast<size_t>(mu[i]), 0);
  return g;
}

Tableau from_grid(const Rows& g, const Partition& inner, int k) {
  Partition outer(g.size());
  Rows cells(g.size());
  for (size_t i = 0; i < g.size(); ++i) {
    outer[i] = static_cast<int64_t>(g[i].size());
    cells[i].assign(g[i].begin() + part(inner, i), g[i].end());
  }
  return Tableau::from_rows(outer, pad(inner, g.size()), cells, k);
}

int row_insert(Rows& p, int64_t x) {
  for (size_t r = 0;; ++r) {
    if (r == p.size()) {
      p.push_back({x});
      return static_cast<int>(r);
    }
    auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
    if (it == p[r].end()) {
      p[r].push_back(x);
      return static_cast<int>(r);
    }
    std::swap(*it, x);
  }
}

int column_insert(Rows& p, int64_t x) {
  for (size_t c = 0;; ++c) {
    size_t r = 0;
    while (r < p.size() && p[r].size() > c && p[r][c] < x) ++r;
    if (r == p.size() || p[r].size() <= c) {
      if (r == p.size()) p.emplace_back();
      p[r].push_back(x);
      return static_cast<int>(r);
    }
    std::swap(p[r][c], x);
  }
}

Tableau normal_from_rows(const Rows& rows, int k) {
  Partition shape;
  for (const auto& r : rows) shape.push_back(static_cast<int64_t>(r.size()));
  return Tableau::from_rows(shape, Partition(shape.size(), 0), rows, k);
}

}  // namespace

Tableau naive_bk(const Tableau& a, int r) {
  if (r < 1 || r >= a.alphabet()) fail(ErrorKind::IndexOutOfRange, "naive_bk index out of range");
  const Rows g = grid_of(a);
  Rows out = g;
  const int n = a.rows();
  for (int i = 0; i < n; ++i) {
    std::vector<size_t> pos;
    int64_t low = 0, high = 0;
    for (size_t c = 0; c < g[i].size(); ++c) {
      int64_t v = g[i][c];
      if (v == r) {
        bool fixed = i + 1 < n && c < g[i + 1].size() && g[i + 1][c] == r + 1;
        if (!fixed) {
          pos.push_back(c);
          ++low;
        }
      } else if (v == r + 1) {
        bool fixed = i > 0 && g[i - 1][c] == r;
        if (!fixed) {
          pos.push_back(c);
          ++high;
        }
      }
    }
    for (size_t t = 0; t < pos.size(); ++t) out[i][pos[t]] = static_cast<int64_t>(t) < high ? r : r + 1;
  }
  return from_grid(out, a.inner(), a.alphabet());
}

Tableau naive_jdt(const Tableau& a, CornerOrder order) {
  Rows g = grid_of(a);
  Partition mu = a.inner();
  const int n = a.rows();
  for (;;) {
    std::vector<int> corners;
    for (int i = 0; i < n; ++i)
      if (mu[i] > 0 && (i + 1 == n || mu[i + 1] < mu[i])) corners.push_back(i);
    if (corners.empty()) break;
    int i = order == CornerOrder::First ? corners.front() : corners.back();
    size_t c = static_cast<size_t>(--mu[i]);
    for (;;) {
      bool right = c + 1 < g[i].size();
      bool below = i + 1 < n && c < g[i + 1].size();
      if (!right && !below) {
        g[i].pop_back();
        break;
      }
      if (below && (!right || g[i + 1][c] <= g[i][c + 1])) {
        g[i][c] = g[i + 1][c];
        ++i;
      } else {
        g[i][c] = g[i][c + 1];
        ++c;
      }
    }
  }
  return from_grid(g, Partition(n, 0), a.alphabet());
}

TableauPair naive_rsk(const IntMatrix& v) {
  if (!v.is_square()) fail(ErrorKind::NotSquare, "naive_rsk needs a square matrix");
  const int k = v.rows();
  Rows p, q;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int64_t t = 0; t < v.at(i, j); ++t) {
        size_t r = static_cast<size_t>(row_insert(p, j + 1));
        if (r == q.size()) q.emplace_back();
        q[r].push_back(i + 1);
      }
  return {normal_from_rows(p, k), normal_from_rows(q, k)};
}

IntMatrix rsk_inverse(const Tableau& p, const Tableau& q) {
  if (!p.is_normal() || !q.is_normal() || !same_partition(p.outer(), q.outer()))
    fail(ErrorKind::NotInImage, "rsk_inverse needs two tableaux of the same normal shape");
  const int k = std::max(p.alphabet(), q.alphabet());
  Rows pr = p.cells(), qr = q.cells();
  IntMatrix v(k, k);
  int64_t n = p.size();
  for (int64_t step = 0; step < n; ++step) {
    // Largest recording entry; among equals the rightmost one.
    size_t br = 0, bc = 0;
    int64_t best = -1;
    for (size_t r = 0; r < qr.size(); ++r)
      if (!qr[r].empty()) {
        int64_t x = qr[r].back();
        if (x > best || (x == best && qr[r].size() - 1 > bc)) {
          best = x;
          br = r;
          bc = qr[r].size() - 1;
        }
      }
    qr[br].pop_back();
    int64_t x = pr[br].back();
    pr[br].pop_back();
    for (size_t r = br; r-- > 0;) {
      auto it = std::lower_bound(pr[r].begin(), pr[r].end(), x);
      --it;
      std::swap(*it, x);
    }
    v.set(static_cast<int>(best - 1), static_cast<int>(x - 1), v.at(static_cast<int>(best - 1), static_cast<int>(x - 1)) + 1);
  }
  return v;
}

TableauPair naive_burge(const IntMatrix& v) {
  if (!v.is_square()) fail(ErrorKind::NotSquare, "naive_burge needs a square matrix");
  const int k = v.rows();
  Rows p, q;
  for (int i = 0; i < k; ++i)
    for (int j = k - 1; j >= 0; --j)
      for (int64_t t = 0; t < v.at(i, j); ++t) {
        size_t r = static_cast<size_t>(column_insert(p, j + 1));
        while (q.size() <= r) q.emplace_back();
        q[r].push_back(i + 1);
      }
  return {normal_from_rows(p, k), normal_from_rows(q, k)};
}

PlaneFunction naive_hillman_grassl_inverse(const PlaneFunction& rpp) {
  rpp.check();
  if (!rpp.is_reverse_plane_partition()) fail(ErrorKind::NotInImage, "not a reverse plane partition");
  PlaneFunction p = rpp;
  PlaneFunction f = PlaneFunction::zero(rpp.shape);
  p.shape = f.shape;
  p.values.resize(p.shape.size());
  const int l = static_cast<int>(p.shape.size());
  for (;;) {
    int j0 = -1, a = -1;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < p.shape[i]; ++j)
        if (p.values[i][j] > 0 && (j0 < 0 || j < j0 || (j == j0 && i > a))) {
          j0 = j;
          a = i;
        }
    if (j0 < 0) break;
    // Walk north while the value above is equal, otherwise east; stop at a row end.
    int i = a, j = j0;
    std::vector<std::pair<int, int>> path{{i, j}};
    for (;;) {
      if (i > 0 && p.values[i - 1][j] == p.values[i][j]) {
        --i;
      } else if (j + 1 < p.shape[i]) {
        ++j;
      } else {
        break;
      }
      path.emplace_back(i, j);
    }
    for (auto [pi, pj] : path) --p.values[pi][pj];
    ++f.values[i][j0];
  }
  return f;
}

void for_each_tableau(const Partition& outer, const Partition& inner, int max_value, const TableauSink& sink) {
  if (!is_partition(outer) || !is_partition(inner) || !contains(outer, inner)) return;
  const int n = static_cast<int>(std::max(outer.size(), inner.size()));
  const int k = max_value;
  if (k <= 0) {
    if (same_partition(outer, inner)) sink(Tableau::empty(pad(outer, n), 0));
    return;
  }
  Rows a(n, std::vector<int64_t>(k + 1));
  for (int i = 0; i < n; ++i) {
    a[i][0] = part(inner, i);
    a[i][k] = part(outer, i);
  }
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i == n) {
      sink(Tableau::from_gt(a));
      return;
    }
    if (j == k) {
      if (a[i][k - 1] > a[i][k]) return;
      if (i > 0 && a[i][k] > a[i - 1][k - 1]) return;
      rec(i + 1, 1);
      return;
    }
    int64_t lo = std::max(a[i][j - 1], part(outer, static_cast<size_t>(i + k - j)));
    int64_t hi = a[i][k];
    if (i > 0) hi = std::min(hi, a[i - 1][j - 1]);
    for (int64_t x = lo; x <= hi; ++x) {
      a[i][j] = x;
      rec(i, j + 1);
    }
  };
  rec(0, 1);
}

std::vector<Tableau> enumerate_tableaux(const Partition& outer, const Partition& inner, int max_value) {
  std::vector<Tableau> out;
  for_each_tableau(outer, inner, max_value, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

namespace {

// Cell-by-cell filler shared by the weighted and LR enumerators.
struct Filler {
  Partition outer, inner;
  Weight w;
  bool lr = false;
  int n = 0;
  Rows g;
  std::vector<int64_t> cnt;
  std::vector<Tableau>* out = nullptr;
  int64_t counted = 0;
  bool count_only = false;

  void run() {
    n = static_cast<int>(std::max(outer.size(), inner.size()));
    outer = pad(outer, n);
    inner = pad(inner, n);
    g.assign(n, {});
    for (int i = 0; i < n; ++i) g[i].assign(static_cast<size_t>(outer[i]), 0);
    cnt.assign(w.size() + 1, 0);
    if (total(outer) - total(inner) != total(w)) return;
    if (lr)
      step(0, outer.empty() ? 0 : outer[0] - 1);
    else
      step(0, inner.empty() ? 0 : inner[0]);
  }

  void emit() {
    ++counted;
    if (count_only) return;
    Rows cells(n);
    for (int i = 0; i < n; ++i) cells[i].assign(g[i].begin() + inner[i], g[i].end());
    out->push_back(Tableau::from_rows(outer, inner, cells, static_cast<int>(w.size())));
  }

  // Weighted order: rows top to bottom, cells left to right.
  // LR order: rows top to bottom, cells right to left (reading order).
  void step(int i, int64_t c) {
    if (i == n) {
      for (size_t v = 1; v < cnt.size(); ++v)
        if (cnt[v] != w[v - 1]) return;
      emit();
      return;
    }
    bool row_done = lr ? c < inner[i] : c >= outer[i];
    if (row_done) {
      int ni = i + 1;
      if (ni == n) {
        step(ni, 0);
      } else {
        step(ni, lr ? outer[ni] - 1 : inner[ni]);
      }
      return;
    }
    int64_t lo = 1, hi = static_cast<int64_t>(w.size());
    if (!lr && c > inner[i]) lo = g[i][c - 1];
    if (lr && c + 1 < outer[i]) hi = std::min(hi, g[i][c + 1]);
    if (i > 0 && c >= inner[i - 1]) lo = std::max(lo, g[i - 1][c] + 1);
    for (int64_t v = lo; v <= hi; ++v) {
      if (cnt[v] >= w[v - 1]) continue;
      if (lr && v > 1 && cnt[v] + 1 > cnt[v - 1]) continue;
      g[i][c] = v;
      ++cnt[v];
      step(i, lr ? c - 1 : c + 1);
      --cnt[v];
    }
    g[i][c] = 0;
  }
};

bool member_cf(const Tableau& b, const Partition& nu, int l, bool starred) {
  Tableau lower = b;
  if (starred) {
    // 180 degree rotation with complemented entries, done on the filling.
    Partition lam = trim(b.outer());
    int rows = static_cast<int>(lam.size());
    int64_t r = rows ? lam[0] : 0;
    Rows cells = b.cells();
    Partition outer(rows, r), inner(rows);
    Rows rc(rows);
    for (int i = 0; i < rows; ++i) {
      inner[i] = r - lam[rows - 1 - i];
      for (auto it = cells[rows - 1 - i].rbegin(); it != cells[rows - 1 - i].rend(); ++it) rc[i].push_back(l + 1 - *it);
    }
    lower = Tableau::from_rows(outer, inner, rc, l);
  }
  // lower with Can(nu) placed directly above and to the right.
  Partition lo = trim(lower.outer()), li = pad(trim(lower.inner()), lo.size());
  Partition n = trim(nu);
  int64_t shift = lo.empty() ? 0 : lo[0];
  Partition outer, inner;
  Rows cells;
  for (size_t i = 0; i < n.size(); ++i) {
    outer.push_back(shift + n[i]);
    inner.push_back(shift);
    cells.emplace_back(static_cast<size_t>(n[i]), static_cast<int64_t>(i + 1));
  }
  Rows lc = lower.cells();
  for (size_t i = 0; i < lo.size(); ++i) {
    outer.push_back(lo[i]);
    inner.push_back(li[i]);
    cells.push_back(lc[i]);
  }
  std::vector<int64_t> wd;
  for (const auto& row : cells)
    for (auto it = row.rbegin(); it != row.rend(); ++it) wd.push_back(*it);
  std::vector<int64_t> m;
  for (int64_t x : wd) {
    if (static_cast<size_t>(x) > m.size()) m.resize(static_cast<size_t>(x), 0);
    ++m[static_cast<size_t>(x - 1)];
    if (x > 1 && m[static_cast<size_t>(x - 1)] > m[static_cast<size_t>(x - 2)]) return false;
  }
  return true;
}

}  // namespace

std::vector<Tableau> enumerate_with_weight(const Partition& outer, const Partition& inner, const Weight& w) {
  std::vector<Tableau> out;
  if (!is_partition(outer) || !is_partition(inner) || !contains(outer, inner)) return out;
  Filler f;
  f.outer = outer;
  f.inner = inner;
  f.w = w;
  f.out = &out;
  f.run();
  return out;
}

std::vector<Tableau> enumerate_lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
  std::vector<Tableau> out;
  if (!is_partition(lambda) || !is_partition(mu) || !is_partition(nu) || !contains(lambda, mu)) return out;
  Filler f;
  f.outer = lambda;
  f.inner = mu;
  f.w = trim(nu);
  f.lr = true;
  f.out = &out;
  f.run();
  return out;
}

int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!is_partition(lambda) || !is_partition(mu) || !is_partition(nu) || !contains(lambda, mu)) return 0;
  Filler f;
  f.outer = lambda;
  f.inner = mu;
  f.w = trim(nu);
  f.lr = true;
  f.count_only = true;
  f.run();
  return f.counted;
}

std::vector<Tableau> enumerate_cf(const Partition& mu, const Partition& nu, const Partition& lambda, bool starred) {
  std::vector<Tableau> out;
  const int l = static_cast<int>(length(lambda));
  if (static_cast<int>(length(nu)) > l || !contains(lambda, nu)) return out;
  if (total(lambda) != total(mu) + total(nu)) return out;
  Weight w(l);
  for (int i = 0; i < l; ++i) w[i] = part(lambda, i) - part(nu, i);
  if (starred) w = reversed(w);
  for (const Tableau& b : enumerate_with_weight(trim(mu), {}, w))
    if (member_cf(b, nu, l, starred)) out.push_back(b);
  return out;
}

std::vector<std::pair<Partition, Partition>> skew_shapes(int max_size, int max_length) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int n = 0; n <= max_size; ++n)
    for (const Partition& lam : partitions_of(n, static_cast<size_t>(max_length)))
      for (const Partition& mu : subpartitions(lam)) out.emplace_back(lam, mu);
  return out;
}

std::vector<Tableau> tableau_suite(const Bounds& b) {
  std::vector<Tableau> out;
  for (const auto& [lam, mu] : skew_shapes(b.max_size, b.max_length))
    for_each_tableau(lam, pad(mu, lam.size()), b.max_value, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

std::vector<Tableau> lr_suite(int max_size, int max_length) {
  std::vector<Tableau> out;
  for (const auto& [lam, mu] : skew_shapes(max_size, max_length)) {
    int64_t cells = total(lam) - total(mu);
    for (const Partition& nu : partitions_of(cells, lam.size())) {
      auto part_out = enumerate_lr(lam, pad(mu, lam.size()), nu);
      for (auto& t : part_out) out.push_back(t.with_alphabet(static_cast<int>(lam.size())));
    }
  }
  return out;
}

std::vector<IntMatrix> matrix_suite(int k, int64_t max_entry) {
  std::vector<IntMatrix> out;
  IntMatrix m(k, k);
  std::function<void(int)> rec = [&](int idx) {
    if (idx == k * k) {
      out.push_back(m);
      return;
    }
    for (int64_t x = 0; x <= max_entry; ++x) {
      m.set(idx / k, idx % k, x);
      rec(idx + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<PlaneFunction> plane_suite(const Partition& shape, int64_t max_entry) {
  std::vector<PlaneFunction> out;
  PlaneFunction f = PlaneFunction::zero(shape);
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < static_cast<int>(f.shape.size()); ++i)
    for (int j = 0; j < f.shape[i]; ++j) cells.emplace_back(i, j);
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == cells.size()) {
      out.push_back(f);
      return;
    }
    for (int64_t x = 0; x <= max_entry; ++x) {
      f.values[cells[idx].first][cells[idx].second] = x;
      rec(idx + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace yt::oracle
