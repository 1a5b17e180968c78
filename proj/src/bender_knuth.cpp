#include "yt/bender_knuth.hpp"

#include <algorithm>
#include <string>

#include "yt/error.hpp"

namespace yt {

namespace {

// In-place s_r on a column-major pattern with n rows.
inline void bk_step(int64_t* g, int n, int r) {
  const int64_t* lo = g + static_cast<size_t>(r - 1) * n;
  int64_t* mid = g + static_cast<size_t>(r) * n;
  const int64_t* hi = g + static_cast<size_t>(r + 1) * n;
  for (int i = 0; i < n; ++i) {
    int64_t up = i == 0 ? hi[i] : std::min(hi[i], lo[i - 1]);
    int64_t down = i + 1 < n ? std::max(lo[i], hi[i + 1]) : lo[i];
    mid[i] = checked_sub(checked_add(up, down), mid[i]);
  }
}

void check_index(int r, int k) {
  if (r < 1 || r >= k)
    fail(ErrorKind::IndexOutOfRange, "generator s_" + std::to_string(r) + " needs 1 <= r < " + std::to_string(k));
}

}  // namespace

Tableau bk(const Tableau& a, int r) {
  check_index(r, a.alphabet());
  std::vector<int64_t> g = a.raw();
  bk_step(g.data(), a.rows(), r);
  return Tableau::from_raw(a.rows(), a.alphabet(), std::move(g), false);
}

Tableau apply_bk_word(const Tableau& a, const BkWord& w) {
  for (int r : w) check_index(r, a.alphabet());
  std::vector<int64_t> g = a.raw();
  for (auto it = w.rbegin(); it != w.rend(); ++it) bk_step(g.data(), a.rows(), *it);
  return Tableau::from_raw(a.rows(), a.alphabet(), std::move(g), false);
}

BkWord z_word(int m) {
  BkWord w;
  for (int q = 1; q < m; ++q)
    for (int p = q; p >= 1; --p) w.push_back(p);
  return w;
}

BkWord t_word(int r, int s) {
  BkWord w;
  if (r <= 0 || s <= 0) return w;
  for (int p = s; p >= 1; --p)
    for (int q = p; q <= p + r - 1; ++q) w.push_back(q);
  return w;
}

}  // namespace yt
