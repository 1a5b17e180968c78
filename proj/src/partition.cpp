#include "yt/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "yt/error.hpp"

namespace yt {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition trim(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Partition pad(Partition p, size_t n) {
  if (p.size() < n) p.resize(n, 0);
  return p;
}

int64_t part(const Partition& p, size_t i) { return i < p.size() ? p[i] : 0; }

int64_t total(const std::vector<int64_t>& v) {
  int64_t s = 0;
  for (int64_t x : v) s = checked_add(s, x);
  return s;
}

size_t length(const Partition& p) { return trim(p).size(); }

bool contains(const Partition& outer, const Partition& inner) {
  size_t n = std::max(outer.size(), inner.size());
  for (size_t i = 0; i < n; ++i)
    if (part(inner, i) > part(outer, i)) return false;
  return true;
}

bool same_partition(const Partition& a, const Partition& b) { return trim(a) == trim(b); }

Weight reversed(Weight w) {
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<Partition> partitions_of(int64_t n, size_t max_len) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int64_t, int64_t)> rec = [&](int64_t left, int64_t cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (cur.size() == max_len) return;
    for (int64_t x = std::min(left, cap); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  Partition lam = trim(lambda);
  std::vector<Partition> out;
  Partition cur(lam.size(), 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == lam.size()) {
      out.push_back(trim(cur));
      return;
    }
    int64_t cap = lam[i];
    if (i > 0) cap = std::min(cap, cur[i - 1]);
    for (int64_t x = 0; x <= cap; ++x) {
      cur[i] = x;
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
  return out;
}

std::string to_string(const std::vector<int64_t>& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace yt
