#include "yt/bijections.hpp"

#include <algorithm>
#include <set>

#include "yt/bender_knuth.hpp"
#include "yt/error.hpp"

namespace yt {

namespace {

void require_lr(const Tableau& a, const char* who) {
  if (!is_lr(a)) fail(ErrorKind::NotLittlewoodRichardson, std::string(who) + " needs an LR tableau");
}

Tableau canonical_inner(const Tableau& a) { return Tableau::canonical(a.inner()); }

}  // namespace

Tableau xi(const Tableau& a) { return apply_bk_word(a, z_word(a.alphabet())); }

Tableau xi_normal(const Tableau& a) {
  if (!a.is_normal()) fail(ErrorKind::SkewInputNotSupported, "xi_normal needs a normal shape");
  return xi(a);
}

Tableau evacuation_of_canonical(const Partition& mu, int k) {
  if (!is_partition(mu)) fail(ErrorKind::ShapeMismatch, "shape is not a partition");
  int len = static_cast<int>(length(mu));
  if (k < 0) k = len;
  if (k < len) fail(ErrorKind::IndexOutOfRange, "alphabet smaller than the number of rows");
  // First row: c_{1,r} = mu_{k+1-r} - mu_{k+2-r}; row i is the first row shifted by i-1.
  std::vector<int64_t> first(k);
  for (int r = 1; r <= k; ++r) first[r - 1] = part(mu, k - r) - part(mu, k + 1 - r);
  int rows = static_cast<int>(mu.size());
  Rows c(rows, std::vector<int64_t>(k, 0));
  for (int i = 0; i < rows; ++i)
    for (int j = i; j < k; ++j) c[i][j] = first[j - i];
  Tableau t = Tableau::from_recording(Partition(rows, 0), c);
  return t.alphabet() < k ? t.with_alphabet(k) : t;
}

TableauPair zeta(const Tableau& b, const Tableau& a) {
  if (!same_partition(b.outer(), a.inner()))
    fail(ErrorKind::ShapeMismatch, "outer shape of the first tableau " + to_string(trim(b.outer())) +
                                       " is not the inner shape of the second " + to_string(trim(a.inner())));
  const int r = b.alphabet(), s = a.alphabet(), m = r + s;
  const int n = std::max(b.rows(), a.rows());
  std::vector<int64_t> g(static_cast<size_t>(n) * (m + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= r; ++j) g[static_cast<size_t>(j) * n + i] = b.at_padded(i, j);
    for (int j = 1; j <= s; ++j) g[static_cast<size_t>(r + j) * n + i] = a.at_padded(i, j);
  }
  Tableau c = apply_bk_word(Tableau::from_raw(n, m, std::move(g), false), t_word(r, s));
  std::vector<int64_t> lo(static_cast<size_t>(n) * (s + 1)), hi(static_cast<size_t>(n) * (r + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= s; ++j) lo[static_cast<size_t>(j) * n + i] = c.at(i, j);
    for (int j = 0; j <= r; ++j) hi[static_cast<size_t>(j) * n + i] = c.at(i, s + j);
  }
  return {Tableau::from_raw(n, s, std::move(lo), false), Tableau::from_raw(n, r, std::move(hi), false)};
}

TableauPair zeta_normal(const Tableau& b, const Tableau& a) {
  if (!b.is_normal()) fail(ErrorKind::SkewInputNotSupported, "zeta_normal needs the first tableau of normal shape");
  return zeta(b, a);
}

TableauPair zeta_lr(const Tableau& b, const Tableau& a) {
  require_lr(b, "zeta_lr");
  require_lr(a, "zeta_lr");
  return zeta(b, a);
}

Tableau psi(const Tableau& a) { return zeta(canonical_inner(a), a).first; }

TableauPair rsk_staircase(const IntMatrix& v) {
  if (!v.is_square()) fail(ErrorKind::NotSquare, "rsk needs a square matrix");
  const int k = v.rows();
  if (k == 0) return {Tableau(), Tableau()};
  Weight a = v.row_sums(), b = v.col_sums();
  // sigma_i = a_1 + ... + a_{k-i}, tau_i = b_1 + ... + b_{k-i}
  Partition sigma(k), tau(k);
  for (int i = 0; i < k; ++i) {
    int64_t sa = 0, sb = 0;
    for (int t = 0; t < k - 1 - i; ++t) {
      sa = checked_add(sa, a[t]);
      sb = checked_add(sb, b[t]);
    }
    sigma[i] = sa;
    tau[i] = sb;
  }
  Rows cy(k, std::vector<int64_t>(k)), cx(k, std::vector<int64_t>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      cy[i][j] = v.at(k - 1 - i, j);
      cx[i][j] = v.at(j, k - 1 - i);
    }
  return {Tableau::from_recording(sigma, cy), Tableau::from_recording(tau, cx)};
}

TableauPair rsk(const IntMatrix& v) {
  auto [y, x] = rsk_staircase(v);
  if (v.rows() == 0) return {y, x};
  return {psi(y), psi(x)};
}

TableauPair phi_lr(const Tableau& a) {
  auto [a1, b1] = zeta(canonical_inner(a), a);
  auto [b2, c1] = zeta(Tableau::canonical(a1.outer()), b1);
  (void)b2;
  return {a1, c1};
}

Tableau phi_lr_inverse(const Tableau& a1, const Tableau& c1) {
  if (!a1.is_normal()) fail(ErrorKind::NotInImage, "first component must have normal shape");
  if (!same_partition(a1.outer(), c1.weight())) fail(ErrorKind::NotInImage, "weight of the LR component is not the shape of the first");
  require_lr(c1, "phi_lr_inverse");
  Tableau b1 = zeta(canonical_inner(c1), c1).second;
  return zeta(a1, b1).second;
}

Tableau chi(const Tableau& a) {
  auto [a1, c1] = zeta(canonical_inner(a), a);
  return zeta(xi(a1), c1).second;
}

Tableau rho1(const Tableau& a) {
  require_lr(a, "rho1");
  return zeta(canonical_inner(a), a).second;
}

Tableau gamma_map(const Tableau& a) {
  require_lr(a, "gamma");
  const int l = a.rows();
  std::vector<int64_t> g(static_cast<size_t>(l) * (l + 1));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j <= l; ++j) g[static_cast<size_t>(j) * l + i] = i + l - j < l ? a.at_padded(i + l - j, l - j) : 0;
  return Tableau::from_raw(l, l, std::move(g));
}

Tableau gamma_inverse(const Tableau& b, const Partition& nu) {
  if (!b.is_normal()) fail(ErrorKind::NotInImage, "gamma image has normal shape");
  const int l = b.alphabet();
  if (static_cast<int>(length(b.outer())) > l || static_cast<int>(length(nu)) > l)
    fail(ErrorKind::NotInImage, "too many rows for the alphabet");
  Weight w = b.weight();
  std::vector<int64_t> g(static_cast<size_t>(l) * (l + 1));
  for (int r = 0; r < l; ++r) {
    int64_t lam = checked_add(part(nu, r), w[l - 1 - r]);
    for (int p = 0; p <= l; ++p) g[static_cast<size_t>(p) * l + r] = p <= r ? b.at_padded(r - p, l - p) : lam;
  }
  Tableau a;
  try {
    a = Tableau::from_raw(l, l, std::move(g));
  } catch (const Error& e) {
    fail(ErrorKind::NotInImage, e.detail());
  }
  if (!is_lr(a) || !same_partition(a.weight(), nu)) fail(ErrorKind::NotInImage, "preimage is not an LR tableau of weight nu");
  return a;
}

Tableau tau_map(const Tableau& a) {
  require_lr(a, "tau");
  const int l = a.rows();
  Rows e(l, std::vector<int64_t>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = i; j < l; ++j) e[i][j] = a.count(j, i + 1);
  Tableau t = Tableau::from_recording(Partition(l, 0), e);
  return t.alphabet() < l ? t.with_alphabet(l) : t;
}

Tableau tau_inverse(const Tableau& e, const Partition& inner) {
  if (!e.is_normal()) fail(ErrorKind::NotInImage, "tau image has normal shape");
  const int l = std::max({e.rows(), e.alphabet(), static_cast<int>(inner.size())});
  Rows c(l, std::vector<int64_t>(l, 0));
  for (int i = 0; i < e.rows(); ++i)
    for (int j = 1; j <= e.alphabet(); ++j) {
      int64_t x = e.count(i, j);
      if (x == 0) continue;
      if (j - 1 < i) fail(ErrorKind::NotInImage, "entry below its row index");
      c[j - 1][i] = x;
    }
  Tableau a;
  try {
    a = Tableau::from_recording(pad(inner, l), c);
  } catch (const Error& ex) {
    fail(ErrorKind::NotInImage, ex.detail());
  }
  if (!is_lr(a)) fail(ErrorKind::NotInImage, "preimage is not an LR tableau");
  return a;
}

Tableau rho2(const Tableau& a) {
  require_lr(a, "rho2");
  return tau_inverse(xi(gamma_map(a)), a.weight());
}

Tableau rho2_prime(const Tableau& a) {
  require_lr(a, "rho2_prime");
  return gamma_inverse(xi(tau_map(a)), a.inner());
}

Tableau rho3(const Tableau& a) {
  require_lr(a, "rho3");
  const int l = a.rows();
  const Partition mu = a.inner(), lam = a.outer();
  Rows t = a.cells();
  for (int i = 0; i < l; ++i) t[i].insert(t[i].begin(), static_cast<size_t>(mu[i]), 0);
  Rows v(l, std::vector<int64_t>(l, 0));  // v[i][j]: chains of length i-j+1 starting in row i
  for (int i = l - 1; i >= 0; --i) {
    std::vector<std::set<size_t>> used(static_cast<size_t>(l));
    const std::vector<int64_t> row = t[i];
    for (size_t p = row.size(); p-- > 0;) {
      std::vector<std::pair<int, size_t>> chain{{i, p}};
      int64_t cur = row[p];
      for (int r = i; cur > 0 && r > 0; --r) {
        const auto& above = t[r - 1];
        size_t best = above.size();
        for (size_t q = 0; q < above.size(); ++q) {
          if (above[q] >= cur || used[r - 1].count(q)) continue;
          if (best == above.size() || above[q] >= above[best]) best = q;
        }
        if (best == above.size()) break;
        chain.emplace_back(r - 1, best);
        used[r - 1].insert(best);
        cur = above[best];
      }
      // Only chains that reach a zero move values.
      if (cur != 0) continue;
      std::vector<int64_t> vals;
      for (auto [ri, qi] : chain) vals.push_back(t[ri][qi]);
      for (size_t s = 1; s < chain.size(); ++s) {
        auto [ri, qi] = chain[s];
        if (vals[s - 1] > ri + 1) continue;  // value k stays out of rows above row k
        t[ri][qi] = vals[s - 1];
      }
      int len = static_cast<int>(chain.size());
      ++v[i][i + 1 - len];
    }
    t[i].clear();
  }
  Rows cells(l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) cells[i].insert(cells[i].end(), static_cast<size_t>(v[i][j]), j + 1);
  return Tableau::from_rows(lam, pad(a.weight(), l), cells);
}

bool lr_membership(const Tableau& b, const LrTriple& ctx, bool starred) {
  if (!b.is_normal() || !same_partition(b.outer(), ctx.mu)) fail(ErrorKind::ShapeMismatch, "tableau is not of shape mu");
  const int l = static_cast<int>(length(ctx.lambda));
  if (b.max_entry() > l) return false;
  Weight w(l);
  for (int i = 0; i < l; ++i) {
    w[i] = part(ctx.lambda, i) - part(ctx.nu, i);
    if (w[i] < 0) return false;
  }
  if (length(ctx.nu) > static_cast<size_t>(l)) return false;
  if (starred) w = reversed(w);
  if (!same_partition(b.weight(), w) && trim(b.weight()) != trim(w)) return false;
  Tableau lower = starred ? rotate180(b.with_alphabet(l)) : b;
  return is_lr(compose(lower, Tableau::canonical(ctx.nu)));
}

TableauPair octahedral(const Tableau& a, const Tableau& b) {
  require_lr(a, "octahedral");
  require_lr(b, "octahedral");
  auto [a1, c1] = zeta(canonical_inner(a), a);
  auto [b1, c2] = zeta(c1, b);
  auto [c3, d] = zeta(Tableau::canonical(b1.outer()), c2);
  (void)a1;
  (void)c3;
  return {b1, d};
}

TableauPair burge(const IntMatrix& v) {
  if (!v.is_square()) fail(ErrorKind::NotSquare, "burge needs a square matrix");
  return {rsk(v.flip_rows()).first, rsk(v.flip_cols()).second};
}

PlaneFunction hillman_grassl(const PlaneFunction& f) {
  f.check();
  PlaneFunction g = PlaneFunction::zero(f.shape);
  const Partition& shape = g.shape;
  for (int c = f.min_diagonal(); c <= f.max_diagonal(); ++c) {
    auto [ic, jc] = last_cell_on_diagonal(shape, c);
    // Rectangle up to the last cell, rows read bottom to top.
    int s = std::max(ic, jc) + 1;
    IntMatrix m(s, s);
    for (int i = 0; i <= ic; ++i)
      for (int j = 0; j <= jc; ++j) m.set(ic - i, j, f.at(i, j));
    Partition lam = trim(rsk(m).first.outer());
    // Largest part at the last cell, moving up-left along the diagonal.
    for (size_t t = 0; t < lam.size(); ++t) {
      int i = ic - static_cast<int>(t), j = jc - static_cast<int>(t);
      if (i < 0 || j < 0) fail(ErrorKind::Overflow, "diagonal too short for its rectangle");
      g.values[i][j] = lam[t];
    }
  }
  return g;
}

}  // namespace yt
