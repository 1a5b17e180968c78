#include "yt/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "yt/bender_knuth.hpp"
#include "yt/bijections.hpp"
#include "yt/error.hpp"
#include "yt/io.hpp"

namespace yt::harness {

namespace {

// Every chain mu <= pi <= lambda within the bounds.
template <class F>
void for_each_chain(int max_size, int max_length, F&& f) {
  for (const auto& [lam, pi] : oracle::skew_shapes(max_size, max_length))
    for (const Partition& mu : subpartitions(pi)) f(lam, pad(pi, lam.size()), pad(mu, lam.size()));
}

std::vector<Tableau> all_lr(const Partition& outer, const Partition& inner) {
  std::vector<Tableau> out;
  int64_t n = total(outer) - total(inner);
  for (const Partition& nu : partitions_of(n, outer.size()))
    for (auto& t : oracle::enumerate_lr(outer, inner, nu)) out.push_back(t);
  return out;
}

std::string show(const Tableau& t) { return to_json(t); }

class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }
  // Counts one instance; records the first failure only.
  void operator()(bool ok, const std::function<std::string()>& what) {
    ++r_.instances;
    if (!ok && r_.counterexample.empty()) r_.counterexample = what();
  }
  // Runs body, turning a thrown error into a failure on this instance.
  template <class F>
  void guarded(F&& body, const std::function<std::string()>& what) {
    try {
      (*this)(body(), what);
    } catch (const Error& e) {
      (*this)(false, [&] { return what() + " raised " + error_name(e.kind()) + ": " + e.detail(); });
    }
  }
  PropertyResult done() { return std::move(r_); }

 private:
  PropertyResult r_;
};

using BkFn = std::function<Tableau(const Tableau&, int)>;

BkFn bk_under_test(const SuiteConfig& cfg) {
  if (!cfg.inject_bk_fault) return [](const Tableau& a, int r) { return bk(a, r); };
  // Fault: s_1 left as the identity.
  return [](const Tableau& a, int r) { return r == 1 ? a : bk(a, r); };
}

Tableau apply_word(const BkFn& f, Tableau a, const BkWord& w) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) a = f(a, *it);
  return a;
}

std::vector<IntMatrix> matrices(const SuiteConfig& cfg) {
  std::vector<IntMatrix> out;
  for (int k = 2; k <= 3; ++k)
    for (auto& m : oracle::matrix_suite(k, cfg.matrix_max)) out.push_back(std::move(m));
  return out;
}

std::string show_matrix(const IntMatrix& m) { return to_json(m); }

}  // namespace

std::vector<TableauPair> switching_pairs(const oracle::Bounds& b) {
  std::vector<TableauPair> out;
  for_each_chain(b.max_size, b.max_length, [&](const Partition& lam, const Partition& pi, const Partition& mu) {
    auto bs = oracle::enumerate_tableaux(pi, mu, b.max_value);
    auto as = oracle::enumerate_tableaux(lam, pi, b.max_value);
    for (const auto& x : bs)
      for (const auto& y : as) out.emplace_back(x, y);
  });
  return out;
}

std::vector<TableauPair> lr_pairs(int max_size, int max_length) {
  std::vector<TableauPair> out;
  for_each_chain(max_size, max_length, [&](const Partition& lam, const Partition& pi, const Partition& mu) {
    auto bs = all_lr(pi, mu);
    auto as = all_lr(lam, pi);
    for (const auto& x : bs)
      for (const auto& y : as) out.emplace_back(x, y);
  });
  return out;
}

std::vector<Value> instances(const std::string& map, const oracle::Bounds& b) {
  std::vector<Value> out;
  auto tableaux = [&](bool normal_only) {
    for (auto& t : oracle::tableau_suite(b))
      if (!normal_only || t.is_normal()) out.emplace_back(t);
  };
  auto pairs = [&](const std::vector<TableauPair>& ps, bool normal_first) {
    for (const auto& p : ps)
      if (!normal_first || p.first.is_normal()) out.push_back(from_pair(p));
  };
  if (map == "phi" || map == "burge") {
    int64_t e = std::min<int64_t>(b.max_value, 2);
    for (int k = 1; k <= 3; ++k)
      for (auto& m : oracle::matrix_suite(k, e)) out.emplace_back(m);
  } else if (map == "psi" || map == "phiLR" || map == "xi" || map == "chi") {
    tableaux(false);
  } else if (map == "xiN") {
    tableaux(true);
  } else if (map == "zeta" || map == "zetaN") {
    oracle::Bounds small{std::min(b.max_size, 5), b.max_length, std::min(b.max_value, 3)};
    pairs(switching_pairs(small), map == "zetaN");
  } else if (map == "zetaLR" || map == "varsigma") {
    pairs(lr_pairs(b.max_size, b.max_length), false);
  } else if (map == "rho1" || map == "rho2") {
    for (auto& t : oracle::lr_suite(b.max_size, b.max_length)) out.emplace_back(t);
  } else if (map == "theta") {
    for (const Partition& lam : {Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}, Partition{2, 2},
                                 Partition{3, 1}, Partition{3}, Partition{3, 2}})
      for (auto& f : oracle::plane_suite(lam, std::min<int64_t>(b.max_value, 2))) out.emplace_back(f);
  } else {
    fail(ErrorKind::MapMismatch, "no suite for map '" + map + "'");
  }
  return out;
}

std::vector<Value> instances_for(const Reduction& r, const oracle::Bounds& b) {
  if (r.name != "theta_via_phi") return instances(r.source, b);
  std::vector<Value> out;
  for (const Partition& lam : {Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 2}, Partition{3}, Partition{3, 3},
                               Partition{2, 2, 2}})
    for (auto& f : oracle::plane_suite(lam, std::min<int64_t>(b.max_value, 2))) out.emplace_back(f);
  return out;
}

ProbeReport conjecture1_probe(int max_size, int max_length) {
  ProbeReport rep;
  for (const Tableau& a : oracle::lr_suite(max_size, max_length)) {
    ++rep.instances;
    Tableau r1 = rho1(a), r2 = rho2(a), r2p = rho2_prime(a), r3 = rho3(a);
    if (r1 == r2 && r1 == r2p && r1 == r3) continue;
    rep.mismatches.push_back("{\"input\":" + show(a) + ",\"rho1\":" + show(r1) + ",\"rho2\":" + show(r2) +
                             ",\"rho2_prime\":" + show(r2p) + ",\"rho3\":" + show(r3) + "}");
  }
  return rep;
}

ProbeReport conjecture3_count_probe(int max_size) {
  ProbeReport rep;
  for (int n = 0; n <= max_size; ++n)
    for (const Partition& tau : partitions_of(n, static_cast<size_t>(n))) {
      size_t len = tau.size();
      // Left side: pairs (A, B) grouped by (lambda, mu, nu).
      std::map<std::tuple<Partition, Partition, Partition>, std::vector<TableauPair>> left;
      for (const Partition& sigma : subpartitions(tau))
        for (const Partition& lam : subpartitions(sigma)) {
          Partition s = pad(sigma, len), l = pad(lam, len);
          auto as = all_lr(s, l);
          auto bs = all_lr(pad(tau, len), s);
          for (const auto& a : as)
            for (const auto& b : bs) left[{trim(l), trim(a.weight()), trim(b.weight())}].emplace_back(a, b);
        }
      for (const auto& [key, pairs] : left) {
        const auto& [lam, mu, nu] = key;
        ++rep.instances;
        int64_t lhs = static_cast<int64_t>(pairs.size());
        int64_t rhs = 0;
        for (const Partition& pi : partitions_of(total(mu) + total(nu), len))
          rhs += oracle::lr_coefficient(pi, mu, nu) * oracle::lr_coefficient(tau, lam, pi);
        std::string where = "tau=" + to_string(tau) + " lambda=" + to_string(lam) + " mu=" + to_string(mu) +
                            " nu=" + to_string(nu);
        if (lhs != rhs) rep.mismatches.push_back(where + ": " + std::to_string(lhs) + " != " + std::to_string(rhs));
        std::set<std::pair<std::string, std::string>> seen;
        for (const auto& [a, b] : pairs) {
          auto [b1, d] = octahedral(a, b);
          bool ok = is_lr(b1) && is_lr(d) && same_partition(b1.inner(), mu) && same_partition(b1.weight(), nu) &&
                    same_partition(d.inner(), lam) && same_partition(d.outer(), tau) &&
                    same_partition(d.weight(), b1.outer());
          if (!ok) rep.mismatches.push_back(where + ": image outside the target set for " + show(a) + ", " + show(b));
          if (!seen.insert({show(b1.trimmed()), show(d.trimmed())}).second)
            rep.mismatches.push_back(where + ": varsigma not injective at " + show(a) + ", " + show(b));
        }
      }
    }
  return rep;
}

ProbeReport count_symmetry_probe(int max_size, int max_length) {
  ProbeReport rep;
  for (int n = 0; n <= max_size; ++n)
    for (const Partition& lam : partitions_of(n, static_cast<size_t>(max_length)))
      for (const Partition& mu : subpartitions(lam)) {
        for (const Partition& nu : partitions_of(n - total(mu), lam.size())) {
          ++rep.instances;
          int64_t a = oracle::lr_coefficient(lam, pad(mu, lam.size()), nu);
          int64_t b = oracle::lr_coefficient(lam, nu, pad(mu, lam.size()));
          int64_t c = static_cast<int64_t>(oracle::enumerate_cf(trim(mu), nu, lam, false).size());
          int64_t d = static_cast<int64_t>(oracle::enumerate_cf(trim(mu), nu, lam, true).size());
          if (a != b || a != c || a != d)
            rep.mismatches.push_back("lambda=" + to_string(lam) + " mu=" + to_string(trim(mu)) + " nu=" + to_string(nu) +
                                     ": " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                                     "," + std::to_string(d));
        }
      }
  return rep;
}

std::vector<PropertyResult> bk_relations(const SuiteConfig& cfg) {
  BkFn f = bk_under_test(cfg);
  auto suite = oracle::tableau_suite(cfg.bounds);
  Check inv("bk involution"), comm("bk distant generators commute"), wt("bk weight transposition"),
      zinv("evacuation word involution"), tinv("switching words mutually inverse"),
      fact("evacuation factors through switching");
  for (const Tableau& t : suite) {
    int m = t.alphabet();
    auto who = [&] { return show(t); };
    for (int r = 1; r < m; ++r) {
      Tableau b = f(t, r);
      inv(f(b, r) == t, [&] { return who() + " r=" + std::to_string(r); });
      Weight w = t.weight();
      std::swap(w[r - 1], w[r]);
      wt(b.weight() == w, [&] { return who() + " r=" + std::to_string(r); });
      for (int j = r + 2; j < m; ++j)
        comm(f(b, j) == f(f(t, j), r),
             [&] { return who() + " i=" + std::to_string(r) + " j=" + std::to_string(j); });
    }
    BkWord z = z_word(m);
    Tableau zt = apply_word(f, t, z);
    zinv(apply_word(f, zt, z) == t, who);
    for (int l = 1; l < m; ++l) {
      int k = m - l;
      auto at = [&] { return who() + " split " + std::to_string(l) + "+" + std::to_string(k); };
      tinv(apply_word(f, apply_word(f, t, t_word(k, l)), t_word(l, k)) == t, at);
      BkWord rhs = z_word(k);
      for (int x : t_word(l, k)) rhs.push_back(x);
      for (int x : z_word(l)) rhs.push_back(x);
      fact(apply_word(f, t, rhs) == zt, at);
    }
  }
  return {inv.done(), comm.done(), wt.done(), zinv.done(), tinv.done(), fact.done()};
}

std::vector<PropertyResult> oracle_equivalence(const SuiteConfig& cfg) {
  BkFn f = bk_under_test(cfg);
  Check bkc("bk = naive_bk"), jdt("psi = naive_jdt"), conf("jeu de taquin corner-order independent"),
      rskc("rsk = naive_rsk"), inv("rsk_inverse round trip"), bur("burge = naive_burge"),
      hg("hillman_grassl inverted by hook removal");
  for (const Tableau& t : oracle::tableau_suite(cfg.bounds)) {
    auto who = [&] { return show(t); };
    for (int r = 1; r < t.alphabet(); ++r)
      bkc(f(t, r) == oracle::naive_bk(t, r), [&] { return who() + " r=" + std::to_string(r); });
    Tableau j = oracle::naive_jdt(t);
    jdt(psi(t) == j, who);
    conf(oracle::naive_jdt(t, oracle::CornerOrder::Last) == j, who);
  }
  for (const IntMatrix& v : matrices(cfg)) {
    auto who = [&] { return show_matrix(v); };
    auto pq = oracle::naive_rsk(v);
    rskc(rsk(v) == pq, who);
    inv.guarded([&] { return oracle::rsk_inverse(pq.first, pq.second) == v; }, who);
    bur(burge(v) == oracle::naive_burge(v), who);
  }
  for (const Partition& lam : {Partition{2, 1}, Partition{2, 2}, Partition{3, 1}, Partition{3, 2}})
    for (const auto& fn : oracle::plane_suite(lam, cfg.matrix_max))
      hg.guarded([&] { return oracle::naive_hillman_grassl_inverse(hillman_grassl(fn)) == fn; },
                 [&] { return "shape " + to_string(lam); });
  return {bkc.done(), jdt.done(), conf.done(), rskc.done(), inv.done(), bur.done(), hg.done()};
}

std::vector<PropertyResult> proposition_suite(const SuiteConfig& cfg) {
  Check evac("evacuation equals the bk word z_m"), rot("evacuation rectifies the rotation"),
      stair("staircase tableaux rectify to rsk"), sw("switching with Can(mu) rectifies"),
      plr("phiLR projects to psi and inverts"), tr("rsk of the transpose swaps"), rot8("rsk of the rotation evacuates"),
      lrc("LR iff canonical rectification"), r1("rho1 is an involutive fundamental symmetry"),
      lrp("switching preserves LR pairs"), ch("chi is a weight-reversing involution"),
      gam("gamma is a bijection onto CF*"), ta("tau is a bijection onto CF"),
      r2("rho2 and rho2' are inverse fundamental symmetries"), oct("octahedral map is a bijection");
  for (const Tableau& t : oracle::tableau_suite(cfg.bounds)) {
    auto who = [&] { return show(t); };
    evac(xi(t) == apply_bk_word(t, z_word(t.alphabet())) && xi(xi(t)) == t &&
             xi(t).weight() == reversed(t.weight()),
         who);
    if (t.is_normal()) rot(xi_normal(t) == oracle::naive_jdt(rotate180(t)), who);
    sw(zeta(Tableau::canonical(t.inner()), t).first == oracle::naive_jdt(t), who);
    plr.guarded(
        [&] {
          auto [a1, c1] = phi_lr(t);
          return a1 == psi(t) && is_lr(c1) && phi_lr_inverse(a1, c1) == t;
        },
        who);
    Partition w = trim(t.weight());
    lrc(is_lr(t) == (is_partition(w) && psi(t) == Tableau::canonical(w)), who);
    Tableau c = chi(t);
    ch(chi(c) == t && trim(c.weight()) == trim(reversed(t.weight())) && (!t.is_normal() || c == xi(t)), who);
  }
  for (const IntMatrix& v : matrices(cfg)) {
    auto who = [&] { return show_matrix(v); };
    auto pq = rsk(v);
    auto [y, x] = rsk_staircase(v);
    stair(oracle::naive_jdt(y) == pq.first && oracle::naive_jdt(x) == pq.second, who);
    auto t = rsk(v.transpose());
    tr(t.first == pq.second && t.second == pq.first, who);
    auto s = rsk(v.rotate180());
    int k = v.rows();
    rot8(s.first == xi(pq.first.with_alphabet(k)) && s.second == xi(pq.second.with_alphabet(k)), who);
  }
  for (const Tableau& a : oracle::lr_suite(cfg.lr_size, cfg.lr_length)) {
    auto who = [&] { return show(a); };
    Partition lam = trim(a.outer()), mu = trim(a.inner()), nu = trim(a.weight());
    auto symmetric = [&](const Tableau& b) {
      return is_lr(b) && same_partition(b.outer(), lam) && same_partition(b.inner(), nu) &&
             same_partition(b.weight(), mu);
    };
    r1.guarded([&] { Tableau b = rho1(a); return symmetric(b) && rho1(b) == a; }, who);
    gam.guarded(
        [&] {
          Tableau g = gamma_map(a);
          return lr_membership(g, {lam, mu, nu}, true) && gamma_inverse(g, nu) == a &&
                 lr_membership(xi_normal(g), {lam, mu, nu}, false);
        },
        who);
    ta.guarded(
        [&] {
          Tableau e = tau_map(a);
          return lr_membership(e, {lam, nu, mu}, false) && tau_inverse(e, mu) == a;
        },
        who);
    r2.guarded([&] { Tableau b = rho2(a); return symmetric(b) && rho2_prime(b) == a; }, who);
  }
  for (const auto& [b, a] : lr_pairs(cfg.bounds.max_size, cfg.bounds.max_length)) {
    auto [a1, b1] = zeta(b, a);
    lrp(is_lr(a1) && is_lr(b1) && zeta_lr(b, a) == std::make_pair(a1, b1),
        [&] { return show(b) + ", " + show(a); });
  }
  ProbeReport o = conjecture3_count_probe(std::min(cfg.bounds.max_size, 6));
  PropertyResult octr = oct.done();
  octr.instances = o.instances;
  if (!o.mismatches.empty()) octr.counterexample = o.mismatches.front();
  return {evac.done(), rot.done(), stair.done(), sw.done(), plr.done(), tr.done(), rot8.done(), lrc.done(),
          r1.done(), lrp.done(), ch.done(), gam.done(), ta.done(), r2.done(), octr};
}

std::vector<PropertyResult> reduction_suite(const SuiteConfig& cfg) {
  std::vector<PropertyResult> out;
  for (const Reduction& r : registry()) {
    Check c(r.name + " reproduces " + r.source + " with " + std::to_string(r.declared_cost) + " " + r.base + " calls");
    const MapFn& base = reference_map(r.base);
    const MapFn& source = reference_map(r.source);
    for (const Value& x : instances_for(r, cfg.bounds)) {
      int64_t calls = -1;
      c.guarded(
          [&] {
            auto ev = evaluate(*r.circuit, base, x);
            calls = ev.report.base_calls;
            return ev.output == source(x) && calls == r.declared_cost && cost(*r.circuit) == r.declared_cost;
          },
          [&] { return describe(x) + " calls=" + std::to_string(calls); });
    }
    out.push_back(c.done());
  }
  return out;
}

std::vector<BenchRow> bench_xi(const std::vector<int>& ks, int repetitions) {
  std::vector<BenchRow> out;
  for (int k : ks) {
    Partition stair;
    for (int i = k; i >= 1; --i) stair.push_back(i);
    Tableau c = Tableau::canonical(stair, k);
    std::vector<double> times;
    int64_t guard = 0;
    for (int rep = 0; rep < std::max(repetitions, 1); ++rep) {
      auto t0 = std::chrono::steady_clock::now();
      Tableau x = xi_normal(c);
      auto t1 = std::chrono::steady_clock::now();
      guard += x.size();
      times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    if (guard < 0) fail(ErrorKind::Overflow, "bench");
    std::sort(times.begin(), times.end());
    out.push_back({k, times[times.size() / 2]});
  }
  return out;
}

}  // namespace yt::harness
