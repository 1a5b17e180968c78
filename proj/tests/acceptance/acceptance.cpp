#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "yt/bijections.hpp"
#include "yt/circuits.hpp"
#include "yt/harness.hpp"
#include "yt/oracles.hpp"

using namespace yt;

namespace {

constexpr double kBkSeconds = 120.0;
constexpr double kBenchSeconds = 60.0;
constexpr double kRatioLow = 5.0;
constexpr double kRatioHigh = 12.0;
constexpr double kSizeRatio = 4.0;
constexpr int64_t kGraphMax = 36;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string summarize(const std::vector<harness::PropertyResult>& props, Outcome& o) {
  int64_t n = 0;
  std::string bad;
  for (const auto& p : props) {
    n += p.instances;
    if (!p.pass()) {
      o.pass = false;
      if (bad.empty()) bad = p.name + ": " + p.counterexample;
    }
  }
  return std::to_string(props.size()) + " properties, " + std::to_string(n) + " checks" +
         (bad.empty() ? "" : "; first failure " + bad);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome bk_relations() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto props = harness::bk_relations({});
  double s = seconds_since(t0);
  o.detail = summarize(props, o) + ", " + std::to_string(s) + " s";
  if (s >= kBkSeconds) o.pass = false;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  o.detail = summarize(harness::oracle_equivalence({}), o);
  return o;
}

Outcome propositions() {
  Outcome o;
  o.detail = summarize(harness::proposition_suite({}), o);
  return o;
}

Outcome reductions() {
  Outcome o;
  auto props = harness::reduction_suite({});
  if (props.size() < 18) o.pass = false;
  o.detail = summarize(props, o);
  return o;
}

Outcome constant_36() {
  Outcome o;
  auto g = build_graph(registry());
  int64_t worst = 0;
  std::string at;
  for (const auto& a : theorem_maps())
    for (const auto& b : theorem_maps()) {
      if (a == b) continue;
      int64_t c = min_cost(g, a, b);
      if (c > worst) {
        worst = c;
        at = a + " via " + b;
      }
    }
  int64_t chi_rho1 = min_cost(g, "chi", "rho1");
  o.pass = worst == kGraphMax && chi_rho1 == kGraphMax;
  o.detail = "max " + std::to_string(worst) + " (" + at + "), chi via rho1 = " + std::to_string(chi_rho1);
  return o;
}

Outcome cubic_scaling() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto rows = harness::bench_xi({32, 64, 128, 256}, 5);
  double s = seconds_since(t0);
  char buf[64];
  for (size_t i = 1; i < rows.size(); ++i) {
    double r = rows[i].median_ms / rows[i - 1].median_ms;
    if (r < kRatioLow || r > kRatioHigh) o.pass = false;
    std::snprintf(buf, sizeof buf, "%s%d/%d: %.2f", i > 1 ? ", " : "", rows[i].k, rows[i - 1].k, r);
    o.detail += buf;
  }
  std::snprintf(buf, sizeof buf, "; k=256 median %.1f ms, total %.1f s", rows.back().median_ms, s);
  o.detail += buf;
  if (s >= kBenchSeconds) o.pass = false;
  return o;
}

Outcome conjecture1() {
  Outcome o;
  auto rep = harness::conjecture1_probe(8, 4);
  o.pass = rep.instances > 0 && rep.mismatches.empty();
  o.detail = std::to_string(rep.instances) + " LR tableaux, " + std::to_string(rep.mismatches.size()) + " mismatches" +
             (rep.mismatches.empty() ? "" : "; first " + rep.mismatches.front());
  return o;
}

Outcome count_symmetries() {
  Outcome o;
  auto sym = harness::count_symmetry_probe(8, 8);
  auto oct = harness::conjecture3_count_probe(6);
  o.pass = sym.mismatches.empty() && oct.mismatches.empty() && sym.instances > 0 && oct.instances > 0;
  o.detail = std::to_string(sym.instances) + " triples, " + std::to_string(oct.instances) + " octahedral groups";
  if (!sym.mismatches.empty()) o.detail += "; " + sym.mismatches.front();
  if (!oct.mismatches.empty()) o.detail += "; " + oct.mismatches.front();
  return o;
}

Outcome hillman_grassl_check() {
  Outcome o;
  int64_t n = 0;
  for (const Partition& lam : {Partition{2, 1}, Partition{2, 2}, Partition{3, 1}}) {
    std::set<std::vector<std::vector<int64_t>>> seen;
    for (const auto& f : oracle::plane_suite(lam, 2)) {
      ++n;
      PlaneFunction g = hillman_grassl(f);
      bool ok = g.is_reverse_plane_partition() && seen.insert(g.values).second;
      for (int c = f.min_diagonal(); c <= f.max_diagonal(); ++c) ok = ok && g.diagonal_sum(c) == f.rectangular_sum(c);
      if (!ok && o.pass) {
        o.pass = false;
        o.detail = "failure on shape " + to_string(lam) + "; ";
      }
    }
  }
  o.detail += std::to_string(n) + " fillings";
  return o;
}

Outcome size_neutrality() {
  Outcome o;
  double worst = 0;
  std::string at;
  for (const auto& name : map_names()) {
    const MapFn& f = reference_map(name);
    double m = 0;
    for (const Value& x : harness::instances(name, {})) {
      int64_t in = bit_size(x);
      if (in > 0) m = std::max(m, static_cast<double>(bit_size(f(x))) / static_cast<double>(in));
    }
    if (m >= kSizeRatio) o.pass = false;
    if (m > worst) {
      worst = m;
      at = name;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "max output/input bits %.3f (%s) over %zu maps", worst, at.c_str(), map_names().size());
  o.detail = buf;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"BK relation suite", bk_relations},
      {"oracle equivalence", oracle_equivalence},
      {"structural propositions", propositions},
      {"reduction circuits and call counts", reductions},
      {"reduction graph constant 36", constant_36},
      {"cubic scaling of xiN", cubic_scaling},
      {"rho1 = rho2 = rho2' = rho3", conjecture1},
      {"count symmetries and octahedral counts", count_symmetries},
      {"Hillman-Grassl profiles and injectivity", hillman_grassl_check},
      {"size neutrality", size_neutrality},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %zu. %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
