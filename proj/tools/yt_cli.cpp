#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "yt/bender_knuth.hpp"
#include "yt/bijections.hpp"
#include "yt/circuits.hpp"
#include "yt/harness.hpp"
#include "yt/io.hpp"
#include "yt/oracles.hpp"

using namespace yt;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, DomainError = 1, ParseFailure = 2, VerifyFailure = 3 };

struct Options {
  std::string in, in2, out;
  std::string format = "text";
  int max_size = -1;
  int max_value = -1;
  int max_length = -1;
  uint64_t seed = 20240601;
};

Format fmt(const Options& o) { return o.format == "json" ? Format::Json : Format::Text; }

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream f(path);
  if (!f) fail(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::vector<Item> read_inputs(const Options& o) {
  std::vector<Item> items;
  if (o.in.empty()) throw ParseError(0, 0, "--in is required");
  items = parse_items(slurp(o.in), fmt(o));
  if (!o.in2.empty()) {
    auto more = parse_items(slurp(o.in2), fmt(o));
    items.insert(items.end(), more.begin(), more.end());
  }
  return items;
}

Value to_value(const Item& it) {
  return std::visit([](const auto& x) { return Value(x); }, it);
}

Value input_value(const std::vector<Item>& items) {
  if (items.size() == 1) return to_value(items[0]);
  ValueList l;
  for (const auto& it : items) l.push_back(to_value(it));
  return Value(std::move(l));
}

void collect(const Value& v, std::vector<Item>& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ValueList>) {
          for (const auto& y : x) collect(y, out);
        } else if constexpr (std::is_same_v<T, Ints>) {
          fail(ErrorKind::TypeMismatch, "integer lists have no output format");
        } else {
          out.emplace_back(x);
        }
      },
      v.v);
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  f << text;
}

void emit(const Options& o, const Value& v) {
  std::vector<Item> items;
  collect(v, items);
  write_output(o, emit_items(items, fmt(o)));
}

const Tableau& need_tableau(const std::vector<Item>& items, size_t i) {
  if (items.size() <= i || !std::holds_alternative<Tableau>(items[i]))
    fail(ErrorKind::TypeMismatch, "input " + std::to_string(i + 1) + " must be a tableau");
  return std::get<Tableau>(items[i]);
}

const std::map<std::string, std::string> kAliases = {
    {"rsk", "phi"}, {"octahedral", "varsigma"}, {"hillman_grassl", "theta"}, {"xi_normal", "xiN"}};

int cmd_apply(const Options& o, const std::string& name, int r, const std::vector<int>& indices,
              const std::vector<int64_t>& part) {
  auto items = read_inputs(o);
  auto t = [&](size_t i) -> const Tableau& { return need_tableau(items, i); };
  Value out;
  if (name == "bk") {
    out = bk(t(0), r);
  } else if (name == "bkword") {
    out = apply_bk_word(t(0), indices);
  } else if (name == "rho2prime") {
    out = rho2_prime(t(0));
  } else if (name == "rho3") {
    out = rho3(t(0));
  } else if (name == "gamma") {
    out = gamma_map(t(0));
  } else if (name == "gamma_inverse") {
    out = gamma_inverse(t(0), part);
  } else if (name == "tau") {
    out = tau_map(t(0));
  } else if (name == "tau_inverse") {
    out = tau_inverse(t(0), part);
  } else if (name == "rotate") {
    out = rotate180(t(0));
  } else if (name == "evacuate_canonical") {
    out = evacuation_of_canonical(trim(t(0).outer()), t(0).alphabet());
  } else if (name == "phiLR_inverse") {
    out = phi_lr_inverse(t(0), t(1));
  } else if (name == "rsk_inverse") {
    out = oracle::rsk_inverse(t(0), t(1));
  } else {
    auto alias = kAliases.find(name);
    const std::string& map = alias == kAliases.end() ? name : alias->second;
    auto names = map_names();
    if (std::find(names.begin(), names.end(), map) == names.end()) fail(ErrorKind::MapMismatch, "unknown map '" + name + "'");
    out = reference_map(map)(input_value(items));
  }
  emit(o, out);
  return Ok;
}

json report_json(const CostReport& r) {
  double ratio = r.input_bits ? static_cast<double>(r.output_bits) / static_cast<double>(r.input_bits) : 0.0;
  return {{"base_calls", r.base_calls}, {"input_bits", r.input_bits}, {"output_bits", r.output_bits}, {"size_ratio", ratio}};
}

int cmd_reduce(const Options& o, const std::string& source, const std::string& base) {
  auto items = read_inputs(o);
  Reduction r = reduce_via(source, base);
  Evaluation ev = evaluate(*r.circuit, reference_map(base), input_value(items));
  std::vector<Item> outs;
  collect(ev.output, outs);
  json rep = report_json(ev.report);
  rep["circuit"] = r.name;
  rep["static_cost"] = cost(*r.circuit);
  if (fmt(o) == Format::Json) {
    write_output(o, json{{"output", json::parse(emit_items(outs, Format::Json))}, {"report", rep}}.dump() + "\n");
  } else {
    write_output(o, emit_items(outs, Format::Text) + "\ncost: " + rep.dump() + "\n");
  }
  return Ok;
}

int cmd_enumerate(const Options& o, const std::vector<int64_t>& shape, const std::vector<int64_t>& inner) {
  int k = o.max_value < 0 ? static_cast<int>(length(shape)) : o.max_value;
  std::vector<Item> items;
  oracle::for_each_tableau(shape, inner, k, [&](const Tableau& t) { items.emplace_back(t); });
  write_output(o, emit_items(items, fmt(o)));
  return Ok;
}

int cmd_count(const Options& o, const std::vector<int64_t>& lambda, const std::vector<int64_t>& mu,
              const std::vector<int64_t>& nu) {
  int64_t c = oracle::lr_coefficient(lambda, pad(mu, lambda.size()), nu);
  if (fmt(o) == Format::Json)
    write_output(o, json{{"lambda", lambda}, {"mu", mu}, {"nu", nu}, {"count", c}}.dump() + "\n");
  else
    write_output(o, std::to_string(c) + "\n");
  return Ok;
}

harness::SuiteConfig suite_config(const Options& o) {
  harness::SuiteConfig cfg;
  if (o.max_size >= 0) {
    cfg.bounds.max_size = o.max_size;
    cfg.lr_size = std::min(o.max_size + 2, 8);
  }
  if (o.max_value >= 0) cfg.bounds.max_value = o.max_value;
  if (o.max_length >= 0) {
    cfg.bounds.max_length = o.max_length;
    cfg.lr_length = o.max_length + 1;
  }
  if (o.max_size == 0 || o.max_value == 0) {
    cfg.matrix_max = 0;
    cfg.lr_size = 0;
  }
  return cfg;
}

// Normal tableaux beyond the exhaustive bounds, from random recording matrices.
std::vector<harness::PropertyResult> fuzz(uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  harness::PropertyResult evac{"sampled: evacuation involution, rectified rotation, chi", 0, ""};
  harness::PropertyResult bkp{"sampled: bk = naive_bk", 0, ""};
  for (int n = 0; n < samples; ++n) {
    int rows = 1 + static_cast<int>(rng() % 6), k = rows + static_cast<int>(rng() % 4);
    Rows c(rows, std::vector<int64_t>(k, 0));
    for (int i = 0; i < rows; ++i)
      for (int j = i; j < k; ++j) c[i][j] = static_cast<int64_t>(rng() % 3);
    Tableau t;
    try {
      t = Tableau::from_recording({}, c);
    } catch (const Error&) {
      continue;
    }
    ++evac.instances;
    Tableau x = xi(t);
    if (evac.pass() && !(xi(x) == t && psi(rotate180(t)) == x && chi(t) == x)) evac.counterexample = to_json(t);
    for (int r = 1; r < t.alphabet(); ++r) {
      ++bkp.instances;
      if (bkp.pass() && bk(t, r) != oracle::naive_bk(t, r)) bkp.counterexample = to_json(t) + " r=" + std::to_string(r);
    }
  }
  return {evac, bkp};
}

int cmd_verify(const Options& o, const std::vector<std::string>& groups, bool inject_fault) {
  harness::SuiteConfig cfg = suite_config(o);
  cfg.inject_bk_fault = inject_fault;
  using Runner = std::vector<harness::PropertyResult> (*)(const harness::SuiteConfig&);
  const std::vector<std::pair<std::string, Runner>> all = {{"bk", harness::bk_relations},
                                                          {"oracles", harness::oracle_equivalence},
                                                          {"propositions", harness::proposition_suite},
                                                          {"reductions", harness::reduction_suite}};
  std::vector<std::pair<std::string, std::vector<harness::PropertyResult>>> results;
  if (groups.empty() || std::find(groups.begin(), groups.end(), "fuzz") != groups.end())
    results.emplace_back("fuzz", fuzz(o.seed, o.max_size == 0 ? 0 : 300));
  std::ostringstream lines;
  int failed = 0, total_props = 0;
  for (const auto& [group, run] : all) {
    if (!groups.empty() && std::find(groups.begin(), groups.end(), group) == groups.end()) continue;
    results.emplace_back(group, run(cfg));
  }
  for (const auto& [group, props] : results) {
    for (const auto& p : props) {
      ++total_props;
      json rec{{"group", group}, {"property", p.name}, {"instances", p.instances}, {"pass", p.pass()}};
      if (!p.pass()) {
        rec["counterexample"] = p.counterexample;
        ++failed;
      }
      lines << rec.dump() << "\n";
      std::cerr << (p.pass() ? "PASS " : "FAIL ") << group << ": " << p.name << " (" << p.instances << ")\n";
    }
  }
  write_output(o, lines.str());
  std::cerr << total_props - failed << "/" << total_props << " properties hold\n";
  return failed ? VerifyFailure : Ok;
}

int cmd_bench(const Options& o, std::vector<int> ks, int reps) {
  auto rows = harness::bench_xi(ks, reps);
  json out = json::array();
  std::ostringstream text;
  text << "k\tmedian_ms\tratio\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    double ratio = i ? rows[i].median_ms / rows[i - 1].median_ms : 0.0;
    json r{{"map", "xiN"}, {"k", rows[i].k}, {"median_ms", rows[i].median_ms}};
    if (i) r["ratio"] = ratio;
    out.push_back(r);
    text << rows[i].k << "\t" << rows[i].median_ms << "\t" << (i ? std::to_string(ratio) : "-") << "\n";
  }
  write_output(o, fmt(o) == Format::Json ? out.dump() + "\n" : text.str());
  return Ok;
}

int cmd_conjecture(const Options& o, int which) {
  int n = o.max_size >= 0 ? o.max_size : (which == 1 ? 8 : 6);
  harness::ProbeReport rep =
      which == 1 ? harness::conjecture1_probe(n, o.max_length >= 0 ? o.max_length : 4) : harness::conjecture3_count_probe(n);
  json out{{"conjecture", which}, {"max_size", n}, {"instances", rep.instances}, {"mismatches", rep.mismatches}};
  write_output(o, out.dump() + "\n");
  std::cerr << rep.mismatches.size() << " mismatches over " << rep.instances << " instances\n";
  return rep.mismatches.empty() ? Ok : VerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Young tableau bijections and reduction circuits"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--in", o.in, "input file ('-' for stdin)");
    c->add_option("--in2", o.in2, "second input file");
    c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    c->add_option("--out", o.out, "write output here instead of stdout");
    c->add_option("--max-size", o.max_size, "bound on |lambda|");
    c->add_option("--max-value", o.max_value, "bound on entries");
    c->add_option("--max-length", o.max_length, "bound on the number of rows");
    c->add_option("--seed", o.seed, "seed for sampled inputs");
  };

  std::string map_name;
  int r = 1;
  std::vector<int> indices;
  std::vector<int64_t> part;
  auto* apply = app.add_subcommand("apply", "apply a map to the input");
  apply->add_option("map", map_name, "map name")->required();
  apply->add_option("--r", r, "generator index for bk");
  apply->add_option("--indices", indices, "generator word for bkword, leftmost factor first");
  apply->add_option("--partition", part, "nu for gamma_inverse, mu for tau_inverse");
  common(apply);

  std::string source, base;
  auto* reduce = app.add_subcommand("reduce", "compute a map through the cheapest circuit over another");
  reduce->add_option("source", source)->required();
  reduce->add_option("--via", base)->required();
  common(reduce);

  std::vector<int64_t> shape, inner;
  auto* enumerate = app.add_subcommand("enumerate", "list YT(shape/inner; max-value)");
  enumerate->add_option("--shape", shape)->required();
  enumerate->add_option("--inner", inner);
  common(enumerate);

  std::string what;
  std::vector<int64_t> lambda, mu, nu;
  auto* count = app.add_subcommand("count", "Littlewood-Richardson coefficient");
  count->add_option("what", what)->required()->check(CLI::IsMember({"lr"}));
  count->add_option("--lambda", lambda)->required();
  count->add_option("--mu", mu);
  count->add_option("--nu", nu);
  common(count);

  std::vector<std::string> groups;
  bool inject = false;
  auto* verify = app.add_subcommand("verify", "run the property suites; JSON lines per property");
  verify->add_option("--suite", groups, "bk, oracles, propositions, reductions, fuzz");
  verify->add_flag("--inject-bk-fault", inject, "break s_1 to exercise failure reporting");
  common(verify);

  std::vector<int> ks{32, 64, 128, 256};
  int reps = 5;
  auto* bench = app.add_subcommand("bench", "time xiN on staircase canonical tableaux");
  bench->add_option("--k", ks);
  bench->add_option("--repetitions", reps);
  common(bench);

  int which = 1;
  auto* conj = app.add_subcommand("conjecture", "run a conjecture probe");
  conj->add_option("which", which)->required()->check(CLI::IsMember({1, 3}));
  common(conj);

  std::string emit_what = "dot";
  auto* graph = app.add_subcommand("graph", "export the reduction graph");
  graph->add_option("--emit", emit_what)->check(CLI::IsMember({"dot"}));
  common(graph);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? Ok : ParseFailure;
  }

  try {
    if (*apply) return cmd_apply(o, map_name, r, indices, part);
    if (*reduce) return cmd_reduce(o, source, base);
    if (*enumerate) return cmd_enumerate(o, shape, inner);
    if (*count) return cmd_count(o, lambda, mu, nu);
    if (*verify) return cmd_verify(o, groups, inject);
    if (*bench) return cmd_bench(o, ks, reps);
    if (*conj) return cmd_conjecture(o, which);
    if (*graph) {
      write_output(o, to_dot(registry()));
      return Ok;
    }
  } catch (const ParseError& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return ParseFailure;
  } catch (const Error& e) {
    std::cerr << error_name(e.kind()) << ": " << e.detail() << "\n";
    return e.kind() == ErrorKind::ParseError ? ParseFailure : DomainError;
  }
  return Ok;
}
