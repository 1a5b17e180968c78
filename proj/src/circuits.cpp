#include "yt/circuits.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "yt/bijections.hpp"
#include "yt/error.hpp"

namespace yt {

// ---------------------------------------------------------------- values

namespace {

template <class T>
const T& get_as(const Value& v, const char* what) {
  if (const T* p = std::get_if<T>(&v.v)) return *p;
  fail(ErrorKind::TypeMismatch, std::string("expected ") + what + ", got " + describe(v));
}

}  // namespace

const Tableau& Value::tableau() const { return get_as<Tableau>(*this, "a tableau"); }
const IntMatrix& Value::matrix() const { return get_as<IntMatrix>(*this, "a matrix"); }
const PlaneFunction& Value::plane() const { return get_as<PlaneFunction>(*this, "a plane function"); }
const Ints& Value::ints() const { return get_as<Ints>(*this, "an integer list"); }
const ValueList& Value::list() const { return get_as<ValueList>(*this, "a list"); }

const Value& Value::operator[](size_t i) const {
  const ValueList& l = list();
  if (i >= l.size()) fail(ErrorKind::TypeMismatch, "list of " + std::to_string(l.size()) + " has no element " + std::to_string(i));
  return l[i];
}

bool operator==(const Value& a, const Value& b) {
  if (a.v.index() != b.v.index()) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return x == std::get<T>(b.v);
      },
      a.v);
}

Value make_pair(Value a, Value b) { return Value(ValueList{std::move(a), std::move(b)}); }
Value from_pair(const TableauPair& p) { return make_pair(p.first, p.second); }

std::string describe(const Value& v) {
  switch (v.v.index()) {
    case 0: return "tableau";
    case 1: return "matrix";
    case 2: return "plane function";
    case 3: return "integer list";
    default: return "list of " + std::to_string(std::get<ValueList>(v.v).size());
  }
}

namespace {

void flatten(const Value& v, std::vector<int64_t>& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Tableau>) {
          // Rows of the skew shape, columns 0..k.
          Tableau t = x.trimmed();
          for (int i = 0; i < t.rows(); ++i)
            for (int j = 0; j <= t.alphabet(); ++j) out.push_back(t.at(i, j));
        } else if constexpr (std::is_same_v<T, IntMatrix>) {
          for (int i = 0; i < x.rows(); ++i)
            for (int j = 0; j < x.cols(); ++j) out.push_back(x.at(i, j));
          for (int64_t s : x.row_sums()) out.push_back(s);
          for (int64_t s : x.col_sums()) out.push_back(s);
        } else if constexpr (std::is_same_v<T, PlaneFunction>) {
          out.insert(out.end(), x.shape.begin(), x.shape.end());
          for (const auto& r : x.values) out.insert(out.end(), r.begin(), r.end());
        } else if constexpr (std::is_same_v<T, Ints>) {
          out.insert(out.end(), x.begin(), x.end());
        } else {
          for (const Value& e : x) flatten(e, out);
        }
      },
      v.v);
}

int ceil_log2(int64_t m) {
  if (m <= 1) return 0;
  return 64 - __builtin_clzll(static_cast<unsigned long long>(m - 1));
}

}  // namespace

int64_t bit_size(const Value& v) {
  std::vector<int64_t> flat;
  flatten(v, flat);
  if (flat.empty()) return 0;
  int64_t m = *std::max_element(flat.begin(), flat.end());
  return static_cast<int64_t>(flat.size()) * (1 + ceil_log2(m));
}

// --------------------------------------------------------------- circuits

CircuitPtr step(std::string name, StepFn fn) {
  auto c = std::make_shared<Circuit>();
  c->kind = Circuit::Kind::Step;
  c->name = std::move(name);
  c->fn = std::move(fn);
  return c;
}

CircuitPtr identity() {
  return step("id", [](const Value& v) { return v; });
}

CircuitPtr base_call() {
  auto c = std::make_shared<Circuit>();
  c->kind = Circuit::Kind::Base;
  c->name = "base";
  return c;
}

CircuitPtr trivial(std::string name, StepFn pre, StepFn post) {
  auto c = std::make_shared<Circuit>();
  c->kind = Circuit::Kind::Trivial;
  c->name = std::move(name);
  c->pre = std::move(pre);
  c->post = std::move(post);
  return c;
}

CircuitPtr seq(CircuitPtr a, CircuitPtr b) {
  auto c = std::make_shared<Circuit>();
  c->kind = Circuit::Kind::Seq;
  c->name = "seq";
  c->first = std::move(a);
  c->second = std::move(b);
  return c;
}

CircuitPtr seq(std::vector<CircuitPtr> parts) {
  if (parts.empty()) return identity();
  CircuitPtr c = parts.back();
  for (size_t i = parts.size() - 1; i-- > 0;) c = seq(parts[i], c);
  return c;
}

CircuitPtr par(std::string name, StepFn pre, CircuitPtr a, CircuitPtr b, StepFn post) {
  auto c = std::make_shared<Circuit>();
  c->kind = Circuit::Kind::Par;
  c->name = std::move(name);
  c->pre = std::move(pre);
  c->post = std::move(post);
  c->first = std::move(a);
  c->second = std::move(b);
  return c;
}

CircuitPtr staged(std::string name, StepFn pre, StepFn post) {
  return par(std::move(name), std::move(pre), base_call(), identity(), std::move(post));
}

int64_t cost(const Circuit& c) {
  switch (c.kind) {
    case Circuit::Kind::Step: return 0;
    case Circuit::Kind::Base:
    case Circuit::Kind::Trivial: return 1;
    default: return cost(*c.first) + cost(*c.second);
  }
}

namespace {

struct Interpreter {
  const MapFn& base;
  int64_t calls = 0;

  Value guarded(const StepFn& f, const Value& in, const std::string& path) {
    try {
      return f(in);
    } catch (const Error& e) {
      if (e.detail().find(" [at ") != std::string::npos) throw;
      throw Error(e.kind(), e.detail() + " [at " + path + "]");
    }
  }

  Value call_base(const Value& in, const std::string& path) {
    ++calls;
    return guarded(base, in, path + "/base");
  }

  Value run(const Circuit& c, const Value& in, const std::string& path) {
    const std::string here = path.empty() ? c.name : path + "/" + c.name;
    switch (c.kind) {
      case Circuit::Kind::Step:
        return guarded(c.fn, in, here);
      case Circuit::Kind::Base:
        return call_base(in, path);
      case Circuit::Kind::Trivial: {
        Value x = guarded(c.pre, in, here + "/pre");
        Value y = call_base(x, here);
        return guarded(c.post, y, here + "/post");
      }
      case Circuit::Kind::Seq: {
        Value x = run(*c.first, in, here + "[0]");
        return run(*c.second, x, here + "[1]");
      }
      case Circuit::Kind::Par: {
        Value x = guarded(c.pre, in, here + "/pre");
        const ValueList& parts = x.list();
        if (parts.size() != 2) fail(ErrorKind::TypeMismatch, "parallel split must produce two values [at " + here + "]");
        Value a = run(*c.first, parts[0], here + "[0]");
        Value b = run(*c.second, parts[1], here + "[1]");
        return guarded(c.post, Value(ValueList{std::move(a), std::move(b)}), here + "/post");
      }
    }
    fail(ErrorKind::TypeMismatch, "unknown circuit node");
  }
};

}  // namespace

Evaluation evaluate(const Circuit& c, const MapFn& base, const Value& input) {
  Interpreter it{base};
  Evaluation e;
  e.output = it.run(c, input, "");
  e.report.base_calls = it.calls;
  e.report.input_bits = bit_size(input);
  e.report.output_bits = bit_size(e.output);
  return e;
}

// ------------------------------------------------------- reference maps

namespace {

const Tableau& T(const Value& v) { return v.tableau(); }

Value map_phi(const Value& v) { return from_pair(rsk(v.matrix())); }
Value map_psi(const Value& v) { return psi(T(v)); }
Value map_phi_lr(const Value& v) { return from_pair(phi_lr(T(v))); }
Value map_zeta(const Value& v) { return from_pair(zeta(T(v[0]), T(v[1]))); }
Value map_zeta_n(const Value& v) { return from_pair(zeta_normal(T(v[0]), T(v[1]))); }
Value map_zeta_lr(const Value& v) { return from_pair(zeta_lr(T(v[0]), T(v[1]))); }
Value map_xi(const Value& v) { return xi(T(v)); }
Value map_xi_n(const Value& v) { return xi_normal(T(v)); }
Value map_chi(const Value& v) { return chi(T(v)); }
Value map_rho1(const Value& v) { return rho1(T(v)); }
Value map_rho2(const Value& v) { return rho2(T(v)); }
Value map_varsigma(const Value& v) { return from_pair(octahedral(T(v[0]), T(v[1]))); }
Value map_burge(const Value& v) { return from_pair(burge(v.matrix())); }
Value map_theta(const Value& v) { return hillman_grassl(v.plane()); }

const std::map<std::string, MapFn>& map_table() {
  static const std::map<std::string, MapFn> table = {
      {"phi", map_phi},       {"psi", map_psi},     {"phiLR", map_phi_lr}, {"zeta", map_zeta},
      {"zetaN", map_zeta_n},  {"zetaLR", map_zeta_lr}, {"xi", map_xi},    {"xiN", map_xi_n},
      {"chi", map_chi},       {"rho1", map_rho1},   {"rho2", map_rho2},    {"varsigma", map_varsigma},
      {"burge", map_burge},   {"theta", map_theta},
  };
  return table;
}

}  // namespace

const MapFn& reference_map(const std::string& name) {
  const auto& t = map_table();
  auto it = t.find(name);
  if (it == t.end()) fail(ErrorKind::MapMismatch, "no map named '" + name + "'");
  return it->second;
}

std::vector<std::string> map_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : map_table()) out.push_back(k);
  return out;
}

std::vector<std::string> theorem_maps() { return {"phi", "psi", "phiLR", "zeta", "xiN", "chi", "rho1", "rho2"}; }

// ------------------------------------------------------------ reductions

namespace {

Value ctx(const Value& arg, Value context) { return make_pair(arg, std::move(context)); }
int64_t ival(const Value& v) { return v.ints().at(0); }
Value ints1(int64_t x) { return Value(Ints{x}); }

int64_t first_part(const Partition& p) { return part(p, 0); }

Weight padded_weight(const Tableau& t, int k) { return pad(t.weight(), static_cast<size_t>(k)); }

// Suffix sums (x_2 + ... + x_k, x_3 + ... + x_k, ..., x_k, 0).
Partition suffix_sums(const Weight& x) {
  Partition out(x.size(), 0);
  int64_t s = 0;
  for (size_t i = x.size(); i-- > 0;) {
    out[i] = s;
    s = checked_add(s, x[i]);
  }
  return out;
}

// B on pi/mu and A on lambda/pi, switched through xi (or xiN) three times.
CircuitPtr zeta_by_three_xi(const std::string& tag) {
  auto s1 = staged(
      tag + ":xi(B)",
      [](const Value& in) {
        const Tableau& b = T(in[0]);
        const Tableau& a = T(in[1]);
        int k = std::max(b.alphabet(), a.alphabet());
        return ctx(b.with_alphabet(k), make_pair(a, ints1(k)));
      },
      [](const Value& r) { return r; });
  auto s2 = staged(
      tag + ":xi(B'*A)",
      [](const Value& in) {
        const Tableau& b1 = T(in[0]);
        const Tableau& a = T(in[1][0]);
        int k = static_cast<int>(ival(in[1][1]));
        Tableau c = attach(b1, shift_values(a.with_alphabet(k), k));
        return ctx(c, ints1(k));
      },
      [](const Value& r) {
        int k = static_cast<int>(ival(r[1]));
        auto [lo, hi] = split_at_value(T(r[0]), k);
        return Value(ValueList{lo, shift_values(hi, -k)});
      });
  auto s3 = staged(
      tag + ":xi(low)", [](const Value& in) { return ctx(in[0], in[1]); },
      [](const Value& r) { return make_pair(r[0], r[1]); });
  return seq({s1, s2, s3});
}

CircuitPtr phi_via_psi() {
  return par(
      "staircase",
      [](const Value& in) {
        auto [y, x] = rsk_staircase(in.matrix());
        return make_pair(y, x);
      },
      base_call(), base_call(), [](const Value& r) { return make_pair(r[0], r[1]); });
}

CircuitPtr psi_via_phi_lr() {
  return trivial("first component", [](const Value& in) { return in; }, [](const Value& r) { return r[0]; });
}

CircuitPtr phi_lr_via_zeta_n() {
  auto s1 = trivial(
      "switch with Can(mu)", [](const Value& in) { return make_pair(Tableau::canonical(T(in).inner()), in); },
      [](const Value& r) { return r; });
  auto s2 = staged(
      "switch with Can(sigma)",
      [](const Value& in) { return ctx(make_pair(Tableau::canonical(T(in[0]).outer()), in[1]), in[0]); },
      [](const Value& r) { return make_pair(r[1], r[0][1]); });
  return seq(s1, s2);
}

CircuitPtr xi_n_via_phi() {
  return trivial(
      "reversed recording matrix",
      [](const Value& in) {
        Tableau a = T(in).trimmed();
        int k = a.alphabet();
        if (a.rows() > k) fail(ErrorKind::SkewInputNotSupported, "more rows than letters");
        Rows c = a.recording();
        IntMatrix u(k, k);
        for (int i = 0; i < a.rows(); ++i)
          for (int j = 0; j < k; ++j) u.set(i, j, c[i][k - 1 - j]);
        return Value(u);
      },
      [](const Value& r) { return r[0]; });
}

CircuitPtr rho1_via_zeta_n() {
  return trivial(
      "switch with Can(mu)", [](const Value& in) { return make_pair(Tableau::canonical(T(in).inner()), in); },
      [](const Value& r) { return r[1]; });
}

CircuitPtr same_map() {
  return trivial("restriction", [](const Value& in) { return in; }, [](const Value& r) { return r; });
}

CircuitPtr zeta_via_zeta_lr() {
  return trivial(
      "pad to LR",
      [](const Value& in) {
        Tableau b = T(in[0]), a = T(in[1]);
        int k = std::max({b.rows(), a.rows(), b.alphabet(), a.alphabet()});
        b = b.with_rows(k).with_alphabet(k);
        a = a.with_rows(k).with_alphabet(k);
        Partition alpha = suffix_sums(padded_weight(a, k));
        Partition beta = suffix_sums(padded_weight(b, k));
        int64_t l1 = first_part(a.outer());
        int64_t a1 = first_part(alpha);
        Partition top(k);
        for (int i = 0; i < k; ++i) top[i] = l1 + a1 + beta[i];
        Tableau ah = stack_rows(Tableau::empty(top, k), compose(a, Tableau::canonical(alpha, k), l1, 0));
        Tableau bh = compose(b, Tableau::canonical(beta, k), l1 + a1, k, l1);
        return make_pair(bh, ah);
      },
      [](const Value& r) {
        const Tableau& ah = T(r[0]);
        const Tableau& bh = T(r[1]);
        int k = ah.rows() / 3;
        return make_pair(row_slice(ah, 2 * k, 3 * k), row_slice(bh, 2 * k, 3 * k));
      });
}

CircuitPtr zeta_lr_via_rho1() {
  auto s1 = staged(
      "C = rho1(B)",
      [](const Value& in) {
        Tableau b = T(in[0]), a = T(in[1]);
        int k = std::max({b.rows(), a.rows(), static_cast<int>(length(a.weight())), static_cast<int>(length(b.weight()))});
        // k, then the alphabets the output pair must carry
        return ctx(b.with_rows(k), make_pair(a.with_rows(k), Value(Ints{k, a.alphabet(), b.alphabet()})));
      },
      [](const Value& r) { return r; });
  auto s2 = staged(
      "E = rho1(D)",
      [](const Value& in) {
        const Tableau& c = T(in[0]);
        const Tableau& a = T(in[1][0]);
        int k = static_cast<int>(ival(in[1][1]));
        int64_t s = first_part(a.weight()), t = first_part(a.outer());
        Tableau g = Tableau::canonical(Partition(k, s), k);
        Tableau ch = compose(c.with_alphabet(k), g, t, 0);
        Tableau ah = stack_rows(Tableau::empty(Partition(k, t + s), 2 * k), shift_values(a.with_alphabet(k), k));
        return ctx(attach(ch, ah), in[1][1]);
      },
      [](const Value& r) {
        int k = static_cast<int>(ival(r[1]));
        auto [f, hi] = split_at_value(T(r[0]), k);
        Tableau b1 = row_slice(shift_values(hi, -k), k, 2 * k);
        return make_pair(f, make_pair(b1, r[1]));
      });
  auto s3 = staged(
      "H = rho1(F)", [](const Value& in) { return ctx(in[0], in[1]); },
      [](const Value& r) {
        const Ints& c = r[1][1].ints();
        int k = static_cast<int>(c.at(0));
        auto [lo, hi] = split_at_value(T(r[0]), k);
        (void)lo;
        Tableau a1 = row_slice(shift_values(hi, -k), k, 2 * k).with_alphabet(static_cast<int>(c.at(1)));
        return make_pair(a1, T(r[1][0]).with_alphabet(static_cast<int>(c.at(2))));
      });
  return seq({s1, s2, s3});
}

CircuitPtr zeta_via_zeta_n() {
  auto s1 = staged(
      "switch Can(mu)*B with A",
      [](const Value& in) {
        const Tableau& b = T(in[0]);
        const Tableau& a = T(in[1]);
        Tableau cm = Tableau::canonical(b.inner());
        int km = cm.alphabet();
        return ctx(make_pair(attach(cm, shift_values(b, km)), a), ints1(km));
      },
      [](const Value& r) {
        int km = static_cast<int>(ival(r[1]));
        auto [lo, hi] = split_at_value(T(r[0][1]), km);
        return Value(ValueList{r[0][0], lo, shift_values(hi, -km)});
      });
  auto s2 = staged(
      "switch A' with C'", [](const Value& in) { return ctx(make_pair(in[0], in[1]), in[2]); },
      [](const Value& r) { return make_pair(r[0][1], r[1]); });
  return seq(s1, s2);
}

CircuitPtr rho2_via_xi_n() {
  return staged(
      "gamma / tau inverse", [](const Value& in) { return ctx(gamma_map(T(in)), Value(Ints(T(in).weight()))); },
      [](const Value& r) { return tau_inverse(T(r[0]), r[1].ints()); });
}

CircuitPtr xi_n_via_rho2() {
  return trivial(
      "gamma inverse / tau",
      [](const Value& in) {
        const Tableau& a = T(in);
        int k = a.alphabet();
        Weight w = a.weight();
        // nu = (a_1 + ... + a_{k-1}, ..., a_1, 0)
        Partition nu(k, 0);
        for (int i = 0; i < k; ++i)
          for (int t = 0; t < k - 1 - i; ++t) nu[i] = checked_add(nu[i], w[t]);
        return Value(gamma_inverse(a.with_rows(std::max(a.rows(), k)), nu));
      },
      [](const Value& r) { return tau_map(T(r)); });
}

// chi by three (or four) evacuations of normal shapes.
CircuitPtr chi_via_xi_n(bool closed_form) {
  auto prepare = [](const Tableau& a) {
    return std::max({a.rows(), a.alphabet(), static_cast<int>(length(a.inner()))});
  };
  CircuitPtr s0;
  if (closed_form) {
    s0 = step("C = evacuation of Can(mu)", [prepare](const Value& in) {
      const Tableau& a = T(in);
      int k = prepare(a);
      return Value(ValueList{evacuation_of_canonical(a.inner(), k).with_rows(a.rows()), in});
    });
  } else {
    s0 = staged(
        "C = xiN(Can(mu))",
        [prepare](const Value& in) {
          const Tableau& a = T(in);
          return ctx(Tableau::canonical(a.inner(), prepare(a)), in);
        },
        [](const Value& r) { return Value(ValueList{r[0], r[1]}); });
  }
  auto s1 = staged(
      "B = xiN(C*A)",
      [](const Value& in) {
        const Tableau& c = T(in[0]);
        const Tableau& a = T(in[1]);
        int k = c.alphabet();
        return ctx(attach(c, shift_values(a.with_alphabet(k), k)), ints1(k));
      },
      [](const Value& r) {
        int k = static_cast<int>(ival(r[1]));
        auto [lo, hi] = split_at_value(T(r[0]), k);
        return Value(ValueList{lo, hi, r[1]});
      });
  auto s2 = staged(
      "A = xiN(A)", [](const Value& in) { return ctx(in[0], Value(ValueList{in[1], in[2]})); },
      [](const Value& r) { return make_pair(attach(T(r[0]), T(r[1][0])), r[1][1]); });
  auto s3 = staged(
      "xiN(A*C')", [](const Value& in) { return ctx(in[0], in[1]); },
      [](const Value& r) {
        int k = static_cast<int>(ival(r[1]));
        return Value(shift_values(split_at_value(T(r[0]), k).second, -k));
      });
  return seq({s0, s1, s2, s3});
}

CircuitPtr varsigma_via_zeta() {
  auto s1 = staged(
      "switch Can(lambda) with A",
      [](const Value& in) { return ctx(make_pair(Tableau::canonical(T(in[0]).inner()), in[0]), in[1]); },
      [](const Value& r) { return make_pair(r[0][1], r[1]); });
  auto s2 = trivial("switch C' with B", [](const Value& in) { return in; }, [](const Value& r) { return r; });
  auto s3 = staged(
      "switch Can(pi) with C''",
      [](const Value& in) { return ctx(make_pair(Tableau::canonical(T(in[0]).outer()), in[1]), in[0]); },
      [](const Value& r) { return make_pair(r[1], r[0][1]); });
  return seq({s1, s2, s3});
}

// Parallel pair of flipped calls: (first of f(V^v), second of f(V<->)).
CircuitPtr flipped_pair() {
  return par(
      "flips",
      [](const Value& in) {
        const IntMatrix& m = in.matrix();
        return make_pair(m.flip_rows(), m.flip_cols());
      },
      base_call(), base_call(), [](const Value& r) { return make_pair(r[0][0], r[1][1]); });
}

CircuitPtr theta_via_phi() {
  return staged(
      "block matrix",
      [](const Value& in) {
        const PlaneFunction& f = in.plane();
        f.check();
        PlaneFunction z = PlaneFunction::zero(f.shape);
        if (!z.is_rectangular()) fail(ErrorKind::NotRectangular, "single-call circuit needs a rectangular shape");
        int l = static_cast<int>(z.shape.size());
        int m = l ? static_cast<int>(z.shape[0]) : 0;
        int kk = std::max(l, m);
        IntMatrix big(2 * kk, 2 * kk);
        for (int i = 0; i < l; ++i)
          for (int j = 0; j < m; ++j) {
            big.set(i, kk + j, f.at(i, m - 1 - j));
            big.set(kk + i, j, f.at(l - 1 - i, j));
          }
        return ctx(big, Value(Ints(z.shape)));
      },
      [](const Value& r) {
        const Tableau& p = T(r[0][0]);
        const Tableau& q = T(r[0][1]);
        PlaneFunction g = PlaneFunction::zero(r[1].ints());
        int l = static_cast<int>(g.shape.size());
        if (l == 0) return Value(g);
        int m = static_cast<int>(g.shape[0]);
        for (int c = g.min_diagonal(); c <= g.max_diagonal(); ++c) {
          auto [ic, jc] = last_cell_on_diagonal(g.shape, c);
          // Row prefixes come from the recording tableau, column prefixes from the insertion tableau.
          const Tableau& src = jc == m - 1 ? q : p;
          int level = jc == m - 1 ? ic + 1 : jc + 1;
          for (int t = 0; t < src.rows(); ++t) {
            int64_t part_t = src.at_padded(t, level);
            if (part_t == 0) break;
            int i = ic - t, j = jc - t;
            if (i < 0 || j < 0) fail(ErrorKind::Overflow, "diagonal too short for its rectangle");
            g.values[i][j] = part_t;
          }
        }
        return Value(g);
      });
}

Reduction make(std::string name, std::string source, std::string base, CircuitPtr c, int64_t declared) {
  return Reduction{std::move(name), std::move(source), std::move(base), std::move(c), declared};
}

}  // namespace

const std::vector<Reduction>& registry() {
  static const std::vector<Reduction> all = {
      make("phi_via_psi", "phi", "psi", phi_via_psi(), 2),
      make("psi_via_phiLR", "psi", "phiLR", psi_via_phi_lr(), 1),
      make("phiLR_via_zetaN", "phiLR", "zetaN", phi_lr_via_zeta_n(), 2),
      make("zeta_via_xi", "zeta", "xi", zeta_by_three_xi("zeta"), 3),
      make("zetaN_via_xiN", "zetaN", "xiN", zeta_by_three_xi("zetaN"), 3),
      make("xiN_via_phi", "xiN", "phi", xi_n_via_phi(), 1),
      make("rho1_via_zetaN", "rho1", "zetaN", rho1_via_zeta_n(), 1),
      make("zetaN_via_zeta", "zetaN", "zeta", same_map(), 1),
      make("zeta_via_zetaLR", "zeta", "zetaLR", zeta_via_zeta_lr(), 1),
      make("zetaLR_via_rho1", "zetaLR", "rho1", zeta_lr_via_rho1(), 3),
      make("zeta_via_zetaN", "zeta", "zetaN", zeta_via_zeta_n(), 2),
      make("rho2_via_xiN", "rho2", "xiN", rho2_via_xi_n(), 1),
      make("xiN_via_rho2", "xiN", "rho2", xi_n_via_rho2(), 1),
      make("xiN_via_chi", "xiN", "chi", same_map(), 1),
      make("chi_via_xiN", "chi", "xiN", chi_via_xi_n(true), 3),
      make("chi_via_xiN_plain", "chi", "xiN", chi_via_xi_n(false), 4),
      make("varsigma_via_zeta", "varsigma", "zeta", varsigma_via_zeta(), 3),
      make("phi_via_burge", "phi", "burge", flipped_pair(), 2),
      make("burge_via_phi", "burge", "phi", flipped_pair(), 2),
      make("theta_via_phi", "theta", "phi", theta_via_phi(), 1),
  };
  return all;
}

const Reduction& lookup(const std::string& name) {
  for (const auto& r : registry())
    if (r.name == name) return r;
  fail(ErrorKind::MapMismatch, "no reduction named '" + name + "'");
}

namespace {

CircuitPtr substitute(const CircuitPtr& c, const CircuitPtr& sub) {
  switch (c->kind) {
    case Circuit::Kind::Step: return c;
    case Circuit::Kind::Base: return sub;
    case Circuit::Kind::Trivial:
      return seq({step(c->name + "/pre", c->pre), sub, step(c->name + "/post", c->post)});
    case Circuit::Kind::Seq: return seq(substitute(c->first, sub), substitute(c->second, sub));
    case Circuit::Kind::Par: return par(c->name, c->pre, substitute(c->first, sub), substitute(c->second, sub), c->post);
  }
  return c;
}

}  // namespace

Reduction compose_reductions(const Reduction& r1, const Reduction& r2) {
  if (r1.base != r2.source)
    fail(ErrorKind::MapMismatch, r1.name + " has base " + r1.base + " but " + r2.name + " computes " + r2.source);
  Reduction out;
  out.name = r1.name + "+" + r2.name;
  out.source = r1.source;
  out.base = r2.base;
  out.circuit = substitute(r1.circuit, r2.circuit);
  out.declared_cost = checked_mul(r1.declared_cost, r2.declared_cost);
  return out;
}

bool verify_reduction(const Reduction& r, const Value& instance) {
  Evaluation e = evaluate(*r.circuit, reference_map(r.base), instance);
  return e.report.base_calls == r.declared_cost && e.output == reference_map(r.source)(instance);
}

// ------------------------------------------------------------------ graph

ReductionGraph build_graph(const std::vector<Reduction>& rs) {
  ReductionGraph g;
  std::map<std::string, int> id;
  auto node = [&](const std::string& s) {
    auto it = id.find(s);
    if (it != id.end()) return it->second;
    int n = static_cast<int>(g.nodes.size());
    id[s] = n;
    g.nodes.push_back(s);
    return n;
  };
  for (const auto& r : rs) {
    node(r.source);
    node(r.base);
  }
  size_t n = g.nodes.size();
  g.best.assign(n, std::vector<int64_t>(n, 0));
  g.next.assign(n, std::vector<int>(n, -1));
  for (size_t i = 0; i < n; ++i) {
    g.best[i][i] = 1;
    g.next[i][i] = static_cast<int>(i);
  }
  for (const auto& r : rs) {
    int a = node(r.source), b = node(r.base);
    if (a == b) continue;
    if (g.best[a][b] == 0 || r.declared_cost < g.best[a][b]) {
      g.best[a][b] = r.declared_cost;
      g.next[a][b] = b;
    }
  }
  for (size_t m = 0; m < n; ++m)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (!g.best[i][m] || !g.best[m][j]) continue;
        int64_t c = checked_mul(g.best[i][m], g.best[m][j]);
        if (g.best[i][j] == 0 || c < g.best[i][j]) {
          g.best[i][j] = c;
          g.next[i][j] = g.next[i][m];
        }
      }
  return g;
}

namespace {

int index_of(const ReductionGraph& g, const std::string& s) {
  auto it = std::find(g.nodes.begin(), g.nodes.end(), s);
  if (it == g.nodes.end()) fail(ErrorKind::Unreachable, "map '" + s + "' is not in the reduction graph");
  return static_cast<int>(it - g.nodes.begin());
}

}  // namespace

int64_t min_cost(const ReductionGraph& g, const std::string& from, const std::string& to) {
  int a = index_of(g, from), b = index_of(g, to);
  if (g.best[a][b] == 0) fail(ErrorKind::Unreachable, from + " does not reduce to " + to);
  return g.best[a][b];
}

std::vector<std::string> cheapest_path(const ReductionGraph& g, const std::string& from, const std::string& to) {
  min_cost(g, from, to);
  int a = index_of(g, from), b = index_of(g, to);
  std::vector<std::string> path{g.nodes[a]};
  while (a != b) {
    a = g.next[a][b];
    path.push_back(g.nodes[a]);
  }
  return path;
}

Reduction reduce_via(const std::string& from, const std::string& to) {
  if (from == to) return make(from + "_via_itself", from, to, same_map(), 1);
  ReductionGraph g = build_graph(registry());
  auto path = cheapest_path(g, from, to);
  auto edge = [](const std::string& a, const std::string& b) -> const Reduction& {
    const Reduction* best = nullptr;
    for (const auto& r : registry())
      if (r.source == a && r.base == b && (!best || r.declared_cost < best->declared_cost)) best = &r;
    return *best;
  };
  Reduction r = edge(path[0], path[1]);
  for (size_t i = 2; i < path.size(); ++i) r = compose_reductions(r, edge(path[i - 1], path[i]));
  return r;
}

std::string to_dot(const std::vector<Reduction>& rs) {
  std::ostringstream out;
  out << "digraph reductions {\n";
  for (const auto& r : rs)
    out << "  \"" << r.source << "\" -> \"" << r.base << "\" [label=\"" << r.declared_cost << "\", tooltip=\"" << r.name
        << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace yt
