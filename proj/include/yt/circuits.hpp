#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "yt/matrix.hpp"
#include "yt/tableau.hpp"

namespace yt {

struct Value;
using ValueList = std::vector<Value>;
using Ints = std::vector<int64_t>;

// Everything that flows along a circuit wire. Pairs and staged contexts are
// lists.
struct Value {
  std::variant<Tableau, IntMatrix, PlaneFunction, Ints, ValueList> v;

  Value() : v(ValueList{}) {}
  Value(Tableau t) : v(std::move(t)) {}
  Value(IntMatrix m) : v(std::move(m)) {}
  Value(PlaneFunction p) : v(std::move(p)) {}
  Value(Ints x) : v(std::move(x)) {}
  Value(ValueList l) : v(std::move(l)) {}

  const Tableau& tableau() const;
  const IntMatrix& matrix() const;
  const PlaneFunction& plane() const;
  const Ints& ints() const;
  const ValueList& list() const;
  const Value& operator[](size_t i) const;

  friend bool operator==(const Value& a, const Value& b);
};

Value make_pair(Value a, Value b);
Value from_pair(const TableauPair& p);
std::string describe(const Value& v);

// Bit-size n(1 + ceil(log2 m)) of the flattened encoding; lists concatenate.
int64_t bit_size(const Value& v);

using StepFn = std::function<Value(const Value&)>;
using MapFn = std::function<Value(const Value&)>;

struct Circuit;
using CircuitPtr = std::shared_ptr<const Circuit>;

struct Circuit {
  enum class Kind { Step, Base, Trivial, Seq, Par };
  Kind kind = Kind::Step;
  std::string name;
  StepFn fn;        // Step
  StepFn pre;       // Trivial, Par (Par: must return a two-element list)
  StepFn post;      // Trivial, Par (Par: receives a two-element list)
  CircuitPtr first;   // Seq, Par
  CircuitPtr second;  // Seq, Par
};

CircuitPtr step(std::string name, StepFn fn);
CircuitPtr identity();
CircuitPtr base_call();
CircuitPtr trivial(std::string name, StepFn pre, StepFn post);
CircuitPtr seq(CircuitPtr a, CircuitPtr b);
CircuitPtr seq(std::vector<CircuitPtr> parts);
CircuitPtr par(std::string name, StepFn pre, CircuitPtr a, CircuitPtr b, StepFn post);
// One base call whose argument is built by pre; post receives (result, context).
// pre returns the two-element list (argument, context).
CircuitPtr staged(std::string name, StepFn pre, StepFn post);

// Static beta-cost: number of base calls on every evaluation.
int64_t cost(const Circuit& c);

struct CostReport {
  int64_t base_calls = 0;
  int64_t input_bits = 0;
  int64_t output_bits = 0;
};

struct Evaluation {
  Value output;
  CostReport report;
};

// Errors raised inside the circuit are rethrown with the path to the failing
// node appended to their detail.
Evaluation evaluate(const Circuit& c, const MapFn& base, const Value& input);

// Reference implementations by name: phi, psi, phiLR, zeta, zetaN, zetaLR,
// xi, xiN, chi, rho1, rho2, varsigma, burge, theta.
const MapFn& reference_map(const std::string& name);
std::vector<std::string> map_names();
// The eight maps of the equivalence theorem.
std::vector<std::string> theorem_maps();

struct Reduction {
  std::string name;
  std::string source;
  std::string base;
  CircuitPtr circuit;
  int64_t declared_cost = 0;
};

const std::vector<Reduction>& registry();
const Reduction& lookup(const std::string& name);

Reduction compose_reductions(const Reduction& r1, const Reduction& r2);

// Evaluates r on the instance with the reference base and compares with the
// reference source map. Throws on domain errors.
bool verify_reduction(const Reduction& r, const Value& instance);

// Reduction graph: an edge source -> base for every registered reduction.
struct ReductionGraph {
  std::vector<std::string> nodes;
  std::vector<std::vector<int64_t>> best;  // 0 = unreachable
  std::vector<std::vector<int>> next;      // successor on a cheapest path
};

ReductionGraph build_graph(const std::vector<Reduction>& rs);
// Minimum product of costs over paths from -> to, i.e. the cost of computing
// `from` with base `to`. Throws Unreachable.
int64_t min_cost(const ReductionGraph& g, const std::string& from, const std::string& to);
std::vector<std::string> cheapest_path(const ReductionGraph& g, const std::string& from, const std::string& to);
// The composed reduction along a cheapest path.
Reduction reduce_via(const std::string& from, const std::string& to);
std::string to_dot(const std::vector<Reduction>& rs);

}  // namespace yt
