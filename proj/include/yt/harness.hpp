#pragma once

#include <string>
#include <vector>

#include "yt/circuits.hpp"
#include "yt/oracles.hpp"

// Verification harness: instance suites per map and the conjecture probes.
// Unlike the oracles proper, this layer calls the fast maps.
namespace yt::harness {

// Pairs (B on pi/mu, A on lambda/pi) with |lambda| <= max_size, at most
// max_length rows and entries <= max_value.
std::vector<TableauPair> switching_pairs(const oracle::Bounds& b);
// The same with both tableaux LR.
std::vector<TableauPair> lr_pairs(int max_size, int max_length);

// Every instance of the named map's domain within the bounds.
std::vector<Value> instances(const std::string& map, const oracle::Bounds& b);
// Instances of r's source map that r accepts (theta_via_phi: rectangular shapes).
std::vector<Value> instances_for(const Reduction& r, const oracle::Bounds& b);

struct ProbeReport {
  int64_t instances = 0;
  std::vector<std::string> mismatches;
};

// rho1 = rho2 = rho2' = rho3 on every LR tableau within the bounds.
ProbeReport conjecture1_probe(int max_size, int max_length);
// Octahedral count identity for every tau with |tau| <= max_size, plus
// injectivity of varsigma and membership of its image on the enumerated pairs.
ProbeReport conjecture3_count_probe(int max_size);
// |LR(lambda/mu,nu)| = |LR(lambda/nu,mu)| = |CF(mu,nu,lambda)| = |CF*(mu,nu,lambda)|.
ProbeReport count_symmetry_probe(int max_size, int max_length);

// One checked property: instances examined and the first counterexample.
struct PropertyResult {
  std::string name;
  int64_t instances = 0;
  std::string counterexample;  // empty when the property holds
  bool pass() const { return counterexample.empty(); }
};

struct SuiteConfig {
  oracle::Bounds bounds;
  int lr_size = 8;
  int lr_length = 4;
  int64_t matrix_max = 2;
  // Replace bk by a deliberately broken variant, to see the suite fail.
  bool inject_bk_fault = false;
};

// Involution, commutation, evacuation and switching-word relations of the
// Bender-Knuth generators, plus the weight transposition.
std::vector<PropertyResult> bk_relations(const SuiteConfig& cfg);
// Fast maps against the brute-force references.
std::vector<PropertyResult> oracle_equivalence(const SuiteConfig& cfg);
// Structural claims about xi, zeta, psi, rsk, phiLR, chi, rho, gamma, tau and
// the octahedral map.
std::vector<PropertyResult> proposition_suite(const SuiteConfig& cfg);
// Every registered reduction against its source map, with call counts.
std::vector<PropertyResult> reduction_suite(const SuiteConfig& cfg);

struct BenchRow {
  int k = 0;
  double median_ms = 0;
};

// Median wall time of xi_normal on Can((k, k-1, ..., 1)) with alphabet k.
std::vector<BenchRow> bench_xi(const std::vector<int>& ks, int repetitions);

}  // namespace yt::harness
