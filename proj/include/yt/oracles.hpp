#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "yt/matrix.hpp"
#include "yt/tableau.hpp"

// Brute-force references. Nothing here calls into bender_knuth or bijections.
namespace yt::oracle {

// Filling-level Bender-Knuth: free r's and (r+1)'s of each row swap counts.
Tableau naive_bk(const Tableau& a, int r);

enum class CornerOrder { First, Last };
// Jeu de taquin by square moves, always sliding into the first (or last)
// inner corner in row order.
Tableau naive_jdt(const Tableau& a, CornerOrder order = CornerOrder::First);

// Row insertion of the lexicographic biword; (insertion, recording).
TableauPair naive_rsk(const IntMatrix& v);
// Reverse row insertion. Both tableaux of the same normal shape.
IntMatrix rsk_inverse(const Tableau& p, const Tableau& q);
// Column insertion of the biword ordered by i increasing, j decreasing.
TableauPair naive_burge(const IntMatrix& v);

// Hook-path removal: reverse plane partition -> filling.
PlaneFunction naive_hillman_grassl_inverse(const PlaneFunction& rpp);

using TableauSink = std::function<void(const Tableau&)>;

// Every tableau of outer/inner with entries <= max_value, lexicographic in
// the row-major pattern.
void for_each_tableau(const Partition& outer, const Partition& inner, int max_value, const TableauSink& sink);
std::vector<Tableau> enumerate_tableaux(const Partition& outer, const Partition& inner, int max_value);
// Tableaux of the given weight (alphabet = weight.size()).
std::vector<Tableau> enumerate_with_weight(const Partition& outer, const Partition& inner, const Weight& w);
// LR(lambda/mu, nu).
std::vector<Tableau> enumerate_lr(const Partition& lambda, const Partition& mu, const Partition& nu);
int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
// CF(mu, nu, lambda) or CF*(mu, nu, lambda).
std::vector<Tableau> enumerate_cf(const Partition& mu, const Partition& nu, const Partition& lambda, bool starred);

struct Bounds {
  int max_size = 6;
  int max_length = 3;
  int max_value = 4;
};

// Every skew shape lambda/mu with |lambda| <= max_size and l(lambda) <= max_length.
std::vector<std::pair<Partition, Partition>> skew_shapes(int max_size, int max_length);
// All tableaux over skew_shapes with entries <= max_value.
std::vector<Tableau> tableau_suite(const Bounds& b);
// All LR tableaux over skew_shapes (alphabet = number of rows).
std::vector<Tableau> lr_suite(int max_size, int max_length);
// Every k x k matrix with entries <= max_entry.
std::vector<IntMatrix> matrix_suite(int k, int64_t max_entry);
// Every filling of shape with entries <= max_entry.
std::vector<PlaneFunction> plane_suite(const Partition& shape, int64_t max_entry);

}  // namespace yt::oracle
