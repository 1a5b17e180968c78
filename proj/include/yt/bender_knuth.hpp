#pragma once

#include <vector>

#include "yt/tableau.hpp"

namespace yt {

// Generator indices r_1..r_N of a product s_{r_1} ... s_{r_N}.
using BkWord = std::vector<int>;

// Piecewise-linear Bender-Knuth involution s_r on the pattern, 1 <= r < k.
// Row 0 sees +infinity above it; rows past the last one read as 0.
Tableau bk(const Tableau& a, int r);

// Product of generators, rightmost factor applied first.
Tableau apply_bk_word(const Tableau& a, const BkWord& w);

// z_m = (s_1)(s_2 s_1)...(s_{m-1} ... s_1)
BkWord z_word(int m);
// t_{r,s} = (s_s ... s_{s+r-1})(s_{s-1} ... s_{s+r-2}) ... (s_1 ... s_r)
BkWord t_word(int r, int s);

}  // namespace yt
