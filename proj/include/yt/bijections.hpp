#pragma once

#include "yt/matrix.hpp"
#include "yt/tableau.hpp"

namespace yt {

// Schutzenberger involution as the Bender-Knuth word z_k, k = alphabet.
Tableau xi(const Tableau& a);
Tableau xi_normal(const Tableau& a);
// xi_normal(Can(mu)) in closed form; k < 0 means the number of rows of mu.
Tableau evacuation_of_canonical(const Partition& mu, int k = -1);

// Tableau switching of B on pi/mu (alphabet r) and A on lambda/pi.
// Returns (A', B') with A' on sigma/mu and B' on lambda/sigma.
TableauPair zeta(const Tableau& b, const Tableau& a);
TableauPair zeta_normal(const Tableau& b, const Tableau& a);
TableauPair zeta_lr(const Tableau& b, const Tableau& a);

// Jeu de taquin rectification: first component of zeta(Can(mu), A).
Tableau psi(const Tableau& a);

// RSK (insertion, recording) through two rectifications.
TableauPair rsk(const IntMatrix& v);
// The staircase skew tableaux (Y, X) whose rectifications are rsk(v).
TableauPair rsk_staircase(const IntMatrix& v);

// Littlewood-Robinson map A -> (A', C') in YT(sigma, a) x LR(lambda/mu, sigma).
TableauPair phi_lr(const Tableau& a);
// Inverse of phi_lr by the reversed switch sequence.
Tableau phi_lr_inverse(const Tableau& a1, const Tableau& c1);

Tableau chi(const Tableau& a);

// Fundamental symmetry maps LR(lambda/mu, nu) -> LR(lambda/nu, mu).
Tableau rho1(const Tableau& a);
Tableau rho2(const Tableau& a);
Tableau rho2_prime(const Tableau& a);
Tableau rho3(const Tableau& a);

// LR(lambda/mu, nu) -> CF*(mu, nu, lambda) and back. The number of rows l of
// the LR tableau is kept as the alphabet of the image.
Tableau gamma_map(const Tableau& a);
Tableau gamma_inverse(const Tableau& b, const Partition& nu);
// LR(lambda/mu, nu) -> CF(nu, mu, lambda) and back.
Tableau tau_map(const Tableau& a);
Tableau tau_inverse(const Tableau& e, const Partition& inner);

struct LrTriple {
  Partition lambda;
  Partition mu;
  Partition nu;
};

// CF(mu, nu, lambda) or, if starred, CF*(mu, nu, lambda) membership of B.
bool lr_membership(const Tableau& b, const LrTriple& ctx, bool starred);

// A in LR(sigma/lambda, mu), B in LR(tau/sigma, nu) -> (B', D) in
// LR(pi/mu, nu) x LR(tau/lambda, pi).
TableauPair octahedral(const Tableau& a, const Tableau& b);

// Burge correspondence (column insertion) through two RSK calls.
TableauPair burge(const IntMatrix& v);

// Hillman-Grassl map: arbitrary nonnegative filling -> reverse plane partition
// with diagonal sums equal to the rectangular sums of the input.
PlaneFunction hillman_grassl(const PlaneFunction& f);

}  // namespace yt
