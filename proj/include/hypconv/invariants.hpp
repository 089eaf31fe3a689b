#pragma once

#include "hypconv/term.hpp"

namespace hypconv {

// Point t = -beta/alpha of Omega with the factors vanishing there.
struct OmegaPoint {
    Rational t;
    std::vector<std::size_t> factors;
    long alpha_sum = 0;  // sum of alpha_j over the vanishing factors
    long beta_sum = 0;
};

struct H0Entry {
    long alpha;
    GaussianRational b;
};

// (2 pi)^{two_pi_exponent} prod_{alpha>0} |alpha|^{b-1/2} / Gamma(b)
//   * prod_{alpha<0} |alpha|^{b-1/2} / (Gamma(b) 2 sin(pi b))
struct H0Expr {
    Rational two_pi_exponent;
    std::vector<H0Entry> entries;
};

struct StructuralConstants {
    long D0 = 0, D1 = 0, D0_star = 0, D1_star = 0;
    GaussianRational A0, A_inf_star, A0_star, A1, A1_star;
    GaussianRational z0, z1, z_inf, zeta0, zeta1;
    int deg_n_P = 0, deg_k_P = 0, total_deg_P = 0, deg_k_Q = 0;
    GaussPoly Q;
    std::vector<OmegaPoint> omega;  // ascending
    H0Expr H0;

    // A1 + D1*/2, the value of psi*_t at generic t.
    GaussianRational B1() const;
};

StructuralConstants structural_constants(const ProperTerm& term);

cdouble h0_value(const H0Expr& h);
// Closed form for the case where every alpha is +1 or -1.
cdouble h0_value_unit_alphas(const H0Expr& h);

// b_j + (beta_j - 1)/2, defined for beta_j != 0.
GaussianRational a_hat(const PochhammerFactor& f);
// b_j + (alpha_j - 1)/2, defined for alpha_j != 0.
GaussianRational a_tilde(const PochhammerFactor& f);

}  // namespace hypconv
