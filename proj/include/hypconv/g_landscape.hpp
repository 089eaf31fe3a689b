#pragma once

#include "hypconv/invariants.hpp"
#include "hypconv/real_roots.hpp"

#include <string>

namespace hypconv {

// g(t) = |theta| |xi|^t prod_j |beta_j + alpha_j t|^{beta_j + alpha_j t}, with 0^0 = 1.
double g_eval(const ProperTerm& term, double t);
// g(t)^{2q} for t = p/q in lowest terms.
Rational g_pow_exact(const ProperTerm& term, const Rational& t);

struct CriticalPoint {
    AlgebraicReal t;
    bool in_omega = false;
    long omega_alpha_sum = 0;
    int value_sign = 0;  // sign of g(t) - 1
};

struct Landscape {
    bool constant = false;   // g is constant on t > 0
    Rational constant_abs2;  // g^2 when constant
    PolyQ critical_poly;     // squared critical equation, Omega factors cancelled
    PolyQ value_poly;        // sign equals sign(g - 1) at critical points
    // Non-Omega roots of critical_poly and the positive Omega points, ascending.
    std::vector<CriticalPoint> points;
};

// Requires D0 = D0* = 0.
Landscape critical_points(const ProperTerm& term, const StructuralConstants& c);

enum class GhatCase { Equal, GammaZero, GammaPositive, AlphaBelowGamma, GammaBelowAlpha, AlphaZero, MixedSigns };

struct GhatParams {
    long alpha;
    long gamma;
};

struct GhatSup {
    GhatCase which;
    bool infinite = false;
    double value = 0;
};

GhatSup ghat_sup(GhatParams p);
// The two-parameter landscape as a term: 2F1(1/3 + alpha n, 1/5; 2/7 + gamma n; 1).
ProperTerm ghat_term(GhatParams p);
// Unique y >= 1 with x log y - x log x - (x-1) log(y+1) + (x-1) log(x-1) = 0, for x >= 1.
double solve_y(double x);
// Root of log tau = 1 + 1/tau.
double tau();
std::string tau_digits(int significant);

}  // namespace hypconv
