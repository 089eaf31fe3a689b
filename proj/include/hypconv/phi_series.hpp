#pragma once

#include "hypconv/invariants.hpp"
#include "hypconv/real_roots.hpp"

namespace hypconv {

// Where the Phi function is expanded: Phi_0, Phi_inf, or Phi_t at a point t > 0.
struct PhiAt {
    enum class Kind { Zero, Infinity, Point } kind;
    std::optional<AlgebraicReal> t;

    static PhiAt zero() { return {Kind::Zero, std::nullopt}; }
    static PhiAt infinity() { return {Kind::Infinity, std::nullopt}; }
    static PhiAt point(AlgebraicReal t) { return {Kind::Point, std::move(t)}; }
};

// Phi = v_m x^m + O(x^{m+1}), or identically zero.
struct PhiExpansion {
    bool identically_zero = false;
    int m = 0;
    int v_sign = 0;
    std::optional<Rational> v_exact;  // present when the point is rational
    double v_approx = 0;
};

PhiExpansion phi_expansion(const ProperTerm& term, const PhiAt& at);
// Taylor coefficient v_m of Phi_t at a rational point (t = 0 gives Phi_0).
Rational phi_coefficient(const ProperTerm& term, const Rational& t, int m);
Rational phi_inf_coefficient(const ProperTerm& term, int m);

}  // namespace hypconv
