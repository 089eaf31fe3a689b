#pragma once

#include "hypconv/invariants.hpp"
#include "hypconv/real_roots.hpp"

namespace hypconv {

struct AffinePiece {
    GaussianRational slope;
    GaussianRational intercept;
    friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

// Continuous piecewise-affine function on [lo, hi] (hi absent means infinity).
// pieces[i] applies between breakpoints[i-1] and breakpoints[i].
class PiecewiseAffine {
public:
    PiecewiseAffine(Rational lo, std::optional<Rational> hi, std::vector<Rational> breakpoints,
                    std::vector<AffinePiece> pieces);

    const Rational& lo() const { return lo_; }
    const std::optional<Rational>& hi() const { return hi_; }
    const std::vector<Rational>& breakpoints() const { return bp_; }
    const std::vector<AffinePiece>& pieces() const { return pieces_; }

    GaussianRational operator()(const Rational& p) const;
    bool real_slopes_nondecreasing() const;
    bool is_continuous() const;
    PiecewiseAffine restricted(const Rational& lo, std::optional<Rational> hi) const;
    PiecewiseAffine plus_affine(const GaussianRational& slope, const GaussianRational& intercept) const;
    std::string to_string() const;

private:
    Rational lo_;
    std::optional<Rational> hi_;
    std::vector<Rational> bp_;
    std::vector<AffinePiece> pieces_;
};

// Upper envelope of p -> deg_k + p deg_n over the monomials of P, on [0, inf).
PiecewiseAffine newton_phi(const BivarPoly& P);
// Same envelope for an explicit monomial set {(deg_n, deg_k)}.
PiecewiseAffine newton_envelope(const std::vector<std::pair<int, int>>& monomials);

struct PsiFunctions {
    PiecewiseAffine psi0;     // on [0, 1]
    PiecewiseAffine psi_inf;  // on [1, inf)
};

PsiFunctions psi_functions(const ProperTerm& term, const StructuralConstants& c);
// Weighted degree of P(t k + n, k) on [0, 1].
PiecewiseAffine phi_star(const BivarPoly& P, const AlgebraicReal& t);
PiecewiseAffine psi_star(const ProperTerm& term, const AlgebraicReal& t);

}  // namespace hypconv
