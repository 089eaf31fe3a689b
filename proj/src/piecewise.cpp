#include "hypconv/piecewise.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hypconv {

PiecewiseAffine::PiecewiseAffine(Rational lo, std::optional<Rational> hi, std::vector<Rational> breakpoints,
                                 std::vector<AffinePiece> pieces)
    : lo_(std::move(lo)), hi_(std::move(hi)), bp_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (pieces_.size() != bp_.size() + 1) throw InvalidInput("piece count must exceed breakpoint count by one");
    for (std::size_t i = 0; i < bp_.size(); ++i) {
        if (!(bp_[i] > lo_) || (hi_ && !(bp_[i] < *hi_)) || (i && !(bp_[i] > bp_[i - 1])))
            throw InvalidInput("breakpoints must increase strictly inside the domain");
    }
    if (hi_ && *hi_ < lo_) throw InvalidInput("empty domain");
}

GaussianRational PiecewiseAffine::operator()(const Rational& p) const {
    if (p < lo_ || (hi_ && p > *hi_)) throw DomainError("argument " + hypconv::to_string(p) + " outside domain");
    std::size_t i = std::upper_bound(bp_.begin(), bp_.end(), p) - bp_.begin();
    return pieces_[i].slope * GaussianRational(p) + pieces_[i].intercept;
}

bool PiecewiseAffine::real_slopes_nondecreasing() const {
    for (std::size_t i = 1; i < pieces_.size(); ++i)
        if (pieces_[i].slope.re < pieces_[i - 1].slope.re) return false;
    return true;
}

bool PiecewiseAffine::is_continuous() const {
    for (std::size_t i = 0; i < bp_.size(); ++i) {
        GaussianRational x(bp_[i]);
        if (!(pieces_[i].slope * x + pieces_[i].intercept == pieces_[i + 1].slope * x + pieces_[i + 1].intercept))
            return false;
    }
    return true;
}

PiecewiseAffine PiecewiseAffine::restricted(const Rational& lo, std::optional<Rational> hi) const {
    if (lo < lo_ || (hi_ && (!hi || *hi > *hi_)) || (hi && *hi < lo)) throw DomainError("restriction outside domain");
    std::vector<Rational> bp;
    std::vector<AffinePiece> pcs;
    std::size_t first = std::upper_bound(bp_.begin(), bp_.end(), lo) - bp_.begin();
    pcs.push_back(pieces_[first]);
    for (std::size_t i = first; i < bp_.size(); ++i) {
        if (hi && bp_[i] >= *hi) break;
        bp.push_back(bp_[i]);
        pcs.push_back(pieces_[i + 1]);
    }
    return PiecewiseAffine(lo, std::move(hi), std::move(bp), std::move(pcs));
}

PiecewiseAffine PiecewiseAffine::plus_affine(const GaussianRational& slope, const GaussianRational& intercept) const {
    std::vector<AffinePiece> pcs = pieces_;
    for (auto& p : pcs) {
        p.slope += slope;
        p.intercept += intercept;
    }
    return PiecewiseAffine(lo_, hi_, bp_, std::move(pcs));
}

std::string PiecewiseAffine::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        os << "[" << hypconv::to_string(i ? bp_[i - 1] : lo_) << ", "
           << (i < bp_.size() ? hypconv::to_string(bp_[i]) : hi_ ? hypconv::to_string(*hi_) : std::string("inf"))
           << "]: " << hypconv::to_string(pieces_[i].intercept) << " + (" << hypconv::to_string(pieces_[i].slope)
           << ")p";
        if (i + 1 < pieces_.size()) os << "; ";
    }
    return os.str();
}

PiecewiseAffine newton_envelope(const std::vector<std::pair<int, int>>& monomials) {
    if (monomials.empty()) throw InvalidInput("weighted degree of the zero polynomial");
    // slope deg_n, intercept deg_k; keep the highest intercept per slope
    std::map<int, int> best;
    for (auto [dn, dk] : monomials) {
        auto [it, fresh] = best.try_emplace(dn, dk);
        if (!fresh) it->second = std::max(it->second, dk);
    }
    int cur_v = -1, cur_u = -1;
    for (auto [v, u] : best)
        if (u > cur_u || (u == cur_u && v > cur_v)) cur_v = v, cur_u = u;
    std::vector<Rational> bp;
    std::vector<AffinePiece> pcs{{GaussianRational(cur_v), GaussianRational(cur_u)}};
    for (;;) {
        std::optional<Rational> next;
        int nv = -1, nu = -1;
        for (auto [v, u] : best) {
            if (v <= cur_v) continue;
            Rational p = make_rational(cur_u - u, v - cur_v);
            if (!next || p < *next || (p == *next && v > nv)) next = p, nv = v, nu = u;
        }
        if (!next) break;
        bp.push_back(*next);
        pcs.push_back({GaussianRational(nv), GaussianRational(nu)});
        cur_v = nv;
        cur_u = nu;
    }
    return PiecewiseAffine(0, std::nullopt, std::move(bp), std::move(pcs));
}

PiecewiseAffine newton_phi(const BivarPoly& P) {
    std::vector<std::pair<int, int>> m;
    for (const auto& [key, c] : P.terms()) m.push_back(key);
    return newton_envelope(m);
}

PsiFunctions psi_functions(const ProperTerm& term, const StructuralConstants& c) {
    GaussianRational sum_hat, tilde_beta0, hat_alpha0, sum_tilde;
    for (const auto& f : term.factors) {
        if (f.beta != 0) {
            sum_hat += a_hat(f);
            if (f.alpha == 0) hat_alpha0 += a_hat(f);
        }
        if (f.alpha != 0) {
            sum_tilde += a_tilde(f);
            if (f.beta == 0) tilde_beta0 += a_tilde(f);
        }
    }
    (void)c;
    PiecewiseAffine phi = newton_phi(term.P);
    return {phi.restricted(0, Rational(1)).plus_affine(tilde_beta0, sum_hat),
            phi.restricted(1, std::nullopt).plus_affine(sum_tilde, hat_alpha0)};
}

PiecewiseAffine phi_star(const BivarPoly& P, const AlgebraicReal& t) {
    if (compare(t, 0) <= 0) throw DomainError("phi* needs t > 0");
    // Coefficient of n^i k^j in P(t k + n, k) as a polynomial in t.
    std::map<std::pair<int, int>, GaussPoly> coef;
    for (const auto& [key, c] : P.terms()) {
        auto [V, U] = key;
        Rational binom = 1;
        for (int i = V; i >= 0; --i) {
            // C(V, i) t^{V-i} n^i k^{U+V-i}
            auto& g = coef[{i, U + V - i}];
            g.set_coeff(V - i, g.coeff(V - i) + c * GaussianRational(binom));
            binom = binom * i / (V - i + 1);
        }
    }
    std::vector<std::pair<int, int>> present;
    for (const auto& [key, g] : coef) {
        bool zero = vanishes_at(g.re, t) && vanishes_at(g.im, t);
        if (!zero) present.push_back(key);
    }
    return newton_envelope(present).restricted(0, Rational(1));
}

PiecewiseAffine psi_star(const ProperTerm& term, const AlgebraicReal& t) {
    if (compare(t, 0) <= 0) throw DomainError("psi* needs t > 0");
    GaussianRational constant, slope;
    for (const auto& f : term.factors) {
        bool on_line = f.alpha != 0 && compare(t, make_rational(-f.beta, f.alpha)) == 0;
        if (f.beta != 0) {
            if (on_line) slope += a_hat(f);
            else constant += a_hat(f) + GaussianRational(make_rational(f.alpha, 2));
        } else if (f.alpha != 0) {
            constant += a_tilde(f);
        }
    }
    return phi_star(term.P, t).plus_affine(slope, constant);
}

}  // namespace hypconv
