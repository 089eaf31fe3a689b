#include "hypconv/phi_series.hpp"

#include <cmath>
#include <map>

namespace hypconv {

namespace {

// Weights w_r of Phi = sum_r w_r x / (r' + x) style expansions: v_m = (-1)^{m-1} sum_r w_r / (t + r)^m.
std::map<Rational, long> point_groups(const ProperTerm& term, const std::optional<Rational>& t) {
    std::map<Rational, long> g;
    for (const auto& f : term.factors) {
        if (f.alpha == 0) continue;
        Rational r = make_rational(f.beta, f.alpha);
        if (t && sgn(*t + r) == 0) continue;
        g[r] += f.alpha;
    }
    std::erase_if(g, [](const auto& kv) { return kv.second == 0; });
    return g;
}

Rational signed_power_sum(const std::map<Rational, long>& g, const Rational& shift, int m) {
    Rational s;
    for (const auto& [r, w] : g) s += Rational(w) / pow(shift + r, m);
    return m % 2 == 1 ? s : Rational(-s);
}

PhiExpansion from_rational_coefficients(const std::map<Rational, long>& g, const Rational& shift) {
    PhiExpansion e;
    for (int m = 1; m <= static_cast<int>(g.size()); ++m) {
        Rational v = signed_power_sum(g, shift, m);
        if (sgn(v) != 0) {
            e.m = m;
            e.v_sign = sgn(v);
            e.v_exact = v;
            e.v_approx = v.get_d();
            return e;
        }
    }
    e.identically_zero = true;
    return e;
}

}  // namespace

Rational phi_coefficient(const ProperTerm& term, const Rational& t, int m) {
    return signed_power_sum(point_groups(term, t), t, m);
}

Rational phi_inf_coefficient(const ProperTerm& term, int m) {
    Rational s;
    for (const auto& f : term.factors) {
        if (f.alpha == 0 || f.beta == 0) continue;
        s += pow(Rational(f.beta), m + 1) / pow(Rational(f.alpha), m);
    }
    return m % 2 == 1 ? s : Rational(-s);
}

PhiExpansion phi_expansion(const ProperTerm& term, const PhiAt& at) {
    if (at.kind == PhiAt::Kind::Infinity) {
        // group by alpha/beta: beta^{m+1}/alpha^m = beta / (alpha/beta)^m
        std::map<Rational, long> g;
        for (const auto& f : term.factors)
            if (f.alpha != 0 && f.beta != 0) g[make_rational(f.alpha, f.beta)] += f.beta;
        std::erase_if(g, [](const auto& kv) { return kv.second == 0; });
        return from_rational_coefficients(g, 0);
    }
    if (at.kind == PhiAt::Kind::Zero) return from_rational_coefficients(point_groups(term, Rational(0)), 0);
    const AlgebraicReal& t = *at.t;
    if (compare(t, 0) <= 0) throw DomainError("Phi_t needs t > 0");
    if (t.is_rational()) {
        Rational tv = t.rational_value();
        return from_rational_coefficients(point_groups(term, tv), tv);
    }
    // Irrational t misses every point of Omega.
    auto g = point_groups(term, std::nullopt);
    double td = t.to_double();
    for (int m = 1; m <= static_cast<int>(g.size()); ++m) {
        PolyQ num, den = PolyQ::constant(1);
        for (const auto& [r, w] : g) {
            PolyQ prod = PolyQ::constant(Rational(w));
            for (const auto& [r2, w2] : g)
                if (r2 != r) prod *= pow(PolyQ::linear(r2, 1), m);
            num += prod;
            den *= pow(PolyQ::linear(r, 1), m);
        }
        if (m % 2 == 0) num = -num;
        int s = sign_at(num, t);
        if (s == 0) continue;
        PhiExpansion e;
        e.m = m;
        e.v_sign = s * sign_at(den, t);
        double v = 0;
        for (const auto& [r, w] : g) v += static_cast<double>(w) / std::pow(td + r.get_d(), m);
        e.v_approx = m % 2 == 1 ? v : -v;
        return e;
    }
    PhiExpansion e;
    e.identically_zero = true;
    return e;
}

}  // namespace hypconv
