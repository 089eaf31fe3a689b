#include "hypconv/g_landscape.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <map>

namespace hypconv {

double g_eval(const ProperTerm& term, double t) {
    double lg = 0.5 * std::log(term.theta.norm2().get_d()) + t * 0.5 * std::log(term.xi.norm2().get_d());
    for (const auto& f : term.factors) {
        double e = static_cast<double>(f.beta) + static_cast<double>(f.alpha) * t;
        if (e != 0) lg += e * std::log(std::fabs(e));
    }
    return std::exp(lg);
}

Rational g_pow_exact(const ProperTerm& term, const Rational& t) {
    const Integer& p = t.get_num();
    const Integer& q = t.get_den();
    if (!q.fits_slong_p() || !p.fits_slong_p()) throw DomainError("rational point too large");
    long pl = p.get_si(), ql = q.get_si();
    Rational v = pow(term.theta.norm2(), ql) * pow(term.xi.norm2(), pl);
    for (const auto& f : term.factors) {
        // q (beta + alpha t) is an integer
        long e = ql * f.beta + f.alpha * pl;
        if (e == 0) continue;
        Rational base = Rational(f.beta) + Rational(f.alpha) * t;
        v *= pow(base * base, e);
    }
    return v;
}

namespace {

struct Group {
    long e = 0;  // sum of alpha
    long f = 0;  // sum of beta
};

// prod_{w>0} (t+c)^{2w} scale - prod_{w<0} (t+c)^{-2w}
PolyQ balance(const std::map<Rational, Group>& groups, long Group::*w, const Rational& scale) {
    PolyQ pos = PolyQ::constant(scale), neg = PolyQ::constant(1);
    for (const auto& [c, g] : groups) {
        long x = g.*w;
        if (x > 0) pos *= pow(PolyQ::linear(c, 1), static_cast<unsigned>(2 * x));
        if (x < 0) neg *= pow(PolyQ::linear(c, 1), static_cast<unsigned>(-2 * x));
    }
    return pos - neg;
}

}  // namespace

Landscape critical_points(const ProperTerm& term, const StructuralConstants& c) {
    if (c.D0 != 0 || c.D0_star != 0) throw ContractError("critical point analysis needs D0 = D0* = 0");
    std::map<Rational, Group> groups;  // keyed by beta/alpha; the point is t = -beta/alpha
    for (const auto& fct : term.factors) {
        if (fct.alpha == 0) continue;
        auto& g = groups[make_rational(fct.beta, fct.alpha)];
        g.e += fct.alpha;
        g.f += fct.beta;
    }
    Landscape L;
    Rational zeta2 = c.zeta0.norm2();
    bool cancelled = std::all_of(groups.begin(), groups.end(), [](const auto& kv) { return kv.second.e == 0; });
    if (cancelled && zeta2 == 1) {
        L.constant = true;
        L.constant_abs2 = c.z0.norm2();
    } else {
        L.critical_poly = balance(groups, &Group::e, zeta2);
        L.value_poly = balance(groups, &Group::f, c.z1.norm2());
    }
    std::vector<CriticalPoint> pts;
    for (const auto& w : c.omega) {
        if (sgn(w.t) <= 0) continue;
        int s = cmp(g_pow_exact(term, w.t), 1);
        pts.push_back({AlgebraicReal::from_rational(w.t), true, w.alpha_sum, s});
    }
    if (!L.constant && L.critical_poly.degree() > 0) {
        for (auto& r : isolate_real_roots(L.critical_poly, {Rational(0), std::nullopt})) {
            bool dup = std::any_of(c.omega.begin(), c.omega.end(),
                                   [&](const OmegaPoint& w) { return sgn(w.t) > 0 && compare(r, w.t) == 0; });
            if (dup) continue;
            int s = sign_at(L.value_poly, r);
            pts.push_back({r, false, 0, s});
        }
    }
    std::sort(pts.begin(), pts.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
        if (a.t.is_rational()) return compare(b.t, a.t.rational_value()) > 0;
        if (b.t.is_rational()) return compare(a.t, b.t.rational_value()) < 0;
        return a.t.to_double() < b.t.to_double();
    });
    L.points = std::move(pts);
    return L;
}

ProperTerm ghat_term(GhatParams p) {
    if (p.alpha == 0 && p.gamma == 0) throw InvalidInput("alpha and gamma cannot both vanish");
    PfqSpec s;
    s.upper = {{GaussianRational(make_rational(1, 3)), p.alpha}, {GaussianRational(make_rational(1, 5)), 0}};
    s.lower = {{GaussianRational(make_rational(2, 7)), p.gamma}};
    s.argument = GaussianRational(1);
    return from_pfq(s);
}

GhatSup ghat_sup(GhatParams p) {
    long a = p.alpha, g = p.gamma;
    if (a == 0 && g == 0) throw InvalidInput("alpha and gamma cannot both vanish");
    if (a == g) return {GhatCase::Equal, false, 1.0};
    if (g == 0) return {GhatCase::GammaZero, true, INFINITY};
    double ad = static_cast<double>(a), gd = static_cast<double>(g);
    if (g > 0) return {GhatCase::GammaPositive, false, std::max(std::fabs(ad / gd), 1.0)};
    if (a < g) return {GhatCase::AlphaBelowGamma, false, solve_y(ad / gd)};
    if (a < 0) return {GhatCase::GammaBelowAlpha, false, 1.0 + 1.0 / solve_y(gd / (gd - ad))};
    if (a == 0) return {GhatCase::AlphaZero, false, 2.0};
    return {GhatCase::MixedSigns, false, 1.0 + solve_y((gd - ad) / gd)};
}

double solve_y(double x) {
    if (!(x >= 1)) throw DomainError("solve_y needs x >= 1");
    if (x == 1) return 1;
    const double T = tau();
    auto psi = [x](double y) {
        return x * std::log(y) - x * std::log(x) - (x - 1) * std::log1p(y) + (x - 1) * std::log(x - 1);
    };
    double lo = std::max(1.0, T * (x - 1) + 1 - 1e-9), hi = T * (x - 1) + (T - 1) / 2 + 1e-9;
    while (psi(lo) > 0 && lo > 1) lo = std::max(1.0, lo - (hi - lo));
    while (psi(hi) < 0) hi += hi - lo;
    double y = 0.5 * (lo + hi);
    for (int i = 0; i < 200; ++i) {
        double f = psi(y);
        if (f == 0) break;
        if (f < 0) lo = y;
        else hi = y;
        double step = f * y * (y + 1) / (y + x);
        double next = y - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - y) <= 1e-16 * y) {
            y = next;
            break;
        }
        y = next;
    }
    return y;
}

double tau() {
    double t = 3.6;
    for (int i = 0; i < 50; ++i) t -= (std::log(t) - 1 - 1 / t) / (1 / t + 1 / (t * t));
    return t;
}

std::string tau_digits(int significant) {
    using boost::multiprecision::cpp_bin_float_100;
    cpp_bin_float_100 t = 3.6;
    for (int i = 0; i < 100; ++i) t -= (log(t) - 1 - 1 / t) / (1 / t + 1 / (t * t));
    return t.str(significant - 1, std::ios_base::fixed);
}

}  // namespace hypconv
