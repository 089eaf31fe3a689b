#include "hypconv/term.hpp"

#include "hypconv/real_roots.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hypconv {

BivarPoly BivarPoly::constant(const GaussianRational& c) {
    BivarPoly p;
    p.add_term(0, 0, c);
    return p;
}

BivarPoly BivarPoly::linear(long cn, long ck, const GaussianRational& c0) {
    BivarPoly p;
    p.add_term(1, 0, GaussianRational(cn));
    p.add_term(0, 1, GaussianRational(ck));
    p.add_term(0, 0, c0);
    return p;
}

void BivarPoly::add_term(int deg_n, int deg_k, const GaussianRational& c) {
    if (deg_n < 0 || deg_k < 0) throw InvalidInput("negative exponent in polynomial");
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace({deg_n, deg_k}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

int BivarPoly::degree_n() const {
    int d = -1;
    for (const auto& [key, c] : t_) d = std::max(d, key.first);
    return d;
}

int BivarPoly::degree_k() const {
    int d = -1;
    for (const auto& [key, c] : t_) d = std::max(d, key.second);
    return d;
}

int BivarPoly::total_degree() const {
    int d = -1;
    for (const auto& [key, c] : t_) d = std::max(d, key.first + key.second);
    return d;
}

GaussPoly BivarPoly::leading_in_n() const {
    GaussPoly q;
    int dn = degree_n();
    for (const auto& [key, c] : t_)
        if (key.first == dn) q.set_coeff(key.second, c);
    return q;
}

GaussPoly BivarPoly::top_homogeneous() const {
    GaussPoly q;
    int d = total_degree();
    for (const auto& [key, c] : t_)
        if (key.first + key.second == d) q.set_coeff(key.first, c);
    return q;
}

static std::vector<Rational> binomial_row(int n) {
    std::vector<Rational> row(n + 1);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) row[i] = row[i - 1] * (n - i + 1) / i;
    return row;
}

BivarPoly BivarPoly::shifted(long dn, long dk) const {
    BivarPoly out;
    for (const auto& [key, c] : t_) {
        auto bn = binomial_row(key.first), bk = binomial_row(key.second);
        for (int i = 0; i <= key.first; ++i)
            for (int j = 0; j <= key.second; ++j) {
                Rational f = bn[i] * bk[j] * pow(Rational(dn), key.first - i) * pow(Rational(dk), key.second - j);
                out.add_term(i, j, c * GaussianRational(f));
            }
    }
    return out;
}

cdouble BivarPoly::eval(cdouble n, cdouble k) const {
    cdouble s = 0;
    for (const auto& [key, c] : t_) s += c.to_complex() * std::pow(n, key.first) * std::pow(k, key.second);
    return s;
}

GaussianRational BivarPoly::eval(const GaussianRational& n, const GaussianRational& k) const {
    GaussianRational s;
    for (const auto& [key, c] : t_) s += c * pow(n, key.first) * pow(k, key.second);
    return s;
}

std::optional<BivarPoly> BivarPoly::divide_exact(const BivarPoly& d) const {
    if (d.is_zero()) throw DomainError("division by zero polynomial");
    // Lex order with n before k; the remainder of single-divisor division is unique.
    auto lead = [](const BivarPoly& p) { return std::prev(p.t_.end()); };
    BivarPoly r = *this, q;
    auto ld = lead(d);
    while (!r.is_zero()) {
        auto lr = lead(r);
        int en = lr->first.first - ld->first.first, ek = lr->first.second - ld->first.second;
        if (en < 0 || ek < 0) return std::nullopt;
        BivarPoly m;
        m.add_term(en, ek, lr->second / ld->second);
        q += m;
        r = r - m * d;
    }
    return q;
}

std::string BivarPoly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        auto [dn, dk] = it->first;
        bool unit = it->second == GaussianRational(1) && (dn || dk);
        if (!unit) os << (it->second.is_real() ? hypconv::to_string(it->second) : "(" + hypconv::to_string(it->second) + ")");
        if (dn) os << (unit ? "" : "*") << "n" << (dn > 1 ? "^" + std::to_string(dn) : "");
        if (dk) os << (unit && !dn ? "" : "*") << "k" << (dk > 1 ? "^" + std::to_string(dk) : "");
    }
    return os.str();
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    for (const auto& [key, c] : o.t_) add_term(key.first, key.second, c);
    return *this;
}

BivarPoly operator-(BivarPoly a, const BivarPoly& b) {
    for (const auto& [key, c] : b.t_) a.add_term(key.first, key.second, -c);
    return a;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& o) {
    BivarPoly out;
    for (const auto& [ka, ca] : t_)
        for (const auto& [kb, cb] : o.t_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    *this = std::move(out);
    return *this;
}

BivarPoly& BivarPoly::operator*=(const GaussianRational& s) {
    BivarPoly out;
    for (const auto& [key, c] : t_) out.add_term(key.first, key.second, c * s);
    *this = std::move(out);
    return *this;
}

std::string ValidationReport::message() const {
    if (!degenerate.empty()) return "degenerate term: " + degenerate;
    if (violations.empty()) return "term is admissible";
    std::ostringstream os;
    os << "inadmissible term:";
    for (const auto& v : violations) os << " factor " << v.factor << " (" << v.rule << ");";
    return os.str();
}

ValidationReport check_admissibility(const ProperTerm& term) {
    ValidationReport rep;
    if (term.P.is_zero()) rep.degenerate = "P is the zero polynomial";
    else if (term.xi.is_zero()) rep.degenerate = "xi = 0";
    else if (term.theta.is_zero()) rep.degenerate = "theta = 0";
    for (std::size_t j = 0; j < term.factors.size(); ++j) {
        const auto& f = term.factors[j];
        if (!f.b.is_integer()) continue;
        if (static_cast<__int128>(f.alpha) * f.beta < 0)
            rep.violations.push_back({j, "mixed-sign shifts need a non-integer parameter"});
        else if ((f.alpha > 0 || f.beta > 0) && sgn(f.b.re) <= 0)
            rep.violations.push_back({j, "increasing index on a non-positive integer parameter"});
        else if ((f.alpha < 0 || f.beta < 0) && sgn(f.b.re) >= 0)
            rep.violations.push_back({j, "decreasing index on a non-negative integer parameter"});
    }
    return rep;
}

ProperTerm validate(ProperTerm term) {
    ValidationReport rep = check_admissibility(term);
    if (!rep.ok()) throw TermError(std::move(rep));
    std::erase_if(term.factors, [](const PochhammerFactor& f) { return f.alpha == 0 && f.beta == 0; });
    return term;
}

static GaussianRational sign_power(long e) { return GaussianRational(e % 2 == 0 ? 1 : -1); }

ProperTerm from_pfq(const PfqSpec& spec) {
    ProperTerm t;
    t.theta = spec.argument;
    for (const auto& u : spec.upper) {
        if (u.shift == 0) {
            t.factors.push_back({u.value, 0, 1});
        } else {
            // (b + s n)_k = (b)_{s n + k} (1 - b)_{-s n} (-1)^{s n}
            t.factors.push_back({u.value, u.shift, 1});
            t.factors.push_back({GaussianRational(1) - u.value, -u.shift, 0});
            t.xi *= sign_power(u.shift);
        }
    }
    for (const auto& d : spec.lower) {
        if (d.shift == 0) {
            if (d.value.is_integer() && sgn(d.value.re) <= 0)
                throw InvalidInput("lower parameter is a non-positive integer");
            // 1/(d)_k = (1 - d)_{-k} (-1)^k
            t.factors.push_back({GaussianRational(1) - d.value, 0, -1});
            t.theta *= GaussianRational(-1);
        } else {
            // 1/(d + s n)_k = (d)_{s n} (1 - d)_{-s n - k} (-1)^{s n + k}
            t.factors.push_back({d.value, d.shift, 0});
            t.factors.push_back({GaussianRational(1) - d.value, -d.shift, -1});
            t.xi *= sign_power(d.shift);
            t.theta *= GaussianRational(-1);
        }
    }
    return validate(std::move(t));
}

namespace {

struct Linear {
    long cn, ck;
    GaussianRational c0;
    friend bool operator==(const Linear&, const Linear&) = default;
};

}  // namespace

ShiftQuotient shift_quotient(const ProperTerm& term, Axis axis) {
    std::vector<Linear> num, den;
    for (const auto& f : term.factors) {
        long s = axis == Axis::K ? f.beta : f.alpha;
        // (b)_{m+s} / (b)_m with m = alpha n + beta k
        for (long i = 0; i < s; ++i) num.push_back({f.alpha, f.beta, f.b + GaussianRational(i)});
        for (long i = 1; i <= -s; ++i) den.push_back({f.alpha, f.beta, f.b - GaussianRational(i)});
    }
    if (axis == Axis::K) den.push_back({0, 1, GaussianRational(1)});
    for (auto it = num.begin(); it != num.end();) {
        auto hit = std::find(den.begin(), den.end(), *it);
        if (hit != den.end()) {
            den.erase(hit);
            it = num.erase(it);
        } else {
            ++it;
        }
    }
    BivarPoly pn = axis == Axis::K ? term.P.shifted(0, 1) : term.P.shifted(1, 0);
    BivarPoly pd = term.P;
    if (pn == pd) pn = pd = BivarPoly::constant(1);
    ShiftQuotient q{pn * (axis == Axis::K ? term.theta : term.xi), pd};
    for (const auto& l : num) q.numerator *= BivarPoly::linear(l.cn, l.ck, l.c0);
    for (const auto& l : den) q.denominator *= BivarPoly::linear(l.cn, l.ck, l.c0);
    return q;
}

ProperTerm absorb_linear_factor(const ProperTerm& term, long a, long b, const GaussianRational& ell) {
    if (ell.is_zero()) throw InvalidInput("linear factor with zero constant cannot be absorbed");
    auto q = term.P.divide_exact(BivarPoly::linear(a, b, ell));
    if (!q) throw InvalidInput("linear factor does not divide P");
    // ell + m = ell (ell + 1)_m / (ell)_m and 1/(ell)_m = (-1)^m (1 - ell)_{-m}
    ProperTerm t = term;
    t.P = *q * ell;
    t.factors.push_back({ell + GaussianRational(1), a, b});
    t.factors.push_back({GaussianRational(1) - ell, -a, -b});
    t.xi *= sign_power(a);
    t.theta *= sign_power(b);
    return t;
}

// Restriction of P to a line: P(x, k0) (by_n) or P(n0, x).
static GaussPoly restrict_poly(const BivarPoly& p, bool by_n, long fixed) {
    GaussPoly r;
    for (const auto& [key, c] : p.terms()) {
        int e = by_n ? key.first : key.second;
        int other = by_n ? key.second : key.first;
        GaussianRational v = c * GaussianRational(pow(Rational(fixed), other));
        r.set_coeff(e, r.coeff(e) + v);
    }
    return r;
}

ProperTerm normalize(const ProperTerm& term) {
    ProperTerm t = term;
    bool changed = true;
    while (changed && t.P.total_degree() > 0) {
        changed = false;
        for (long a = 0; a <= 3 && !changed; ++a) {
            for (long b = -3; b <= 3 && !changed; ++b) {
                if ((a == 0 && b <= 0) || std::gcd(a, b) != 1) continue;
                for (long k0 = 0; k0 <= 4 && !changed; ++k0) {
                    GaussPoly r = restrict_poly(t.P, a != 0, k0);
                    if (r.is_zero()) continue;
                    PolyQ rr = r.real_root_poly();
                    if (rr.degree() < 1) break;
                    for (const Rational& root : rational_roots(rr)) {
                        GaussianRational ell = a != 0 ? GaussianRational(-Rational(a) * root - Rational(b * k0))
                                                      : GaussianRational(-root);
                        if (ell.is_zero() || !t.P.divide_exact(BivarPoly::linear(a, b, ell))) continue;
                        ProperTerm cand = absorb_linear_factor(t, a, b, ell);
                        if (!check_admissibility(cand).ok()) continue;
                        t = std::move(cand);
                        changed = true;
                        break;
                    }
                    break;
                }
            }
        }
    }
    return t;
}

std::string describe(const ProperTerm& term) {
    std::ostringstream os;
    os << "P = " << term.P.to_string() << ", xi = " << to_string(term.xi) << ", theta = " << to_string(term.theta)
       << ", factors:";
    for (const auto& f : term.factors) os << " (" << to_string(f.b) << "; " << f.alpha << ", " << f.beta << ")";
    return os.str();
}

}  // namespace hypconv
