#include "hypconv/decision.hpp"

#include <sstream>

namespace hypconv {

const char* roman(int id) {
    static const char* names[] = {"?", "i", "ii", "iii", "iv", "v", "vi", "vii"};
    return id >= 1 && id <= 7 ? names[id] : names[0];
}

std::string to_string(LimitKind k) {
    switch (k) {
        case LimitKind::Zero: return "zero";
        case LimitKind::ConstantH0Q0: return "constant";
        case LimitKind::SeriesGlimzn: return "series";
    }
    return "?";
}

namespace {

std::string str(const GaussianRational& z) { return to_string(z); }
std::string str(const Rational& r) { return to_string(r); }

std::string abs2_relation(const char* name, const Rational& a2) {
    int s = cmp(a2, 1);
    return std::string("|") + name + "|^2 = " + str(a2) + (s < 0 ? " < 1" : s == 0 ? " = 1" : " > 1");
}

// Condition (v) at one point with g(t) = 1; returns the failures.
std::vector<std::string> check_unit_point(const ProperTerm& term, const AlgebraicReal& t, long omega_alpha_sum) {
    std::vector<std::string> fail;
    std::string at = "t = " + t.to_string();
    PiecewiseAffine ps = psi_star(term, t);
    GaussianRational p0 = ps(0);
    if (sgn(p0.re) >= 0) fail.push_back(at + ": Re psi*_t(0) = " + str(p0.re) + " >= 0");
    if (omega_alpha_sum != 0) fail.push_back(at + ": alpha sum over vanishing factors = " + std::to_string(omega_alpha_sum));
    PhiExpansion ph = phi_expansion(term, PhiAt::point(t));
    if (ph.identically_zero) {
        GaussianRational p1 = ps(1);
        if (sgn(p1.re) > 0) fail.push_back(at + ": Phi_t = 0 and Re psi*_t(1) = " + str(p1.re) + " > 0");
    } else {
        std::string lead = "Phi_t leading order m = " + std::to_string(ph.m);
        if (ph.m % 2 == 0) fail.push_back(at + ": " + lead + " is even");
        else if (ph.v_sign > 0) fail.push_back(at + ": " + lead + " has positive coefficient");
        else {
            GaussianRational pm = ps(make_rational(ph.m, ph.m + 1));
            if (sgn(pm.re) >= 0) fail.push_back(at + ": " + lead + ", Re psi*_t(m/(m+1)) = " + str(pm.re) + " >= 0");
        }
    }
    return fail;
}

bool in_omega(const StructuralConstants& c, const Rational& t) {
    for (const auto& w : c.omega)
        if (w.t == t) return true;
    return false;
}

}  // namespace

Verdict decide(const ProperTerm& input) {
    ProperTerm term = validate(input);
    StructuralConstants c = structural_constants(term);
    Verdict v;
    for (int i = 0; i < 7; ++i) v.conditions[i].id = i + 1;
    auto& C1 = v.conditions[0];
    auto& C2 = v.conditions[1];
    auto& C3 = v.conditions[2];
    auto& C4 = v.conditions[3];
    auto& C5 = v.conditions[4];
    auto& C6 = v.conditions[5];
    auto& C7 = v.conditions[6];

    Rational z0a = c.z0.norm2(), zeta0a = c.zeta0.norm2(), z1a = c.z1.norm2(), zeta1a = c.zeta1.norm2();

    C1.applicable = true;
    C1.satisfied = c.D0 <= 0 && c.D0_star <= 0;
    C1.witnesses.push_back("D0 = " + std::to_string(c.D0) + ", D0* = " + std::to_string(c.D0_star));

    if (c.D0 == 0) {
        C2.applicable = true;
        C2.witnesses.push_back(abs2_relation("z0", z0a));
        int s = cmp(z0a, 1);
        C2.satisfied = s < 0 || (s == 0 && sgn(c.A0.re) < 0 && c.D1_star <= 0);
        if (s == 0)
            C2.witnesses.push_back("Re A0 = " + str(c.A0.re) + ", D1* = " + std::to_string(c.D1_star));
    }
    if (c.D0_star == 0) {
        C3.applicable = true;
        C3.witnesses.push_back(abs2_relation("zeta0", zeta0a));
        int s = cmp(zeta0a, 1);
        bool unit = c.zeta0 == GaussianRational(1);
        C3.satisfied = s < 0 || (s == 0 && sgn(c.A_inf_star.re) < 0 && c.D1 <= 0) ||
                       (unit && c.A_inf_star.is_zero() && c.D1 <= 0);
        if (s == 0)
            C3.witnesses.push_back("zeta0 = " + str(c.zeta0) + ", A_inf* = " + str(c.A_inf_star) +
                                   ", D1 = " + std::to_string(c.D1));
    }

    v.sufficient_shortcut = c.D0 < 0 || c.D0_star < 0;
    bool critical = c.D0 == 0 && c.D0_star == 0;

    if (critical) {
        PsiFunctions psi = psi_functions(term, c);
        if (z0a == 1 && c.D1_star == 0) {
            C6.applicable = true;
            C6.witnesses.push_back(abs2_relation("zeta1", zeta1a));
            int s = cmp(zeta1a, 1);
            if (s < 0) {
                C6.satisfied = true;
            } else if (s > 0) {
                C6.satisfied = false;
            } else {
                PhiExpansion ph = phi_expansion(term, PhiAt::zero());
                if (ph.identically_zero) {
                    C6.satisfied = sgn(c.A1.re) <= 0;
                    C6.witnesses.push_back("Phi_0 = 0, Re A1 = " + str(c.A1.re));
                } else {
                    GaussianRational pm = psi.psi0(make_rational(ph.m, ph.m + 1));
                    C6.satisfied = ph.v_sign < 0 && sgn(pm.re) < 0;
                    C6.witnesses.push_back("Phi_0 leading order " + std::to_string(ph.m) + " coefficient " +
                                           str(*ph.v_exact) + ", Re psi0(m/(m+1)) = " + str(pm.re));
                }
            }
        }
        if (zeta0a == 1 && c.D1 == 0) {
            C7.applicable = true;
            C7.witnesses.push_back(abs2_relation("z1", z1a));
            int s = cmp(z1a, 1);
            if (s < 0) {
                C7.satisfied = true;
            } else if (s > 0) {
                C7.satisfied = false;
            } else {
                PhiExpansion ph = phi_expansion(term, PhiAt::infinity());
                if (ph.identically_zero) {
                    int a = sgn(c.A1_star.re);
                    bool degree_gap = c.total_deg_P > c.deg_n_P + c.deg_k_Q;
                    C7.satisfied = a < 0 || (a == 0 && (sgn(c.A_inf_star.re) < 0 || degree_gap));
                    C7.witnesses.push_back("Phi_inf = 0, Re A1* = " + str(c.A1_star.re) + ", Re A_inf* = " +
                                           str(c.A_inf_star.re) + (degree_gap ? ", degree gap" : ""));
                } else {
                    GaussianRational pm = psi.psi_inf(make_rational(ph.m + 1, ph.m));
                    bool extra = !c.A_inf_star.is_zero() || sgn(c.A0_star.re) < 0;
                    C7.satisfied = ph.v_sign < 0 && sgn(pm.re) < 0 && extra;
                    C7.witnesses.push_back("Phi_inf leading order " + std::to_string(ph.m) + " coefficient " +
                                           str(*ph.v_exact) + ", Re psi_inf((m+1)/m) = " + str(pm.re) +
                                           ", A_inf* = " + str(c.A_inf_star) + ", Re A0* = " + str(c.A0_star.re));
                }
            }
        }

        Landscape L = critical_points(term, c);
        C4.applicable = true;
        C5.applicable = true;
        if (cmp(z0a, 1) > 0) {
            C4.satisfied = false;
            C4.witnesses.push_back("g(0+) = |z0| > 1");
        }
        int zs = cmp(zeta0a, 1);
        if (zs > 0 || (zs == 0 && (c.D1 > 0 || (c.D1 == 0 && cmp(z1a, 1) > 0)))) {
            C4.satisfied = false;
            C4.witnesses.push_back("g(t) exceeds 1 as t -> infinity");
        }
        if (L.constant) {
            C4.witnesses.push_back("g is constant, g^2 = " + str(L.constant_abs2));
            if (L.constant_abs2 == 1) {
                // Every t > 0 has g(t) = 1: check the exceptional points and one generic point.
                std::vector<std::pair<AlgebraicReal, long>> pts;
                for (const auto& w : c.omega)
                    if (sgn(w.t) > 0) pts.emplace_back(AlgebraicReal::from_rational(w.t), w.alpha_sum);
                PolyQ top = term.P.top_homogeneous().real_root_poly();
                if (top.degree() > 0)
                    for (auto& r : isolate_real_roots(top, {Rational(0), std::nullopt}))
                        if (!(r.is_rational() && in_omega(c, r.rational_value()))) pts.emplace_back(r, 0);
                for (long q = 1;; ++q) {
                    Rational t = make_rational(q, 1) + make_rational(1, q + 1);
                    if (in_omega(c, t) || (top.degree() > 0 && sign_at(top, t) == 0)) continue;
                    pts.emplace_back(AlgebraicReal::from_rational(t), 0);
                    break;
                }
                C5.witnesses.push_back("g = 1 on all of t > 0; generic psi*_t = " + str(c.B1()));
                for (const auto& [t, s] : pts) {
                    auto f = check_unit_point(term, t, s);
                    for (auto& m : f) C5.witnesses.push_back(std::move(m));
                    if (!f.empty()) C5.satisfied = false;
                }
            }
        } else {
            for (const auto& p : L.points) {
                if (p.value_sign > 0) {
                    C4.satisfied = false;
                    C4.witnesses.push_back("g(t) > 1 at t = " + p.t.to_string());
                } else if (p.value_sign == 0) {
                    C5.witnesses.push_back("g(t) = 1 at t = " + p.t.to_string());
                    auto f = check_unit_point(term, p.t, p.in_omega ? p.omega_alpha_sum : 0);
                    for (auto& m : f) C5.witnesses.push_back(std::move(m));
                    if (!f.empty()) C5.satisfied = false;
                }
            }
        }
    }

    v.uniform = true;
    for (const auto& r : v.conditions)
        if (r.applicable && !r.satisfied) v.uniform = false;
    if (v.uniform) {
        if (c.D0_star < 0 || cmp(zeta0a, 1) < 0 || sgn(c.A_inf_star.re) < 0) v.limit = LimitKind::Zero;
        else if (c.D1 < 0) v.limit = LimitKind::ConstantH0Q0;
        else v.limit = LimitKind::SeriesGlimzn;
    }
    return v;
}

LimitValue limit_series(const ProperTerm& input, double tol) {
    ProperTerm term = validate(input);
    Verdict v = decide(term);
    if (!v.uniform || !v.limit) throw ContractError("limit requested for a non-uniformly convergent term");
    StructuralConstants c = structural_constants(term);
    LimitValue out{*v.limit, 0.0, 0.0, ""};
    if (*v.limit == LimitKind::Zero) {
        out.symbolic = "0";
        return out;
    }
    cdouble h0 = h0_value(c.H0);
    auto Q = [&](double k) {
        cdouble s = 0;
        for (int i = c.Q.degree(); i >= 0; --i) s = s * k + c.Q.coeff(i).to_complex();
        return s;
    };
    if (*v.limit == LimitKind::ConstantH0Q0) {
        out.value = h0 * Q(0);
        out.symbolic = "H0 Q(0)";
        return out;
    }
    // H0 sum_k Q(k) z_inf^k / k! prod_{alpha=0} (b)_{beta k}
    cdouble z = c.z_inf.to_complex();
    std::vector<cdouble> w{1.0};
    auto term_at = [&](long k) {
        while (static_cast<long>(w.size()) <= k) {
            long j = static_cast<long>(w.size()) - 1;
            cdouble r = z / static_cast<double>(j + 1);
            for (const auto& f : term.factors) {
                if (f.alpha != 0) continue;
                cdouble b = f.b.to_complex();
                double m = static_cast<double>(f.beta * j);
                for (long i = 0; i < f.beta; ++i) r *= b + m + static_cast<double>(i);
                for (long i = 1; i <= -f.beta; ++i) r /= b + m - static_cast<double>(i);
            }
            w.push_back(w.back() * r);
        }
        return h0 * Q(static_cast<double>(k)) * w[k];
    };
    Accelerated s = sum_series(term_at, tol);
    out.value = s.value;
    out.error_bound = s.error;
    std::ostringstream os;
    os << "H0 * sum_k Q(k) (" << to_string(c.z_inf) << ")^k / k! * prod (b)_{beta k}";
    out.symbolic = os.str();
    return out;
}

}  // namespace hypconv
