#include "hypconv/invariants.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace hypconv {

GaussianRational a_hat(const PochhammerFactor& f) { return f.b + GaussianRational(make_rational(f.beta - 1, 2)); }

GaussianRational a_tilde(const PochhammerFactor& f) { return f.b + GaussianRational(make_rational(f.alpha - 1, 2)); }

GaussianRational StructuralConstants::B1() const {
    return A1 + GaussianRational(make_rational(D1_star, 2));
}

StructuralConstants structural_constants(const ProperTerm& term) {
    StructuralConstants c;
    c.D0 = -1;
    c.deg_n_P = term.P.degree_n();
    c.deg_k_P = term.P.degree_k();
    c.total_deg_P = term.P.total_degree();
    c.Q = term.P.leading_in_n();
    c.deg_k_Q = c.Q.degree();

    GaussianRational sum_hat, sum_tilde, hat_alpha0, tilde_beta0;
    Rational prod_beta = 1, prod_alpha_beta = 1, prod_beta_beta_a0 = 1, prod_alpha = 1, prod_beta_alpha = 1,
             prod_alpha_alpha_b0 = 1;
    std::map<Rational, OmegaPoint> omega;
    for (std::size_t j = 0; j < term.factors.size(); ++j) {
        const auto& f = term.factors[j];
        Rational al(f.alpha), be(f.beta);
        c.D0 += f.beta;
        c.D0_star += f.alpha;
        if (f.alpha != 0) c.D1 += f.beta;
        if (f.beta != 0) c.D1_star += f.alpha;
        if (f.beta != 0) {
            sum_hat += a_hat(f);
            if (f.alpha == 0) hat_alpha0 += a_hat(f);
        }
        if (f.alpha != 0) {
            sum_tilde += a_tilde(f);
            if (f.beta == 0) tilde_beta0 += a_tilde(f);
        }
        prod_beta *= pow(be, f.beta);
        prod_alpha *= pow(al, f.alpha);
        if (f.alpha != 0) prod_alpha_beta *= pow(al, f.beta);
        else prod_beta_beta_a0 *= pow(be, f.beta);
        if (f.beta != 0) prod_beta_alpha *= pow(be, f.alpha);
        else prod_alpha_alpha_b0 *= pow(al, f.alpha);
        if (f.alpha != 0) {
            Rational t = make_rational(-f.beta, f.alpha);
            auto& p = omega[t];
            p.t = t;
            p.factors.push_back(j);
            p.alpha_sum += f.alpha;
            p.beta_sum += f.beta;
            c.H0.entries.push_back({f.alpha, f.b});
            c.H0.two_pi_exponent += make_rational(1 - f.alpha, 2);
        }
    }
    c.A0 = sum_hat + GaussianRational(c.deg_k_P);
    c.A_inf_star = sum_tilde + GaussianRational(c.deg_n_P);
    c.A0_star = hat_alpha0 + GaussianRational(c.deg_k_Q);
    c.A1 = sum_hat + tilde_beta0 + GaussianRational(c.total_deg_P);
    c.A1_star = hat_alpha0 + sum_tilde + GaussianRational(c.total_deg_P);
    c.z0 = term.theta * GaussianRational(prod_beta);
    c.z1 = term.theta * GaussianRational(prod_alpha_beta * prod_beta_beta_a0);
    c.z_inf = term.theta * GaussianRational(prod_alpha_beta);
    c.zeta0 = term.xi * GaussianRational(prod_alpha);
    c.zeta1 = term.xi * GaussianRational(prod_beta_alpha * prod_alpha_alpha_b0);
    for (auto& [t, p] : omega) c.omega.push_back(std::move(p));
    return c;
}

cdouble h0_value(const H0Expr& h) {
    using std::numbers::pi;
    cdouble v = std::pow(2 * pi, h.two_pi_exponent.get_d());
    for (const auto& e : h.entries) {
        cdouble b = e.b.to_complex();
        v *= std::exp((b - 0.5) * std::log(static_cast<double>(std::labs(e.alpha))));
        if (e.alpha > 0) {
            v /= gamma(b);
        } else if (e.b.is_integer()) {
            // 1/(Gamma(b) 2 sin(pi b)) = Gamma(1-b)/(2 pi) at the removable singularity
            v *= gamma(1.0 - b) / (2 * pi);
        } else {
            v /= gamma(b) * 2.0 * std::sin(pi * b);
        }
    }
    return v;
}

cdouble h0_value_unit_alphas(const H0Expr& h) {
    cdouble v = 1;
    for (const auto& e : h.entries) {
        if (std::labs(e.alpha) != 1) throw DomainError("closed form needs alpha = +-1");
        cdouble b = e.b.to_complex();
        if (e.alpha > 0) v /= gamma(b);
        else v *= gamma(1.0 - b);
    }
    return v;
}

}  // namespace hypconv
