#include "hypconv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hypconv {

cdouble term_value(const ProperTerm& term, long n, long k) {
    if (n < 0 || k < 0) throw InvalidInput("term indices must be non-negative");
    cdouble p = term.P.eval(cdouble(static_cast<double>(n)), cdouble(static_cast<double>(k)));
    if (p == 0.0) return 0.0;
    cdouble lg = std::lgamma(static_cast<double>(k) + 1.0) * -1.0;
    if (n) lg += static_cast<double>(n) * std::log(term.xi.to_complex());
    if (k) lg += static_cast<double>(k) * std::log(term.theta.to_complex());
    for (const auto& f : term.factors) lg += log_pochhammer(f.b.to_complex(), f.alpha * n + f.beta * k);
    return p * std::exp(lg);
}

double log_abs_term(const ProperTerm& term, long n, long k) {
    cdouble p = term.P.eval(cdouble(static_cast<double>(n)), cdouble(static_cast<double>(k)));
    if (p == 0.0) return -INFINITY;
    double lg = std::log(std::abs(p)) - std::lgamma(static_cast<double>(k) + 1.0);
    lg += 0.5 * static_cast<double>(n) * std::log(term.xi.norm2().get_d());
    lg += 0.5 * static_cast<double>(k) * std::log(term.theta.norm2().get_d());
    for (const auto& f : term.factors) lg += log_pochhammer(f.b.to_complex(), f.alpha * n + f.beta * k).real();
    return lg;
}

namespace {

// Walks |u(n,k)| along n with the n-direction ratio.
struct Scanner {
    struct F {
        cdouble b;
        long alpha, beta;
    };
    std::vector<F> shifting;  // alpha != 0
    double log_xi;
    const ProperTerm& term;
    bool p_constant;
    std::vector<std::vector<cdouble>> pc;  // pc[dn][dk]

    explicit Scanner(const ProperTerm& t) : term(t) {
        for (const auto& f : t.factors)
            if (f.alpha != 0) shifting.push_back({f.b.to_complex(), f.alpha, f.beta});
        log_xi = 0.5 * std::log(t.xi.norm2().get_d());
        p_constant = t.P.total_degree() == 0;
        pc.assign(std::max(t.P.degree_n(), 0) + 1, std::vector<cdouble>(std::max(t.P.degree_k(), 0) + 1, 0.0));
        for (const auto& [key, c] : t.P.terms()) pc[key.first][key.second] = c.to_complex();
    }

    std::vector<cdouble> p_in_n(long k) const {
        std::vector<cdouble> out(pc.size(), 0.0);
        for (std::size_t i = 0; i < pc.size(); ++i) {
            cdouble acc = 0;
            for (std::size_t j = pc[i].size(); j-- > 0;) acc = acc * static_cast<double>(k) + pc[i][j];
            out[i] = acc;
        }
        return out;
    }

    static double log_abs_poly(const std::vector<cdouble>& c, double n) {
        cdouble acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * n + c[i];
        return std::log(std::abs(acc));
    }

    // log |u(n+1,k)/u(n,k)| without the polynomial.
    double log_step(long n, long k) const {
        double num = 1, den = 1;
        for (const auto& f : shifting) {
            double m = static_cast<double>(f.alpha * n + f.beta * k);
            for (long i = 0; i < f.alpha; ++i) num *= std::abs(f.b + (m + static_cast<double>(i)));
            for (long i = 1; i <= -f.alpha; ++i) den *= std::abs(f.b + (m - static_cast<double>(i)));
        }
        return log_xi + std::log(num / den);
    }

    // log |u(0,k)| without the polynomial.
    double seed(long k) const {
        double lg = 0.5 * static_cast<double>(k) * std::log(term.theta.norm2().get_d()) -
                    std::lgamma(static_cast<double>(k) + 1.0);
        for (const auto& f : term.factors) lg += log_pochhammer(f.b.to_complex(), f.beta * k).real();
        return lg;
    }

    SupScan scan(long k, long n_max) const {
        SupScan s;
        auto pk = p_in_n(k);
        double x = seed(k);
        double last = 0;
        for (long n = 0; n <= n_max; ++n) {
            double v = p_constant ? x + std::log(std::abs(pk[0])) : x + log_abs_poly(pk, static_cast<double>(n));
            if (v > s.log_sup) {
                s.log_sup = v;
                s.argmax = n;
            }
            last = v;
            if (n < n_max) x += log_step(n, k);
        }
        double next = x + log_step(n_max, k) +
                      (p_constant ? std::log(std::abs(pk[0])) : log_abs_poly(pk, static_cast<double>(n_max + 1)));
        s.unstable = next > last && std::isfinite(last);
        // geometric probes beyond n_max catch profiles that approach their sup only for n >> k
        double prev = last;
        int rising = 0;
        long n = n_max;
        // log-gamma differences carry absolute noise near 1e-7 at the far end
        const double noise = 1e-6;
        while (n < (1L << 24)) {
            n *= 2;
            double v = log_abs_term(term, n, k);
            if (v > s.log_sup) {
                s.log_sup = v;
                s.argmax = n;
            }
            rising = v > prev + noise ? rising + 1 : 0;
            if (std::fabs(v - prev) < noise) break;
            prev = v;
        }
        if (rising >= 4) {
            // still increasing: bounded if the increments shrink geometrically
            // spacing by 8 keeps the increments well above the noise
            double v1 = log_abs_term(term, n / 64, k), v2 = log_abs_term(term, n / 8, k), v3 = log_abs_term(term, n, k);
            double d1 = v2 - v1, d2 = v3 - v2;
            if (d1 > 0 && d2 > 0 && d2 < 0.9 * d1) {
                double r = d2 / d1;
                s.log_sup = std::max(s.log_sup, v3 + d2 * r / (1 - r));
            } else {
                s.log_sup = INFINITY;
            }
        }
        return s;
    }
};

double log_add(double a, double b) {
    if (a == -INFINITY) return b;
    if (b == -INFINITY) return a;
    double m = std::max(a, b);
    if (m == INFINITY) return INFINITY;
    return m + std::log1p(std::exp(std::min(a, b) - m));
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
    double n = static_cast<double>(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

SupScan sup_scan(const ProperTerm& term, long k, long n_max) {
    if (n_max < 1) throw InvalidInput("n_max must be positive");
    return Scanner(term).scan(k, n_max);
}

std::string to_string(Empirical e) {
    switch (e) {
        case Empirical::Converges: return "converges";
        case Empirical::Diverges: return "diverges";
        case Empirical::Inconclusive: return "inconclusive";
    }
    return "?";
}

EmpiricalReport empirical_verdict(const ProperTerm& term, const OracleOptions& opt) {
    if (opt.k_max < 1 || opt.n_max < 1 || !(opt.tol > 0)) throw InvalidInput("oracle parameters must be positive");
    EmpiricalReport rep;
    rep.k_max = opt.k_max;
    rep.n_max = opt.n_max;
    rep.tol = opt.tol;
    Scanner sc(term);
    const double threshold = std::log(1e12);
    double log_sum = -INFINITY;
    int rising = 0;
    for (long k = 0; k < opt.k_max; ++k) {
        SupScan s = sc.scan(k, opt.n_max);
        rep.sup_sequence.push_back({k, s.log_sup, s.argmax});
        log_sum = log_add(log_sum, s.log_sup);
        rep.partial_sums.push_back(std::exp(log_sum));
        if (k > 0 && s.log_sup > rep.sup_sequence[k - 1].log_m) ++rising;
        else rising = 0;
        std::string why;
        if (s.log_sup == INFINITY) why = "sup over n is unbounded at k = " + std::to_string(k);
        else if (log_sum > threshold) why = "partial sums exceed 1e12 at k = " + std::to_string(k);
        else if (rising >= 50) why = "M_k increased for 50 consecutive k up to k = " + std::to_string(k);
        if (!why.empty()) {
            rep.classification = Empirical::Diverges;
            rep.reason = why;
            rep.partial_sums.resize(opt.k_max, rep.partial_sums.back());
            return rep;
        }
    }
    std::vector<double> lk, kk, lm;
    for (long k = std::max<long>(1, opt.k_max / 4); k < opt.k_max; ++k) {
        double v = rep.sup_sequence[k].log_m;
        if (!std::isfinite(v)) continue;
        lk.push_back(std::log(static_cast<double>(k)));
        kk.push_back(static_cast<double>(k));
        lm.push_back(v);
    }
    if (lm.size() < 8) {
        rep.reason = "too few finite sup values to fit a decay rate";
        return rep;
    }
    double s = slope(lk, lm), sigma = slope(kk, lm);
    rep.decay_exponent = s;
    double last = std::exp(lm.back()), K = kk.back();
    if (sigma < 0) {
        double r = std::exp(sigma);
        rep.tail_estimate = last * r / (1 - r);
    }
    if (s < -1) rep.tail_estimate = std::min(rep.tail_estimate, last * K / (-s - 1));
    constexpr double kMargin = 0.15;
    if (s < -1 - kMargin) {
        rep.classification = Empirical::Converges;
        rep.reason = "M_k decays like k^" + std::to_string(s);
    } else if (s > -1 + kMargin) {
        rep.classification = Empirical::Diverges;
        rep.reason = "M_k decays no faster than k^" + std::to_string(s);
    } else {
        rep.reason = "decay exponent " + std::to_string(s) + " too close to -1";
    }
    return rep;
}

Accelerated limit_value_numeric(const ProperTerm& input, double tol) {
    ProperTerm term = validate(input);
    std::vector<cdouble> ladder;
    for (int j = 4; j <= 14; ++j) ladder.push_back(term_value(term, 1L << j, 0));
    double scale = 0;
    for (auto v : ladder) scale = std::max(scale, std::abs(v));
    Accelerated l0 = scale == 0 ? Accelerated{0.0, 0} : wynn_epsilon(ladder);
    if (!(l0.error <= 1e-6 * std::max(std::abs(l0.value), 1.0)))
        throw EvaluationError("termwise limit ladder does not converge");
    if (std::abs(l0.value) < 1e-14 * std::max(scale, 1.0) && l0.error < 1e-10) return {0.0, l0.error};
    ShiftQuotient q = shift_quotient(term, Axis::K);
    std::vector<cdouble> ratios;
    auto ratio_limit = [&](long i) {
        std::vector<cdouble> vals;
        for (int j = 10; j <= 26; ++j) {
            cdouble n(static_cast<double>(1L << j));
            cdouble k(static_cast<double>(i));
            vals.push_back(q.numerator.eval(n, k) / q.denominator.eval(n, k));
        }
        Accelerated a = wynn_epsilon(vals);
        if (!(a.error <= 1e-8 * std::max(std::abs(a.value), 1.0)))
            throw EvaluationError("ratio ladder does not converge");
        return a.value;
    };
    std::vector<cdouble> terms{l0.value};
    auto term_at = [&](long k) {
        while (static_cast<long>(terms.size()) <= k) {
            long i = static_cast<long>(terms.size()) - 1;
            terms.push_back(terms.back() * ratio_limit(i));
        }
        return terms[k];
    };
    Accelerated s = sum_series(term_at, tol);
    s.error += l0.error * std::abs(s.value) / std::max(std::abs(l0.value), 1e-300);
    return s;
}

double theta(double x) {
    if (!(x > -1)) throw DomainError("theta needs x > -1");
    if (std::fabs(x) < 1e-3) {
        double s = 0, p = x;
        for (int j = 1; j <= 10; ++j) {
            s += (j % 2 ? 1.0 : -1.0) * p / (j * (j + 1.0));
            p *= x;
        }
        return s;
    }
    return (1 + x) / x * std::log1p(x) - 1;
}

double stirling_ratio(double lambda, double l, double m) {
    double lg = std::lgamma(lambda * m + l) - (l + (lambda - 1) / 2) * std::log(m) - lambda * m * std::log(lambda) -
                lambda * std::lgamma(m);
    return std::exp(lg);
}

double stirling_constant(double lambda, double l) {
    return std::pow(2 * std::numbers::pi, (1 - lambda) / 2) * std::pow(lambda, l - 0.5);
}

}  // namespace hypconv
