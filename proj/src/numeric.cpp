#include "hypconv/numeric.hpp"

#include "hypconv/rational.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace hypconv {

namespace {

// B_{2k} / (2k (2k-1))
constexpr double kStirling[] = {
    1.0 / 12,           -1.0 / 360,          1.0 / 1260,          -1.0 / 1680,
    1.0 / 1188,         -691.0 / 360360,     1.0 / 156,           -3617.0 / 122400,
    43867.0 / 244188,
};

bool is_nonpositive_integer(cdouble z) {
    return z.imag() == 0 && z.real() <= 0 && z.real() == std::floor(z.real());
}

}  // namespace

cdouble log_gamma(cdouble z) {
    using std::numbers::pi;
    if (is_nonpositive_integer(z)) throw EvaluationError("gamma pole");
    if (z.real() < 0.5) return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    cdouble shift = 0;
    cdouble prod = 1;
    while (std::abs(z) < 16) {
        prod *= z;
        z += 1.0;
        if (std::abs(prod) > 1e200) {
            shift += std::log(prod);
            prod = 1;
        }
    }
    shift += std::log(prod);
    cdouble inv = 1.0 / z, inv2 = inv * inv, sum = 0, pw = inv;
    for (double c : kStirling) {
        sum += c * pw;
        pw *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * pi) + sum - shift;
}

cdouble gamma(cdouble z) { return std::exp(log_gamma(z)); }

cdouble log_pochhammer(cdouble b, long m) {
    using std::numbers::pi;
    if (m < 0) {
        // (b)_{-j} = (-1)^j Gamma(1-b) / Gamma(1-b+j)
        double j = static_cast<double>(-m);
        return cdouble(0, pi * j) + log_gamma(1.0 - b) - log_gamma(1.0 - b + j);
    }
    if (m <= 32) {
        cdouble prod = 1;
        for (long i = 0; i < m; ++i) prod *= b + static_cast<double>(i);
        if (prod == 0.0) throw EvaluationError("vanishing Pochhammer symbol");
        return std::log(prod);
    }
    if (is_nonpositive_integer(b)) throw EvaluationError("vanishing Pochhammer symbol");
    return log_gamma(b + static_cast<double>(m)) - log_gamma(b);
}

Accelerated levin_u(std::span<const cdouble> terms) {
    std::size_t n0 = 0;
    cdouble prefix = 0;
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (terms[i] == 0.0) n0 = i + 1;
    for (std::size_t i = 0; i < n0; ++i) prefix += terms[i];
    std::size_t n = terms.size() - n0;
    if (n < 3) {
        cdouble s = prefix;
        for (std::size_t i = n0; i < terms.size(); ++i) s += terms[i];
        return {s, std::numeric_limits<double>::infinity()};
    }
    std::vector<cdouble> s(n), w(n);
    cdouble acc = prefix;
    for (std::size_t j = 0; j < n; ++j) {
        acc += terms[n0 + j];
        s[j] = acc;
        w[j] = (1.0 + static_cast<double>(j)) * terms[n0 + j];
    }
    std::vector<cdouble> est;
    for (std::size_t k = 1; k < n; ++k) {
        cdouble num = 0, den = 0;
        double binom = 1;
        for (std::size_t j = 0; j <= k; ++j) {
            double c = binom * std::pow((1.0 + j) / (1.0 + k), static_cast<double>(k) - 1);
            if (j & 1) c = -c;
            num += c * s[j] / w[j];
            den += c / w[j];
            binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
        }
        est.push_back(num / den);
    }
    Accelerated best{est.back(), std::numeric_limits<double>::infinity()};
    for (std::size_t i = 1; i < est.size(); ++i) {
        double d = std::abs(est[i] - est[i - 1]);
        if (std::isfinite(d) && d <= best.error) best = {est[i], d};
    }
    return best;
}

Accelerated wynn_epsilon(std::span<const cdouble> seq) {
    std::size_t n = seq.size();
    if (n == 0) throw EvaluationError("empty sequence");
    if (n < 3) return {seq.back(), n == 2 ? std::abs(seq[1] - seq[0]) : std::numeric_limits<double>::infinity()};
    // eps_{c+1}[j] = eps_{c-1}[j+1] + 1 / (eps_c[j+1] - eps_c[j]); even columns estimate the limit.
    std::vector<cdouble> before(n + 1, 0.0), cur(seq.begin(), seq.end());
    std::vector<std::vector<cdouble>> even_cols{cur};
    for (int col = 1; cur.size() > 1; ++col) {
        std::vector<cdouble> next(cur.size() - 1);
        bool stalled = false;
        for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
            cdouble d = cur[j + 1] - cur[j];
            if (d == 0.0) {
                stalled = true;
                break;
            }
            next[j] = before[j + 1] + 1.0 / d;
        }
        if (stalled) break;
        if (col % 2 == 0) even_cols.push_back(next);
        before = std::move(cur);
        cur = std::move(next);
    }
    Accelerated best{seq.back(), std::abs(seq[n - 1] - seq[n - 2])};
    for (const auto& c : even_cols) {
        if (c.size() < 2) continue;
        double d = std::abs(c.back() - c[c.size() - 2]);
        if (std::isfinite(d) && d < best.error) best = {c.back(), d};
    }
    return best;
}

Accelerated sum_series(const std::function<cdouble(long)>& term, double tol) {
    constexpr long kSlowCheck = 200;
    constexpr long kMaxTerms = 200000;
    std::vector<cdouble> terms;
    cdouble s = 0;
    std::vector<double> ratios;
    for (long k = 0; k < kMaxTerms; ++k) {
        cdouble a = term(k);
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) throw EvaluationError("non-finite series term");
        terms.push_back(a);
        s += a;
        if (k > 0 && terms[k - 1] != 0.0 && a != 0.0) ratios.push_back(std::abs(a / terms[k - 1]));
        if (a == 0.0 && k > 8 && std::all_of(terms.end() - 4, terms.end(), [](cdouble x) { return x == 0.0; }))
            return {s, 0};
        if (ratios.size() >= 10) {
            double rho = *std::max_element(ratios.end() - 10, ratios.end());
            if (rho < 0.98) {
                double bound = std::abs(a) * rho / (1 - rho);
                if (bound < tol * 1e-3) return {s, bound};
            } else if (k >= kSlowCheck) {
                break;
            }
        }
    }
    std::size_t take = std::min<std::size_t>(terms.size(), 60);
    // Levin works best on a moderate number of leading terms.
    Accelerated r = levin_u(std::span<const cdouble>(terms.data(), take));
    Accelerated r2 = levin_u(std::span<const cdouble>(terms.data(), std::min<std::size_t>(terms.size(), 40)));
    r.error = std::max(r.error, std::abs(r.value - r2.value));
    return r;
}

}  // namespace hypconv
