#pragma once

#include "hypconv/term.hpp"

namespace hypconv {

// u(n,k) through complex log-gamma.
cdouble term_value(const ProperTerm& term, long n, long k);
// log |u(n,k)|; -inf where P vanishes.
double log_abs_term(const ProperTerm& term, long n, long k);

struct SupScan {
    double log_sup = -INFINITY;  // log M_k, +inf when |u(n,k)| grows without bound in n
    long argmax = 0;
    bool unstable = false;  // still increasing at n_max
};

SupScan sup_scan(const ProperTerm& term, long k, long n_max);

enum class Empirical { Converges, Diverges, Inconclusive };

struct SupEntry {
    long k;
    double log_m;
    long argmax;
};

struct EmpiricalReport {
    Empirical classification = Empirical::Inconclusive;
    std::vector<double> partial_sums;  // K_max entries
    std::vector<SupEntry> sup_sequence;
    long k_max = 0, n_max = 0;
    double tol = 0;
    double decay_exponent = 0;  // fitted exponent s of M_k ~ k^s
    double tail_estimate = INFINITY;
    std::string reason;
};

struct OracleOptions {
    long k_max = 2000;
    long n_max = 4000;
    double tol = 1e-8;
};

EmpiricalReport empirical_verdict(const ProperTerm& term, const OracleOptions& opt = {});
std::string to_string(Empirical e);

// sum_k lim_n u(n,k) by ladder extrapolation of each termwise limit.
Accelerated limit_value_numeric(const ProperTerm& term, double tol = 1e-10);

// ((1+x)/x) log(1+x) - 1
double theta(double x);
// Gamma(lambda m + l) / (m^{l + (lambda-1)/2} lambda^{lambda m} Gamma(m)^lambda)
double stirling_ratio(double lambda, double l, double m);
// Limit of stirling_ratio: (2 pi)^{(1-lambda)/2} lambda^{l - 1/2}
double stirling_constant(double lambda, double l);

}  // namespace hypconv
