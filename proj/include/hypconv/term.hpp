#pragma once

#include "hypconv/numeric.hpp"
#include "hypconv/poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hypconv {

// (b)_{alpha n + beta k}
struct PochhammerFactor {
    GaussianRational b;
    long alpha = 0;
    long beta = 0;

    friend bool operator==(const PochhammerFactor&, const PochhammerFactor&) = default;
};

// Polynomial in (n, k) with Gaussian-rational coefficients, keyed by (deg_n, deg_k).
class BivarPoly {
public:
    using Key = std::pair<int, int>;

    BivarPoly() = default;
    static BivarPoly constant(const GaussianRational& c);
    // cn n + ck k + c0
    static BivarPoly linear(long cn, long ck, const GaussianRational& c0);

    void add_term(int deg_n, int deg_k, const GaussianRational& c);
    const std::map<Key, GaussianRational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    int degree_n() const;
    int degree_k() const;
    int total_degree() const;
    // Leading coefficient in n, as a polynomial in k.
    GaussPoly leading_in_n() const;
    // sum over deg_n + deg_k = total degree of c t^{deg_n}, i.e. the top coefficient of P(tk, k).
    GaussPoly top_homogeneous() const;
    // P(n + dn, k + dk)
    BivarPoly shifted(long dn, long dk) const;

    cdouble eval(cdouble n, cdouble k) const;
    GaussianRational eval(const GaussianRational& n, const GaussianRational& k) const;
    std::optional<BivarPoly> divide_exact(const BivarPoly& d) const;
    std::string to_string() const;

    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator*=(const BivarPoly& o);
    BivarPoly& operator*=(const GaussianRational& s);
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b);
    friend BivarPoly operator*(BivarPoly a, const BivarPoly& b) { return a *= b; }
    friend BivarPoly operator*(BivarPoly a, const GaussianRational& s) { return a *= s; }
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.t_ == b.t_; }

private:
    std::map<Key, GaussianRational> t_;
};

// u(n,k) = P(n,k) xi^n theta^k / k! prod_j (b_j)_{alpha_j n + beta_j k}
struct ProperTerm {
    BivarPoly P = BivarPoly::constant(1);
    GaussianRational xi{1};
    GaussianRational theta{1};
    std::vector<PochhammerFactor> factors;

    friend bool operator==(const ProperTerm&, const ProperTerm&) = default;
};

struct Violation {
    std::size_t factor;
    std::string rule;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::string degenerate;  // empty unless P, xi or theta vanishes
    bool ok() const { return violations.empty() && degenerate.empty(); }
    std::string message() const;
};

struct TermError : Error {
    ValidationReport report;
    explicit TermError(ValidationReport r) : Error(r.message()), report(std::move(r)) {}
};

ValidationReport check_admissibility(const ProperTerm& term);
// Throws TermError; factors with alpha = beta = 0 are dropped since (b)_0 = 1.
ProperTerm validate(ProperTerm term);

struct PfqParam {
    GaussianRational value;
    long shift = 0;
};

// pFq with parameters value + shift*n, summed over k.
struct PfqSpec {
    std::vector<PfqParam> upper;
    std::vector<PfqParam> lower;
    GaussianRational argument;
};

ProperTerm from_pfq(const PfqSpec& spec);

enum class Axis { N, K };

// u(n,k+1)/u(n,k) (Axis::K) or u(n+1,k)/u(n,k) (Axis::N), with common linear factors cancelled.
struct ShiftQuotient {
    BivarPoly numerator;
    BivarPoly denominator;
};

ShiftQuotient shift_quotient(const ProperTerm& term, Axis axis);

// Replaces the factor (a n + b k + ell) of P by Pochhammer factors.
ProperTerm absorb_linear_factor(const ProperTerm& term, long a, long b, const GaussianRational& ell);
// Absorbs every linear factor of P with small integer slopes and nonzero rational constant
// whose Pochhammer replacement is admissible.
ProperTerm normalize(const ProperTerm& term);

std::string describe(const ProperTerm& term);

}  // namespace hypconv
