#pragma once

#include "hypconv/rational.hpp"

#include <utility>
#include <vector>

namespace hypconv {

// Univariate polynomial over Q, coefficients ascending, no trailing zeros.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rational> coeffs);
    PolyQ(std::initializer_list<long> coeffs);

    static PolyQ constant(const Rational& c);
    // c0 + c1 t
    static PolyQ linear(const Rational& c0, const Rational& c1);
    static PolyQ monomial(const Rational& c, std::size_t deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;
    double eval(double x) const;

    PolyQ derivative() const;
    PolyQ monic() const;
    // Integer coefficients with content 1 and positive leading coefficient.
    PolyQ primitive() const;
    PolyQ square_free() const;
    std::string to_string(char var = 't') const;

    PolyQ& operator+=(const PolyQ& o);
    PolyQ& operator-=(const PolyQ& o);
    PolyQ& operator*=(const PolyQ& o);
    PolyQ& operator*=(const Rational& s);

    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(PolyQ a, const PolyQ& b) { return a *= b; }
    friend PolyQ operator*(PolyQ a, const Rational& s) { return a *= s; }
    friend PolyQ operator*(const Rational& s, PolyQ a) { return a *= s; }
    friend PolyQ operator-(PolyQ a);
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
// Monic gcd; gcd(0, 0) = 0.
PolyQ gcd(PolyQ a, PolyQ b);
PolyQ pow(const PolyQ& p, unsigned e);
int sign_at(const PolyQ& p, const Rational& x);

// Gaussian-rational polynomial stored as real and imaginary parts.
struct GaussPoly {
    PolyQ re;
    PolyQ im;

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    int degree() const { return std::max(re.degree(), im.degree()); }
    GaussianRational operator()(const GaussianRational& x) const;
    GaussianRational coeff(std::size_t i) const { return {re.coeff(i), im.coeff(i)}; }
    void set_coeff(std::size_t i, const GaussianRational& c);
    // Real polynomial whose real roots are the common real roots of re and im.
    PolyQ real_root_poly() const;
};

}  // namespace hypconv
