#pragma once

#include "hypconv/poly.hpp"

#include <optional>
#include <vector>

namespace hypconv {

// Sturm sequence of a square-free polynomial.
class SturmChain {
public:
    explicit SturmChain(const PolyQ& square_free);
    int variations(const Rational& x) const;
    int variations_at_pos_inf() const;
    // Distinct roots in (lo, hi); endpoints must not be roots.
    int count(const Rational& lo, const Rational& hi) const;

private:
    std::vector<PolyQ> seq_;
};

// Real algebraic number: the unique root of `defining` in the open interval (lo, hi).
// Rational values carry a linear defining polynomial.
class AlgebraicReal {
public:
    AlgebraicReal(PolyQ defining, Rational lo, Rational hi);
    static AlgebraicReal from_rational(const Rational& r);

    const PolyQ& defining() const { return def_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool is_rational() const { return def_.degree() == 1; }
    Rational rational_value() const;

    // One bisection step.
    AlgebraicReal refined() const;
    AlgebraicReal refined_to_width(const Rational& width) const;
    double to_double() const;
    std::string to_string() const;

private:
    AlgebraicReal() = default;
    PolyQ def_;
    Rational lo_, hi_;
    int sign_lo_ = 0;
};

// Open interval with optional infinite ends.
struct OpenInterval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
};

// Distinct real roots of p in the interval, ascending. Throws on the zero polynomial.
std::vector<AlgebraicReal> isolate_real_roots(const PolyQ& p, const OpenInterval& range = {});
bool vanishes_at(const PolyQ& p, const AlgebraicReal& t);
int sign_at(const PolyQ& p, const AlgebraicReal& t);
// sign(t - r)
int compare(const AlgebraicReal& t, const Rational& r);
bool equal(const AlgebraicReal& a, const AlgebraicReal& b);
std::vector<Rational> rational_roots(const PolyQ& p);

}  // namespace hypconv
