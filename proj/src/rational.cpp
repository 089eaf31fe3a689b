#include "hypconv/rational.hpp"

#include <cctype>

namespace hypconv {

Rational make_rational(long num, long den) {
    if (den == 0) throw InvalidInput("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidInput("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

static Integer parse_integer(std::string_view s, std::string_view whole) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
}

Rational parse_rational(std::string_view text) {
    auto b = text.find_first_not_of(" \t");
    auto e = text.find_last_not_of(" \t");
    if (b == std::string_view::npos) throw InvalidInput("empty rational");
    std::string_view s = text.substr(b, e - b + 1);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
    return make_rational(parse_integer(s.substr(0, slash), text), parse_integer(s.substr(slash + 1), text));
}

std::string to_string(const Rational& r) { return r.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (sgn(r) == 0) {
        if (e < 0) throw DomainError("zero to a negative power");
        return Rational(0);
    }
    unsigned long m = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), r.get_num_mpz_t(), m);
    mpz_pow_ui(d.get_mpz_t(), r.get_den_mpz_t(), m);
    return e < 0 ? make_rational(d, n) : make_rational(n, d);
}

double to_double(const Rational& r) { return r.get_d(); }

bool GaussianRational::is_integer() const { return is_real() && hypconv::is_integer(re); }

std::complex<double> GaussianRational::to_complex() const { return {re.get_d(), im.get_d()}; }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational n = o.norm2();
    if (sgn(n) == 0) throw DomainError("division by zero");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
}

GaussianRational pow(const GaussianRational& z, long e) {
    if (e == 0) return GaussianRational(1);
    if (z.is_zero()) {
        if (e < 0) throw DomainError("zero to a negative power");
        return GaussianRational(0);
    }
    if (z.is_real()) return GaussianRational(pow(z.re, e));
    GaussianRational base = e < 0 ? GaussianRational(1) / z : z;
    unsigned long m = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    GaussianRational acc(1);
    while (m) {
        if (m & 1) acc *= base;
        base *= base;
        m >>= 1;
    }
    return acc;
}

std::string to_string(const GaussianRational& z) {
    if (z.is_real()) return to_string(z.re);
    std::string s = sgn(z.re) == 0 ? "" : to_string(z.re) + (sgn(z.im) > 0 ? "+" : "");
    if (z.im == 1) return s + "i";
    if (z.im == -1) return s + "-i";
    return s + to_string(z.im) + "i";
}

}  // namespace hypconv
