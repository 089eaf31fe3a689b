#include "hypconv/poly.hpp"

#include <cmath>
#include <sstream>

namespace hypconv {

PolyQ::PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQ::PolyQ(std::initializer_list<long> coeffs) {
    for (long c : coeffs) c_.emplace_back(c);
    trim();
}

PolyQ PolyQ::constant(const Rational& c) { return PolyQ(std::vector<Rational>{c}); }

PolyQ PolyQ::linear(const Rational& c0, const Rational& c1) { return PolyQ(std::vector<Rational>{c0, c1}); }

PolyQ PolyQ::monomial(const Rational& c, std::size_t deg) {
    std::vector<Rational> v(deg + 1);
    v[deg] = c;
    return PolyQ(std::move(v));
}

void PolyQ::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Rational& PolyQ::leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
}

Rational PolyQ::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double PolyQ::eval(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

PolyQ PolyQ::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return PolyQ(std::move(d));
}

PolyQ PolyQ::monic() const {
    if (c_.empty()) return {};
    PolyQ r = *this;
    Rational l = c_.back();
    for (auto& c : r.c_) c /= l;
    return r;
}

PolyQ PolyQ::primitive() const {
    if (c_.empty()) return {};
    Integer den = 1, num = 0;
    for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& c : c_) {
        Integer k = c.get_num() * (den / c.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), k.get_mpz_t());
        v.emplace_back(k);
    }
    if (sgn(c_.back()) < 0) num = -num;
    for (auto& c : v) c /= num;
    return PolyQ(std::move(v));
}

PolyQ PolyQ::square_free() const {
    if (degree() <= 0) return *this;
    return divmod(*this, gcd(*this, derivative())).first;
}

std::string PolyQ::to_string(char var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (sgn(c) == 0) continue;
        Rational a = abs(c);
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        if (i == 0 || a != 1) os << hypconv::to_string(a);
        if (i > 0) os << var;
        if (i > 1) os << '^' << i;
        first = false;
    }
    return os.str();
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

PolyQ& PolyQ::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

PolyQ operator-(PolyQ a) {
    for (auto& c : a.c_) c = -c;
    return a;
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> r = a.coefficients();
    int db = b.degree();
    if (a.degree() < db) return {PolyQ(), a};
    std::vector<Rational> q(a.degree() - db + 1);
    const Rational& lb = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        if (sgn(r[i]) == 0) continue;
        Rational f = r[i] / lb;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
    }
    r.resize(db);
    return {PolyQ(std::move(q)), PolyQ(std::move(r))};
}

PolyQ gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = divmod(a, b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolyQ pow(const PolyQ& p, unsigned e) {
    PolyQ acc = PolyQ::constant(1), base = p;
    while (e) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

int sign_at(const PolyQ& p, const Rational& x) { return sgn(p(x)); }

GaussianRational GaussPoly::operator()(const GaussianRational& x) const {
    GaussianRational acc;
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeff(i);
    return acc;
}

void GaussPoly::set_coeff(std::size_t i, const GaussianRational& c) {
    std::vector<Rational> r = re.coefficients(), m = im.coefficients();
    if (r.size() <= i) r.resize(i + 1);
    if (m.size() <= i) m.resize(i + 1);
    r[i] = c.re;
    m[i] = c.im;
    re = PolyQ(std::move(r));
    im = PolyQ(std::move(m));
}

PolyQ GaussPoly::real_root_poly() const {
    if (im.is_zero()) return re;
    if (re.is_zero()) return im;
    return gcd(re, im);
}

}  // namespace hypconv
