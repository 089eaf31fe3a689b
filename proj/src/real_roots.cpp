#include "hypconv/real_roots.hpp"

#include <algorithm>
#include <sstream>

namespace hypconv {

SturmChain::SturmChain(const PolyQ& p) {
    if (p.is_zero()) throw DomainError("Sturm chain of zero polynomial");
    seq_.push_back(p);
    seq_.push_back(p.derivative());
    while (!seq_.back().is_zero()) {
        PolyQ r = -divmod(seq_[seq_.size() - 2], seq_.back()).second;
        if (r.is_zero()) break;
        Rational l = abs(r.leading());
        seq_.push_back(r * (Rational(1) / l));
    }
    if (seq_.back().is_zero()) seq_.pop_back();
}

static int count_changes(const std::vector<int>& signs) {
    int n = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++n;
        prev = s;
    }
    return n;
}

int SturmChain::variations(const Rational& x) const {
    std::vector<int> s;
    s.reserve(seq_.size());
    for (const auto& p : seq_) s.push_back(sign_at(p, x));
    return count_changes(s);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> s;
    for (const auto& p : seq_) s.push_back(sgn(p.leading()));
    return count_changes(s);
}

int SturmChain::count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }

AlgebraicReal::AlgebraicReal(PolyQ defining, Rational lo, Rational hi)
    : def_(defining.primitive()), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (def_.degree() < 1) throw InvalidInput("defining polynomial must be non-constant");
    if (!(lo_ < hi_)) throw InvalidInput("empty isolating interval");
    sign_lo_ = sign_at(def_, lo_);
    int sh = sign_at(def_, hi_);
    if (sign_lo_ == 0 || sh == 0 || sign_lo_ == sh)
        throw InvalidInput("interval does not isolate a sign change");
}

AlgebraicReal AlgebraicReal::from_rational(const Rational& r) {
    return AlgebraicReal(PolyQ::linear(-r, 1), r - 1, r + 1);
}

Rational AlgebraicReal::rational_value() const {
    if (!is_rational()) throw DomainError("algebraic number is irrational");
    return -def_.coeff(0) / def_.coeff(1);
}

AlgebraicReal AlgebraicReal::refined() const {
    Rational mid = (lo_ + hi_) / 2;
    int s = sign_at(def_, mid);
    AlgebraicReal r = *this;
    if (s == 0) {
        Rational q = (hi_ - lo_) / 4;
        r.def_ = PolyQ::linear(-mid, 1).primitive();
        r.lo_ = mid - q;
        r.hi_ = mid + q;
        r.sign_lo_ = -1;
        return r;
    }
    if (s == sign_lo_) r.lo_ = mid;
    else r.hi_ = mid;
    return r;
}

AlgebraicReal AlgebraicReal::refined_to_width(const Rational& width) const {
    AlgebraicReal r = *this;
    if (r.is_rational()) {
        Rational v = r.rational_value();
        if (r.hi_ - r.lo_ >= width) {
            r.lo_ = v - width / 4;
            r.hi_ = v + width / 4;
        }
        return r;
    }
    while (r.hi_ - r.lo_ >= width) r = r.refined();
    return r;
}

double AlgebraicReal::to_double() const {
    if (is_rational()) return rational_value().get_d();
    AlgebraicReal r = *this;
    for (int i = 0; i < 2000; ++i) {
        double a = r.lo_.get_d(), b = r.hi_.get_d();
        if (a == b || std::nextafter(a, b) == b) break;
        r = r.refined();
        if (r.is_rational()) return r.rational_value().get_d();
    }
    return Rational((r.lo_ + r.hi_) / 2).get_d();
}

std::string AlgebraicReal::to_string() const {
    if (is_rational()) return hypconv::to_string(rational_value());
    std::ostringstream os;
    os << "root of " << def_.to_string() << " in (" << hypconv::to_string(lo_) << ", "
       << hypconv::to_string(hi_) << ") ~ " << to_double();
    return os.str();
}

static Rational cauchy_bound(const PolyQ& p) {
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.leading())));
    return m + 1;
}

namespace {

struct Isolator {
    const PolyQ& q;
    SturmChain chain;
    std::vector<AlgebraicReal> out;

    Isolator(const PolyQ& sq) : q(sq), chain(sq) {}

    // Split point strictly inside (a, b) that is not a root.
    Rational split(const Rational& a, const Rational& b) {
        for (long d = 2;; ++d) {
            Rational m = a + (b - a) / d * (d / 2);
            if (sign_at(q, m) != 0) return m;
            m = a + (b - a) / (d + 1);
            if (sign_at(q, m) != 0) return m;
        }
    }

    void run(const Rational& a, const Rational& b, int n) {
        if (n == 0) return;
        if (n == 1) {
            out.emplace_back(q, a, b);
            return;
        }
        Rational m = split(a, b);
        int left = chain.count(a, m);
        run(a, m, left);
        run(m, b, n - left);
    }
};

}  // namespace

std::vector<AlgebraicReal> isolate_real_roots(const PolyQ& p, const OpenInterval& range) {
    if (p.is_zero()) throw DomainError("root isolation of the zero polynomial");
    if (p.degree() == 0) return {};
    PolyQ q = p.square_free();
    Rational bound = cauchy_bound(q);
    Rational a = range.lo ? *range.lo : -bound;
    Rational b = range.hi ? *range.hi : bound;
    if (range.lo && range.hi && !(a < b)) return {};
    // Endpoints that are roots are excluded from an open interval; divide them out.
    for (const Rational* e : {&a, &b}) {
        if (sign_at(q, *e) == 0) q = divmod(q, PolyQ::linear(-*e, 1)).first;
    }
    if (q.degree() == 0) return {};
    if (!range.lo) a = -cauchy_bound(q);
    if (!range.hi) b = cauchy_bound(q);
    if (!(a < b)) return {};
    Isolator iso(q);
    iso.run(a, b, iso.chain.count(a, b));
    return std::move(iso.out);
}

static int roots_inside(const PolyQ& g, const AlgebraicReal& t) {
    if (g.degree() < 1) return 0;
    SturmChain c(g.square_free());
    return c.count(t.lo(), t.hi());
}

bool vanishes_at(const PolyQ& p, const AlgebraicReal& t) {
    if (p.is_zero()) return true;
    if (t.is_rational()) return sign_at(p, t.rational_value()) == 0;
    return roots_inside(gcd(t.defining(), p), t) > 0;
}

int sign_at(const PolyQ& p, const AlgebraicReal& t) {
    if (p.is_zero()) return 0;
    if (t.is_rational()) return sign_at(p, t.rational_value());
    if (vanishes_at(p, t)) return 0;
    PolyQ q = p.square_free();
    SturmChain c(q);
    AlgebraicReal r = t;
    for (;;) {
        if (r.is_rational()) return sign_at(p, r.rational_value());
        int sl = sign_at(q, r.lo()), sh = sign_at(q, r.hi());
        if (sl != 0 && sh != 0 && c.count(r.lo(), r.hi()) == 0) return sign_at(p, r.lo());
        r = r.refined();
    }
}

int compare(const AlgebraicReal& t, const Rational& r) { return sign_at(PolyQ::linear(-r, 1), t); }

bool equal(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.is_rational()) return compare(b, a.rational_value()) == 0;
    if (b.is_rational()) return compare(a, b.rational_value()) == 0;
    PolyQ g = gcd(a.defining(), b.defining());
    if (g.degree() < 1 || !vanishes_at(g, a) || !vanishes_at(g, b)) return false;
    // Each interval holds exactly one root of g, so the values agree iff the overlap holds one.
    Rational lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
    if (!(lo < hi)) return false;
    return SturmChain(g.square_free()).count(lo, hi) > 0;
}

static std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> d;
    for (Integer i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i * i != n) d.push_back(n / i);
        }
        if (i > 1000000) throw EvaluationError("leading coefficient too large for rational root search");
    }
    return d;
}

std::vector<Rational> rational_roots(const PolyQ& p) {
    std::vector<Rational> out;
    if (p.degree() < 1) return out;
    PolyQ q = p.primitive();
    auto dens = divisors(q.leading().get_num());
    for (auto& r : isolate_real_roots(q)) {
        AlgebraicReal x = r;
        if (x.is_rational()) {
            out.push_back(x.rational_value());
            continue;
        }
        for (const auto& e : dens) {
            x = x.refined_to_width(Rational(1, 2) / Rational(e));
            if (x.is_rational()) break;
            Integer f;
            Rational le = x.lo() * Rational(e);
            mpz_fdiv_q(f.get_mpz_t(), le.get_num_mpz_t(), le.get_den_mpz_t());
            for (Integer c = f; c <= f + 1; ++c) {
                Rational cand = make_rational(c, e);
                if (cand > x.lo() && cand < x.hi() && sign_at(q, cand) == 0) {
                    out.push_back(cand);
                    goto next;
                }
            }
        }
        if (x.is_rational()) out.push_back(x.rational_value());
    next:;
    }
    return out;
}

}  // namespace hypconv
