#pragma once

#include "hypconv/term.hpp"

namespace testing {

using namespace hypconv;

inline Rational q(long a, long b = 1) { return make_rational(a, b); }
inline GaussianRational gq(long a, long b = 1) { return GaussianRational(make_rational(a, b)); }

// 2F1(a + alpha n, b; c + gamma n; z)
inline ProperTerm f21(GaussianRational a, long alpha, GaussianRational b, GaussianRational c, long gamma,
                      GaussianRational z) {
    PfqSpec s;
    s.upper = {{a, alpha}, {b, 0}};
    s.lower = {{c, gamma}};
    s.argument = z;
    return from_pfq(s);
}

// 2F1(1/2 + n, 1/3; 2 + 2n; 1)
inline ProperTerm t1() { return f21(gq(1, 2), 1, gq(1, 3), gq(2), 2, gq(1)); }

}  // namespace testing
