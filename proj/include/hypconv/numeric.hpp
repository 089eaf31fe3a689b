#pragma once

#include <complex>
#include <functional>
#include <span>

namespace hypconv {

using cdouble = std::complex<double>;

// Principal value up to multiples of 2*pi*i in the imaginary part.
cdouble log_gamma(cdouble z);
cdouble gamma(cdouble z);
// log (b)_m for any integer m; negative m uses (b)_m = (-1)^m / (1-b)_{-m}.
cdouble log_pochhammer(cdouble b, long m);

struct Accelerated {
    cdouble value;
    double error = 0;
};

// Levin u-transform of the series sum_k terms[k].
Accelerated levin_u(std::span<const cdouble> terms);
// Wynn epsilon extrapolation of the limit of a sequence.
Accelerated wynn_epsilon(std::span<const cdouble> seq);
// Direct summation when the terms decay geometrically, Levin u otherwise.
Accelerated sum_series(const std::function<cdouble(long)>& term, double tol);

}  // namespace hypconv
