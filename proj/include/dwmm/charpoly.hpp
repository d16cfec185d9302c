#pragma once

#include <complex>
#include <vector>

#include "dwmm/bigint.hpp"

namespace dwmm {

// Characteristic polynomial det(C - lambda 1) = sum_k pi[k] (-lambda)^(N-k)
// with exact rational coefficients, pi[0] = 1. For the constraint matrix
// C_m the only nonzero coefficients sit at k = 0 mod m; polynomials built
// from general trace data carry m = 1 (every index allowed).
struct CharPoly {
    long N = 0;
    long m = 1;
    std::vector<BigRational> pi;  // size N + 1

    // Value at lambda with coefficients rounded to floating point. Fine for
    // moderate N; coefficient magnitudes stay below exp(N/m).
    std::complex<long double> eval(std::complex<long double> lambda) const;

    // sum_k |pi_k| |lambda|^(N-k), the natural scale for residual checks.
    long double eval_scale(std::complex<long double> lambda) const;
};

// Coefficients from the power traces t_1..t_N by the Newton recurrence
// k pi_k = sum_{i=1..k} (-1)^(i-1) pi_{k-i} t_i, pi_0 = 1. The result
// reproduces the given traces exactly.
CharPoly girard_newton(const std::vector<BigRational>& traces);

// Closed form for the trace rule Tr(C_m^q) = N delta_{q,m}, q = 1..N:
// pi_{mr} = (-1)^{(m+1)r} N^r / (m^r r!), zero elsewhere. Requires m | N.
CharPoly charpoly_cm(long N, long m);

}  // namespace dwmm
