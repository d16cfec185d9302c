#include "dwmm/charpoly.hpp"

#include <cmath>
#include <stdexcept>

#include "dwmm/exactnum.hpp"

namespace dwmm {

std::complex<long double> CharPoly::eval(std::complex<long double> lambda) const {
    const std::complex<long double> u = -lambda;
    std::complex<long double> acc = 0;
    for (const BigRational& c : pi) acc = acc * u + static_cast<long double>(to_double(c));
    return acc;
}

long double CharPoly::eval_scale(std::complex<long double> lambda) const {
    const long double a = std::abs(lambda);
    long double acc = 0;
    for (const BigRational& c : pi)
        acc = acc * a + std::fabs(static_cast<long double>(to_double(c)));
    return acc;
}

CharPoly girard_newton(const std::vector<BigRational>& traces) {
    const long N = static_cast<long>(traces.size());
    if (N < 1) throw std::invalid_argument("girard_newton: need at least one trace");
    CharPoly cp;
    cp.N = N;
    cp.m = 1;
    cp.pi.assign(static_cast<size_t>(N) + 1, BigRational(0));
    cp.pi[0] = 1;
    for (long k = 1; k <= N; ++k) {
        BigRational acc = 0;
        for (long i = 1; i <= k; ++i) {
            const BigRational term = cp.pi[static_cast<size_t>(k - i)] *
                                     traces[static_cast<size_t>(i - 1)];
            if (i % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        cp.pi[static_cast<size_t>(k)] = acc / BigRational(k);
    }
    return cp;
}

CharPoly charpoly_cm(long N, long m) {
    if (N < 1 || m < 1) throw std::invalid_argument("charpoly_cm: N and m must be positive");
    if (N % m != 0) throw std::invalid_argument("charpoly_cm: m must divide N");
    CharPoly cp;
    cp.N = N;
    cp.m = m;
    cp.pi.assign(static_cast<size_t>(N) + 1, BigRational(0));
    for (long r = 0; m * r <= N; ++r) {
        BigRational v(big_pow(BigInt(N), static_cast<unsigned long>(r)));
        v /= BigRational(big_pow(BigInt(m), static_cast<unsigned long>(r)) * factorial(r));
        if (((m + 1) * r) % 2 != 0) v = -v;
        cp.pi[static_cast<size_t>(m * r)] = v;
    }
    return cp;
}

}  // namespace dwmm
