#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dwmm {

// Arbitrary-precision integers and rationals. mpq_class keeps values
// canonical (reduced, denominator > 0) through arithmetic; the helpers below
// are the only extra surface the rest of the library needs.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// base^e for integer e of either sign (e < 0 gives the exact reciprocal).
inline BigRational rat_pow(const BigRational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("rat_pow: 0 to negative power");
        return 1 / rat_pow(base, -exp);
    }
    BigRational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()),
               static_cast<unsigned long>(exp));
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()),
               static_cast<unsigned long>(exp));
    r.canonicalize();
    return r;
}

inline BigRational rational_from_string(const std::string& num,
                                        const std::string& den = "1") {
    BigRational r{BigInt(num), BigInt(den)};
    r.canonicalize();
    return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const BigRational& v) { return v.get_str(); }

inline double to_double(const BigRational& v) { return v.get_d(); }

// log2 of |v|, exact enough for magnitude comparisons of huge rationals.
inline double log2_abs(const BigRational& v) {
    if (v == 0) throw std::domain_error("log2_abs: zero");
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, mpq_numref(v.get_mpq_t()));
    double md = mpz_get_d_2exp(&ed, mpq_denref(v.get_mpq_t()));
    return std::log2(std::fabs(mn)) + static_cast<double>(en) -
           std::log2(std::fabs(md)) - static_cast<double>(ed);
}

}  // namespace dwmm
