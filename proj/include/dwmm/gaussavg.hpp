#pragma once

#include <map>
#include <string>

#include "dwmm/bigint.hpp"
#include "dwmm/glchar.hpp"
#include "dwmm/sn_char.hpp"

namespace dwmm {

// Laurent polynomial in the matrix size N with rational coefficients, used
// when a Gaussian average is kept symbolic instead of evaluated at one N.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    void add(long exponent, const BigRational& coeff);
    const std::map<long, BigRational>& terms() const { return terms_; }

    BigRational eval(const BigRational& x) const;
    std::string to_string() const;  // descending exponents, e.g. "N^2 + 2 + N^-1"

    bool operator==(const LaurentPoly&) const = default;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  private:
    std::map<long, BigRational> terms_;  // exponent -> nonzero coefficient
};

// Exact quotient a/b; throws std::domain_error when b is zero or does not
// divide a in the Laurent ring.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// <chi_R(A)> under the normalized Gaussian measure, by Schur-Weyl reduction
// to the symmetric group: N^(-n/2) (d_R/s_R) * |[2^(n/2)]| * chi_R([2^(n/2)]).
// Exactly 0 for odd n = |R|, and for R with more rows than N. n <= 12.
BigRational oracle_chiA(const Partition& R, int N);

// The same average from the shifted-weight side: N^(-n/2) * dim * the
// double-factorial character ratio. Agrees with oracle_chiA exactly.
BigRational dfi_chiA(const ShiftedWeights& h);

// <chi_R(A^2)> by brute force over the symmetric group S_2n: the class sum
// of chi_R(sigma) N^(cy((sigma x 1) gamma alpha) - n) with gamma running over
// the pairings of 2n points and alpha the factor-swapping involution.
// This is the exact oracle every other A^2 route is judged against. n <= 6.
LaurentPoly oracle_chiA2_symbolic(const Partition& R);
BigRational oracle_chiA2(const Partition& R, int N);

// <chi_h(A^2)> as a Pfaffian over double-factorial sums, the two-variable
// reduction of the eigenvalue integral. Exact for even N. The raw form
// carries the printed prefactor N^(N(N-1)/2) prod(2h_i)! / ((2N)^sum(h)
// prod k!); the calibrated form divides by the raw value on the trivial
// representation at the same N, which the tests pin as the only serviceable
// normalization convention (measured to be exactly 1).
BigRational chiA2_pfaffian_raw(const ShiftedWeights& h);
BigRational pfaffian_calibration(int N);  // raw value on the trivial rep
BigRational chiA2_pfaffian(const ShiftedWeights& h);

// Large-N closed form n! N^(-n) d_R^2 / s_R, accurate to O(N^-2) relative
// to the exact average for fixed R.
BigRational chiA2_largeN(const Partition& R, int N);

// Saddle-point estimate of <chi_h(A^2)> at damping eps (eps = 0 takes the
// limiting Pfaffian entries (ht_i+ht_j)/(ht_i-ht_j), ht = h/N). Known to
// stay a fixed relative distance away from the exact value: the eps -> 0
// and N -> infinity limits do not appear to commute. N even.
double chiA2_saddle(const ShiftedWeights& h, double eps);

// <det A^(2q)> = N^(-Nq) prod_{k<N/2} (2q+2k+1)!!(2q+2k-1)!! /
// ((2k+1)!!(2k-1)!!), N even.
BigRational det_power_average(int N, long q);

// Ratio testing the proportionality guess <chi_h(A^2)> = k_N *
// N^(-n) prod_eps Delta(h^(eps))^2 prod (2h_i^(eps))!! over the mod-4 split
// of h. If the guess held, the ratio would depend on N alone; computed
// values refute that. Uses the Pfaffian route for even N, the brute-force
// oracle otherwise.
BigRational conjecture_kN(const ShiftedWeights& h);

// (1/N) Tr(M^p) for the hypothetical average-reproducing matrix M:
// N^(-p/2) (pN/2+1)!! / ((p(N/2-1)+1)!!, p and N even. Tends to
// (p/2)^(p/2) as N grows.
BigRational traceM_property(long p, long N);

// Uniform entry point for the CLI: power is 1 or 2, method one of
// oracle | dfi | pfaffian | large-n | saddle (saddle takes eps).
struct AverageResult {
    std::string method;
    int N = 0;
    long n = 0;
    bool exact = true;
    BigRational value;       // meaningful when exact
    double value_float = 0;  // always populated
};
AverageResult average_chi(const ShiftedWeights& h, int power, const std::string& method,
                          double eps = 0.0);

}  // namespace dwmm
