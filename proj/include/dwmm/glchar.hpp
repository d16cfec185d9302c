#pragma once

#include <complex>
#include <map>
#include <vector>

#include "dwmm/bigint.hpp"
#include "dwmm/sn_char.hpp"

namespace dwmm {

// Shifted highest-weight labels for a GL(N) irrep: h_i = lambda_i + N - i,
// stored strictly decreasing, all >= 0. The representation size is
// n = sum(h) - N(N-1)/2 (the number of boxes of lambda).
class ShiftedWeights {
  public:
    explicit ShiftedWeights(std::vector<long> h);

    int N() const { return static_cast<int>(h_.size()); }
    long n() const;
    const std::vector<long>& values() const { return h_; }
    long operator[](int i) const { return h_[static_cast<size_t>(i)]; }

    Partition to_partition() const;
    bool operator==(const ShiftedWeights&) const = default;

    std::string to_string() const;  // "h:7,4,2,0"
    static ShiftedWeights parse(const std::string& text);

  private:
    std::vector<long> h_;
};

ShiftedWeights from_partition(const Partition& lambda, int N);

struct ParityReport {
    int even_count = 0;
    int odd_count = 0;
    // Balanced split: ceil(N/2) evens and floor(N/2) odds.
    bool admissible = false;
};
ParityReport parity_split(const ShiftedWeights& h);

// GL(N) dimension Delta(h) / prod_{k<N} k!.
BigRational gl_dimension(const ShiftedWeights& h);

// Weyl character as a function of matrix eigenvalues: ratio of the
// generalized to the ordinary Vandermonde determinant. Near-confluent
// eigenvalue sets (relative gap < 1e-8, or exact repeats in the rational
// overload) are routed through the Jacobi-Trudi determinant in complete
// homogeneous symmetric polynomials, which has no pole at coincidence.
std::complex<double> weyl_character(const ShiftedWeights& h,
                                    const std::vector<std::complex<double>>& eigs);
BigRational weyl_character(const ShiftedWeights& h,
                           const std::vector<BigRational>& eigs);

// Coefficient of chi_h in the expansion of exp(Tr M^2) over GL characters:
// the interleaving determinant det[ 1/j! if h^inc_t = (l-1)+2j else 0 ].
// Vanishes exactly when the parity split is inadmissible; its absolute
// value is Delta(h^even) Delta(h^odd) / prod floor(h_l/2)!.
BigRational expansion_coefficient(const ShiftedWeights& h);

// Character of the rank-one constraint matrix: N^n s_lambda / n!.
BigRational chi_C1(const ShiftedWeights& h);

// The double-factorial ratio attached to the parity split, equal to
// sum_{gamma in [2^{n/2}]} chi_lambda(gamma) / s_lambda; zero when the
// split is inadmissible (in particular whenever n is odd).
BigRational chi_C2_over_C1(const ShiftedWeights& h);

// Character of the two-trace constraint matrix under the trace rule
// Tr C2^p = N delta_{p,2}: N^{n/2}/n! * sum_{gamma in [2^{n/2}]} chi(gamma).
BigRational chi_C2_rule(const ShiftedWeights& h);

// Closed-form character of the order-m constraint matrix, valid up to one
// global constant per (N, m); used only as a cross-check, calibrated on the
// trivial representation. Requires the mod-m split of h to exist.
double chi_Cm_uncalibrated(const ShiftedWeights& h, int m);

// Decomposition of the tensor product alpha (x) beta into irreducibles by
// the Littlewood-Richardson rule: outer shapes r of size |alpha|+|beta|
// with positive multiplicity. Counts lattice skew tableaux of shape
// r/alpha with content beta. Guarded at |alpha|+|beta| <= 16.
std::map<Partition, long> littlewood_richardson(const Partition& alpha,
                                                const Partition& beta);

// Dimension of the invariant subspace of alpha (x) beta (x) conj(alpha)
// (x) conj(beta) at large N: sum of squared multiplicities.
long invariant_dimension(const Partition& alpha, const Partition& beta);

}  // namespace dwmm
