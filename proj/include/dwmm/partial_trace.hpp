#pragma once

#include <map>
#include <utility>

#include "dwmm/bigint.hpp"
#include "dwmm/permutation.hpp"

namespace dwmm {

// Integer polynomial in a formal size symbol, keyed by exponent.
using NPoly = std::map<int, BigInt>;

int poly_degree(const NPoly& p);           // -1 for the zero polynomial
NPoly poly_sub(const NPoly& a, const NPoly& b);
BigInt poly_eval(const NPoly& p, const BigInt& value);

// Formal integer combination of permutations with polynomial weights.
struct WeightedPermSum {
    std::map<Permutation, NPoly> terms;

    void add(const Permutation& p, int exponent, const BigInt& coeff);
    bool operator==(const WeightedPermSum&) const = default;
};

struct PartialTraceResult {
    int exponent;         // weight is size^exponent
    Permutation result;   // permutation acting on the first n factors
};

// Partial trace over the last n tensor factors of the operator of
// gamma * alpha on 2n factors, where gamma is a pairing in [2^n] and
// alpha = (1,n+1)(2,n+2)...(n,2n). Returns the single surviving monomial
// weight and permutation.
PartialTraceResult partial_trace(const Permutation& gamma);

// Brute-force contraction of the same operator at a concrete size value:
// a sparse integer matrix on the n-fold index space, keyed (row, col)
// with multi-indices encoded in base N. Guarded at N^n <= 1e6 and
// N^{2n} <= 2e8.
std::map<std::pair<long, long>, long> partial_trace_oracle(const Permutation& gamma, int N);

// Same sparse encoding for the weighted permutation operator
// value * P_sigma on n factors, for comparing against the oracle.
std::map<std::pair<long, long>, long> permutation_operator(const Permutation& sigma, int N,
                                                           long value);

// Left side: sum of partial traces over all pairings gamma in [2^n].
// Right side: sum over all rho in S_n of size^{cycle count} * rho.
// Their difference is expected two orders below the right side, term by
// term; the caller checks that as a literal degree statement.
std::pair<WeightedPermSum, WeightedPermSum> lemma_sum(int n);

}  // namespace dwmm
