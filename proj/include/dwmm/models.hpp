#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dwmm/bigint.hpp"
#include "dwmm/gaussavg.hpp"
#include "dwmm/glchar.hpp"
#include "dwmm/spectrum.hpp"

namespace dwmm {

// Ratio of two polynomials in the coupling gamma with exact rational
// coefficients, kept reduced (polynomial gcd divided out) with a monic
// denominator. The zero function is 0/1. Coefficient vectors are ascending
// in the power of gamma.
class RationalFunction {
  public:
    RationalFunction() : num_{}, den_{BigRational(1)} {}
    RationalFunction(const BigRational& constant);
    static RationalFunction gamma_power(long k);  // gamma^k, k of either sign
    static RationalFunction from_coeffs(std::vector<BigRational> num,
                                        std::vector<BigRational> den);

    bool is_zero() const { return num_.empty(); }
    bool is_constant() const { return num_.size() <= 1 && den_.size() == 1; }
    const std::vector<BigRational>& num() const { return num_; }
    const std::vector<BigRational>& den() const { return den_; }

    // Exact evaluation; throws std::domain_error where the denominator
    // vanishes (the Ising table blows up at gamma^4 = 1, for instance).
    BigRational eval(const BigRational& gamma) const;

    std::string to_string(const std::string& var = "gamma") const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator-(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator*(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator/(const RationalFunction&, const RationalFunction&);
    bool operator==(const RationalFunction&) const = default;

  private:
    void normalize();
    std::vector<BigRational> num_, den_;
};

// Contraction kernel between two field symbols:
//   <X_ij Y_kl> = (weight / N) * delta_il delta_kj        (DeltaDelta)
//   <X_ij Y_kl> = (weight / N) * C2_il C2_kj              (C2C2)
// The C2C2 routing puts one C2 on each of the two index lines crossing the
// edge, so every closed index loop collects Tr(C2^p) with p the number of
// such lines it runs through.
enum class ContractionKind { Zero, DeltaDelta, C2C2 };

struct ContractionKernel {
    ContractionKind kind = ContractionKind::Zero;
    RationalFunction weight;
};

// Symmetric propagator table over a set of field symbols. Unset pairs read
// as the zero kernel; unknown symbols are rejected.
class PropagatorSpec {
  public:
    explicit PropagatorSpec(std::vector<std::string> symbols);

    const std::vector<std::string>& symbols() const { return symbols_; }
    void set_kernel(const std::string& a, const std::string& b, ContractionKernel k);
    const ContractionKernel& kernel(const std::string& a, const std::string& b) const;

    // Copy with every weight evaluated at a concrete coupling; throws
    // std::domain_error on a pole of any nonzero entry.
    PropagatorSpec evaluated_at(const BigRational& gamma) const;

  private:
    int index_of(const std::string& symbol) const;
    std::vector<std::string> symbols_;
    std::map<std::pair<int, int>, ContractionKernel> table_;
};

// Quadratic form S_2 = (N/2) sum_{ab} entries[a][b] Tr(X_a X_b) over the
// field symbols; the matrix must be symmetric. timelike[a] marks fields
// whose kinetic term is written in the C2^{-1}-rotated variable, so their
// propagator carries the C2C2 kernel.
struct KineticForm {
    std::vector<std::string> symbols;
    std::vector<char> timelike;
    std::vector<std::vector<RationalFunction>> entries;
};

// Propagator table from the inverse of the kinetic form: weights are the
// entries of entries^{-1} (the 1/N is part of the kernel convention). A
// symbolically singular form, or a nonzero coupling between a delta-kernel
// and a C2-kernel field, is rejected.
PropagatorSpec invert_kinetic(const KineticForm& form);

// The three model kinetic forms and their inverted propagator tables.
//   cdt:       A (spacelike), B (timelike), unit kinetic form
//   ising:     M+, M- with off-diagonal -gamma^{-2}
//   cdt-ising: A+, A-, B+, B- with -gamma in each 2x2 sector
KineticForm cdt_kinetic();
KineticForm ising_kinetic();
KineticForm cdt_ising_kinetic();
PropagatorSpec cdt_spec();
PropagatorSpec ising_spec();
PropagatorSpec cdt_ising_spec();

// Change of couplings that moves the Ising spins from vertices to faces:
//   gamma'^{-2} = (gamma - gamma^{-1}) / (gamma + gamma^{-1})
// with g' fixed by matching the cubic terms of the rotated action. Requires
// |gamma| > 1 so that both square roots stay real.
struct CouplingMap {
    double gamma = 0, g = 0;  // inputs
    double gamma_prime_inv_sq = 0;
    double gamma_prime = 0, g_prime = 0;
};
CouplingMap coupling_transform(double gamma, double g);

// Largest relative mismatch |S(M+,M-) - S'(U,V)| / max(1,|S|) over seeded
// random Hermitian 3x3 pairs, where S is the vertex-spin action and S' the
// face-spin action after the substitution above. Correctness of the map
// means this sits at rounding level.
double coupling_action_residual(double gamma, double g, unsigned long seed,
                                int trials = 8);

// A product of traces over field symbols and explicit C2 insertions,
// e.g. Tr(A A C2 A A C2). parse accepts whitespace- or comma-separated
// symbols, X^k repetition, an optional Tr(...) wrapper per factor, and ';'
// between trace factors.
struct Word {
    std::vector<std::vector<std::string>> traces;
    static Word parse(const std::string& text);
    std::string to_string() const;
    long field_count() const;  // symbols other than C2
};

// Gaussian average of a word as a sum over Wick pairings of its field
// symbols. Index bookkeeping is a half-edge ledger: slot ends are linked by
// the trace structure and by the kernel bonds of the chosen pairing, and
// every closed loop with p C2-carrying bonds evaluates to Tr(C2^p) (a bare
// loop is N). The first overload applies the large-N rule
// Tr(C2^p) = N delta_{p,2} and returns a Laurent polynomial in N; the
// second substitutes power sums of a concrete spectrum. Weights are
// evaluated at the given gamma; an odd word averages to zero; at most 12
// field symbols.
LaurentPoly wick_word_average(const Word& word, const PropagatorSpec& spec,
                              const BigRational& gamma);
double wick_word_average(const Word& word, const PropagatorSpec& spec,
                         const BigRational& gamma, const Spectrum& c2);

// g^2 coefficient of the partition function of the pure CDT model by two
// independent routes, both under the large-N C2 rule: the character
// expansion cut at the size-2 representations, and (N/2) times the Wick
// average of Tr(A^2 C2 A^2 C2). The two must agree as Laurent polynomials
// in N; per_representation keeps the character route's summands.
struct OrderG2 {
    LaurentPoly character_route;
    LaurentPoly wick_route;
    std::map<Partition, LaurentPoly> per_representation;
};
OrderG2 z_order_g2();

// One term of the double character expansion of the Ising-coupled model:
// prefactors (N g^2 / (4(1-gamma)))^(n1/2) (N g^2 / (4(1+gamma)))^(n2/2)
// times the coefficient product c_{h1} c_{h2}. Only this combinatorial
// shell is represented; the remaining two-matrix unitary integral has no
// closed form and is left abstract.
struct DoubleExpansionTerm {
    long n1 = 0, n2 = 0;  // representation sizes; prefactor exponents n/2
    BigRational coefficient_product;
};
DoubleExpansionTerm double_expansion_term(const ShiftedWeights& h1,
                                          const ShiftedWeights& h2);

}  // namespace dwmm
