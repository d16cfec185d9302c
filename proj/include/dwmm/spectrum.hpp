#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace dwmm {

enum class SpectrumSource { ExactRoots, LambertApprox };

// Integration constant in the eigenvalue-curve relation
// lambda^{-m} exp(lambda^{-m}) = kappa exp(2 pi i m x). The partial-sum
// polynomial pins it to the branch-point value -1/e; the wider family of
// closed curves with |kappa| < 1/e is documented here but not modeled.
inline const double kappa_principal = -std::exp(-1.0);

struct Spectrum {
    long N = 0;
    long m = 1;
    SpectrumSource source = SpectrumSource::ExactRoots;
    std::vector<std::complex<long double>> eigenvalues;
    // Largest relative root residual accepted by the solver (0 for the
    // Lambert approximation, which is evaluated, not solved).
    double max_residual = 0.0;

    // sum of lambda^q over the spectrum, accumulated in extended precision.
    std::complex<long double> power_trace(long q) const;
};

// All N roots of the characteristic polynomial of C_m by Aberth-Ehrlich
// simultaneous iteration on the degree-N/m partial-sum factor, seeded from
// the Lambert-W curve. Jacobi-style sweeps (corrections computed from a
// frozen snapshot, applied together), so the iteration is deterministic.
// Every root satisfies |q(z)| / sum_r |c_r| |z|^r < tol. Requires m | N and
// N <= 2000; throws std::runtime_error if the sweep cap is hit first.
Spectrum exact_spectrum(long N, long m, double tol = 1e-12);

// The closed-form large-N approximation
//   lambda_{ts} = e^{2 pi i s / m} W(-e^{2 pi i m (t - 1/2)/N - 1})^{-1/m},
// t = 1..N/m, s = 1..m, stored t-major. Phases with s/m in {1, 1/2, 1/4,
// 3/4} are applied exactly, so for m = 2 the spectrum is exact +- pairs.
Spectrum approx_spectrum(long N, long m);

// Largest q such that |Tr(C^p)/N - delta_{p,m}| < tol for every p <= q,
// measured from the stored eigenvalues. Power sums with q near or above N
// cancel huge terms, so the measurable range shrinks with |lambda|_max^q
// times working epsilon; the scan stops once magnitudes pass the reliable
// range.
long q_max(const Spectrum& s, double tol = 0.5);

// Density of eigenvalues along the limiting curve, normalized so the curve
// carries unit mass: -(1/(2 pi i)) (lambda^{-1} + lambda^{-m-1}).
std::complex<double> spectral_density(std::complex<double> lambda, long m);

// (1/N) sum_t 1/(1 - mu lambda_t); approaches 1 + mu^m inside the
// convergence disk of the trace expansion.
std::complex<double> resolvent(const Spectrum& s, std::complex<double> mu);

// max over a's eigenvalues of the relative distance to the nearest
// eigenvalue of b.
double max_relative_deviation(const Spectrum& a, const Spectrum& b);

}  // namespace dwmm
