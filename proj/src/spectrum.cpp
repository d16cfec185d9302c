#include "dwmm/spectrum.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dwmm/lambertw.hpp"

namespace dwmm {

namespace {

using C = std::complex<long double>;

constexpr long double kPi = std::numbers::pi_v<long double>;

// e^{2 pi i s / m} with the quarter-turn cases exact, so conjugate and
// negation symmetries of the spectrum survive in floating point.
C unit_phase(long s, long m) {
    const long r = ((s % m) + m) % m;
    if (r == 0) return {1.0L, 0.0L};
    if (2 * r == m) return {-1.0L, 0.0L};
    if (4 * r == m) return {0.0L, 1.0L};
    if (4 * r == 3 * m) return {0.0L, -1.0L};
    return std::polar(1.0L, 2.0L * kPi * static_cast<long double>(r) /
                                static_cast<long double>(m));
}

// Seeds on the Lambert-W image of the unit circle through the branch point:
// z_t = -W(-exp(2 pi i (t - 1/2)/n - 1)), the large-n location of the t-th
// root of the partial exponential sum s_n(n z).
std::vector<C> lambert_seeds(long n) {
    std::vector<C> seeds;
    seeds.reserve(static_cast<size_t>(n));
    for (long t = 1; t <= n; ++t) {
        const double theta = 2.0 * std::numbers::pi * (static_cast<double>(t) - 0.5) /
                             static_cast<double>(n);
        const std::complex<double> arg =
            -std::exp(std::complex<double>(-1.0, theta));
        const std::complex<double> w = lambert_w_principal(arg);
        seeds.emplace_back(-w.real(), -w.imag());
    }
    return seeds;
}

// Exact promotion of a long double (sign + 64-bit mantissa) into an mpf:
// the value splits exactly into a double plus a double-sized remainder.
void mpf_from_ld(mpf_t out, long double x) {
    const double hi = static_cast<double>(x);
    const double lo = static_cast<double>(x - static_cast<long double>(hi));
    mpf_set_d(out, hi);
    if (lo != 0.0) {
        mpf_t t;
        mpf_init2(t, 64);
        mpf_set_d(t, lo);
        mpf_add(out, out, t);
        mpf_clear(t);
    }
}

// The degree-n factor q(z) = sum_r (n z)^r / r! whose zeros carry the
// spectrum. Near the left edge of the zero curve the sum cancels down by
// a factor exp(0.557 n) from its largest term, so machine-precision Horner
// evaluation turns into rounding noise around n = 55. All point values are
// therefore computed with GMP floats at 0.81 bits per unit of n (0.557 /
// ln 2, plus slack); only the small Newton correction is demoted back.
class PartialSumPoly {
  public:
    explicit PartialSumPoly(long n)
        : n_(n), prec_(static_cast<mp_bitcnt_t>(128 + (81L * n + 99) / 100)) {
        c_.reserve(static_cast<size_t>(n) + 1);
        dc_.reserve(static_cast<size_t>(n));
        mpf_class cur(1, prec_);
        for (long r = 0; r <= n; ++r) {
            c_.push_back(cur);
            if (r >= 1) dc_.push_back(cur * r);  // coefficient of z^{r-1} in q'
            if (r < n) {
                cur *= n;
                cur /= (r + 1);
            }
        }
    }

    // q(z)/q'(z) at working precision. The ratio near a root is the
    // distance to it, so a double return carries everything the update
    // step needs. Sets *derivative_zero instead of dividing by zero.
    std::complex<double> newton_ratio(C z, bool* derivative_zero) const {
        mpf_t zr, zi, ar, ai, br, bi, t1, t2, t3, t4;
        for (mpf_t* p : {&zr, &zi, &ar, &ai, &br, &bi, &t1, &t2, &t3, &t4})
            mpf_init2(*p, prec_);
        mpf_from_ld(zr, z.real());
        mpf_from_ld(zi, z.imag());

        horner(c_, zr, zi, ar, ai, t1, t2, t3, t4);
        horner(dc_, zr, zi, br, bi, t1, t2, t3, t4);

        // w = (a * conj(b)) / |b|^2
        mpf_mul(t1, br, br);
        mpf_mul(t2, bi, bi);
        mpf_add(t1, t1, t2);  // |b|^2
        std::complex<double> w;
        if (mpf_sgn(t1) == 0) {
            *derivative_zero = true;
        } else {
            *derivative_zero = false;
            mpf_mul(t2, ar, br);
            mpf_mul(t3, ai, bi);
            mpf_add(t2, t2, t3);
            mpf_div(t2, t2, t1);  // Re w
            mpf_mul(t3, ai, br);
            mpf_mul(t4, ar, bi);
            mpf_sub(t3, t3, t4);
            mpf_div(t3, t3, t1);  // Im w
            w = {mpf_get_d(t2), mpf_get_d(t3)};
        }
        for (mpf_t* p : {&zr, &zi, &ar, &ai, &br, &bi, &t1, &t2, &t3, &t4})
            mpf_clear(*p);
        return w;
    }

    // |q(z)| / sum_r |c_r| |z|^r, both sides at working precision.
    double rel_residual(C z) const {
        mpf_t zr, zi, ar, ai, za, sc, t1, t2, t3, t4;
        for (mpf_t* p : {&zr, &zi, &ar, &ai, &za, &sc, &t1, &t2, &t3, &t4})
            mpf_init2(*p, prec_);
        mpf_from_ld(zr, z.real());
        mpf_from_ld(zi, z.imag());

        horner(c_, zr, zi, ar, ai, t1, t2, t3, t4);
        mpf_mul(t1, ar, ar);
        mpf_mul(t2, ai, ai);
        mpf_add(t1, t1, t2);
        mpf_sqrt(t1, t1);  // |q(z)|

        mpf_mul(t2, zr, zr);
        mpf_mul(t3, zi, zi);
        mpf_add(t2, t2, t3);
        mpf_sqrt(za, t2);  // |z|
        mpf_set_ui(sc, 0);
        for (size_t r = c_.size(); r-- > 0;) {
            mpf_mul(sc, sc, za);
            mpf_add(sc, sc, c_[r].get_mpf_t());
        }
        mpf_div(t1, t1, sc);
        const double out = mpf_get_d(t1);
        for (mpf_t* p : {&zr, &zi, &ar, &ai, &za, &sc, &t1, &t2, &t3, &t4})
            mpf_clear(*p);
        return out;
    }

  private:
    static void horner(const std::vector<mpf_class>& coeff, const mpf_t zr, const mpf_t zi,
                       mpf_t accr, mpf_t acci, mpf_t t1, mpf_t t2, mpf_t t3, mpf_t t4) {
        mpf_set_ui(accr, 0);
        mpf_set_ui(acci, 0);
        for (size_t r = coeff.size(); r-- > 0;) {
            mpf_mul(t1, accr, zr);
            mpf_mul(t2, acci, zi);
            mpf_mul(t3, accr, zi);
            mpf_mul(t4, acci, zr);
            mpf_sub(accr, t1, t2);
            mpf_add(accr, accr, coeff[r].get_mpf_t());
            mpf_add(acci, t3, t4);
        }
    }

    long n_;
    mp_bitcnt_t prec_;
    std::vector<mpf_class> c_;   // c_r = n^r / r!
    std::vector<mpf_class> dc_;  // r c_r, the derivative coefficients
};

// One Jacobi sweep of Aberth-Ehrlich: every correction uses the same
// snapshot of the root vector, so the result does not depend on update
// order. Roots whose last correction fell under the freeze threshold stay
// put (they still repel the others). Returns the largest relative step
// among the active roots.
long double aberth_sweep(const PartialSumPoly& poly, std::vector<C>& roots,
                         std::vector<char>& frozen) {
    const size_t n = roots.size();
    std::vector<C> delta(n, C(0.0L));
    long double step = 0;
    for (size_t k = 0; k < n; ++k) {
        if (frozen[k]) continue;
        const C zk = roots[k];
        bool dz = false;
        const std::complex<double> wd = poly.newton_ratio(zk, &dz);
        if (dz) continue;
        C w(wd.real(), wd.imag());
        if (!std::isfinite(wd.real()) || !std::isfinite(wd.imag())) continue;
        C repel = 0;
        for (size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            C diff = zk - roots[j];
            if (std::abs(diff) < 1e-300L) diff = 1e-300L;
            repel += 1.0L / diff;
        }
        const C denom = 1.0L - w * repel;
        C d = (denom == C(0.0L)) ? w : w / denom;
        // Trust cap: a stray iterate must not be flung across the plane.
        const long double zmag = std::max(std::abs(zk), 1e-30L);
        const long double dmag = std::abs(d);
        if (dmag > 0.5L * zmag) d *= 0.5L * zmag / dmag;
        delta[k] = d;
        const long double rel = std::abs(d) / zmag;
        step = std::max(step, rel);
        if (rel < 5e-19L) frozen[k] = 1;
    }
    for (size_t k = 0; k < n; ++k) roots[k] -= delta[k];
    return step;
}

}  // namespace

std::complex<long double> Spectrum::power_trace(long q) const {
    // Binary powering rather than pow(): exact sign symmetry, so the +-
    // pairs of an m = 2 spectrum cancel odd traces identically.
    C acc = 0;
    for (const C& ev : eigenvalues) {
        C pw = 1.0L;
        C base = ev;
        for (unsigned long e = static_cast<unsigned long>(q); e != 0; e >>= 1) {
            if (e & 1UL) pw *= base;
            if (e > 1UL) base *= base;
        }
        acc += pw;
    }
    return acc;
}

Spectrum exact_spectrum(long N, long m, double tol) {
    if (N < 1 || m < 1) throw std::invalid_argument("exact_spectrum: N and m must be positive");
    if (N % m != 0) throw std::invalid_argument("exact_spectrum: m must divide N");
    if (N > 2000) throw std::invalid_argument("exact_spectrum: N capped at 2000");
    const long n = N / m;

    const PartialSumPoly poly(n);
    std::vector<C> roots = lambert_seeds(n);

    // Iterate until every root's correction hits the long-double floor;
    // the residuals get the final say below.
    std::vector<char> frozen(static_cast<size_t>(n), 0);
    for (int sweep = 0; sweep < 400; ++sweep) {
        const long double step = aberth_sweep(poly, roots, frozen);
        if (step < 1e-18L) break;
        if (std::all_of(frozen.begin(), frozen.end(), [](char f) { return f != 0; })) break;
    }

    long double worst = 0;
    for (const C& z : roots)
        worst = std::max(worst, static_cast<long double>(poly.rel_residual(z)));
    if (!(worst < static_cast<long double>(tol))) {
        std::ostringstream os;
        os << "exact_spectrum: root finder stalled at relative residual "
           << static_cast<double>(worst) << " (requested " << tol << ")";
        throw std::runtime_error(os.str());
    }

    // The roots of the partial sum are simple and well separated; collapsed
    // iterates or a drift to a different polynomial would silently corrupt
    // every downstream trace, so both are hard errors.
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (std::abs(roots[i] - roots[j]) < 1e-8L)
                throw std::runtime_error("exact_spectrum: two iterates collapsed onto one root");
    C zsum = 0, zinv = 0;
    for (const C& z : roots) {
        zsum += z;
        zinv += 1.0L / z;
    }
    if (std::abs(zsum + 1.0L) > 1e-9L * static_cast<long double>(n) ||
        std::abs(zinv + static_cast<long double>(n)) > 1e-9L * static_cast<long double>(n))
        throw std::runtime_error("exact_spectrum: root set fails the coefficient identities");

    Spectrum s;
    s.N = N;
    s.m = m;
    s.source = SpectrumSource::ExactRoots;
    s.max_residual = static_cast<double>(worst);
    s.eigenvalues.reserve(static_cast<size_t>(N));
    for (const C& z : roots) {
        // lambda^{-m} = -z, principal root; no partial-sum zero is real
        // positive, so -z stays off the log cut.
        const C base = std::exp(-std::log(-z) / static_cast<long double>(m));
        for (long sidx = 1; sidx <= m; ++sidx)
            s.eigenvalues.push_back(unit_phase(sidx, m) * base);
    }
    return s;
}

Spectrum approx_spectrum(long N, long m) {
    if (N < 1 || m < 1) throw std::invalid_argument("approx_spectrum: N and m must be positive");
    if (N % m != 0) throw std::invalid_argument("approx_spectrum: m must divide N");
    const long n = N / m;

    Spectrum s;
    s.N = N;
    s.m = m;
    s.source = SpectrumSource::LambertApprox;
    s.eigenvalues.reserve(static_cast<size_t>(N));
    for (long t = 1; t <= n; ++t) {
        const double theta = 2.0 * std::numbers::pi * (static_cast<double>(t) - 0.5) /
                             static_cast<double>(n);
        const std::complex<double> w =
            lambert_w_principal(-std::exp(std::complex<double>(-1.0, theta)));
        const C wl(w.real(), w.imag());
        const C base = std::exp(-std::log(wl) / static_cast<long double>(m));
        for (long sidx = 1; sidx <= m; ++sidx)
            s.eigenvalues.push_back(unit_phase(sidx, m) * base);
    }
    return s;
}

long q_max(const Spectrum& s, double tol) {
    const long cap = 1000000;
    const long double N = static_cast<long double>(s.N);
    std::vector<C> pw(s.eigenvalues);
    for (long p = 1; p <= cap; ++p) {
        if (p > 1)
            for (size_t i = 0; i < pw.size(); ++i) pw[i] *= s.eigenvalues[i];
        C tr = 0;
        long double mx = 0;
        for (const C& v : pw) {
            tr += v;
            mx = std::max(mx, std::abs(v));
        }
        const long double want = (p == s.m) ? N : 0.0L;
        if (std::abs(tr - want) / N >= static_cast<long double>(tol)) return p - 1;
        if (mx > 1e300L) return p;  // beyond the numerically resolvable range
    }
    return cap;
}

std::complex<double> spectral_density(std::complex<double> lambda, long m) {
    if (lambda == std::complex<double>(0.0))
        throw std::invalid_argument("spectral_density: lambda = 0");
    const std::complex<double> inv = 1.0 / lambda;
    const std::complex<double> sum = inv + std::pow(inv, static_cast<double>(m + 1));
    // -(1/(2 pi i)) = i/(2 pi)
    return std::complex<double>(0.0, 1.0 / (2.0 * std::numbers::pi)) * sum;
}

std::complex<double> resolvent(const Spectrum& s, std::complex<double> mu) {
    const C mul(mu.real(), mu.imag());
    C acc = 0;
    for (const C& ev : s.eigenvalues) acc += 1.0L / (1.0L - mul * ev);
    acc /= static_cast<long double>(s.N);
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

double max_relative_deviation(const Spectrum& a, const Spectrum& b) {
    long double worst = 0;
    for (const C& x : a.eigenvalues) {
        long double best = std::numeric_limits<long double>::infinity();
        for (const C& y : b.eigenvalues)
            best = std::min(best, std::abs(x - y) / std::abs(y));
        worst = std::max(worst, best);
    }
    return static_cast<double>(worst);
}

}  // namespace dwmm
