#include "dwmm/lambertw.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dwmm {

namespace {

using C = std::complex<long double>;

// Seed for the Halley iteration. Three regimes: a square-root series about
// the branch point -1/e, log z - log log z for large |z|, and log(1 + z)
// in between (exact to first order at 0, right growth for large z). The
// point z = -1 sits on the singular set of log(1 + z), so a small disk
// around it falls back to the plain logarithm.
C initial_guess(C z) {
    const long double e = std::exp(1.0L);
    const C zb = z + 1.0L / e;
    if (std::abs(zb) < 0.25L) {
        const C p = std::sqrt(2.0L * (e * z + 1.0L));
        return -1.0L + p - p * p / 3.0L + 11.0L * p * p * p / 72.0L;
    }
    if (std::abs(z) > 3.0L) {
        const C l1 = std::log(z);
        const C l2 = std::log(l1);
        return l1 - l2 + l2 / l1;
    }
    if (std::abs(z + 1.0L) < 0.25L) return std::log(z);
    return std::log(1.0L + z);
}

}  // namespace

std::complex<double> lambert_w_principal(std::complex<double> zd) {
    const C z(zd.real(), zd.imag());
    if (z == C(0.0L)) return {0.0, 0.0};

    const long double scale = std::max<long double>(std::abs(z), 1.0L);
    C w = initial_guess(z);
    C best = w;
    long double best_res = std::abs(w * std::exp(w) - z);

    for (int it = 0; it < 80; ++it) {
        const C ew = std::exp(w);
        const C f = w * ew - z;
        const long double res = std::abs(f);
        if (res < best_res) {
            best = w;
            best_res = res;
        }
        if (res <= 1e-16L * scale) break;
        // Halley step for f(w) = w e^w - z.
        const C fp = ew * (w + 1.0L);
        const C fpp = ew * (w + 2.0L);
        C denom = fp - f * fpp / (2.0L * fp);
        if (denom == C(0.0L)) denom = fp;
        w -= f / denom;
    }

    if (best_res > 1e-12L * scale) {
        std::ostringstream os;
        os << "lambert_w_principal: stalled near the branch point; best iterate ("
           << static_cast<double>(best.real()) << ", " << static_cast<double>(best.imag())
           << ") with residual " << static_cast<double>(best_res);
        throw std::runtime_error(os.str());
    }
    return {static_cast<double>(best.real()), static_cast<double>(best.imag())};
}

}  // namespace dwmm
