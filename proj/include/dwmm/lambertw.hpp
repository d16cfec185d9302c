#pragma once

#include <complex>

namespace dwmm {

// Principal branch of the Lambert W function: the solution of w e^w = z
// that is analytic at 0 with W(0) = 0. Halley iteration on a regime-picked
// seed (branch-point series near -1/e, log-based seeds elsewhere); the
// returned value satisfies |w e^w - z| <= 1e-12 * max(|z|, 1). Throws
// std::runtime_error with the best iterate in the message if the iteration
// stalls (only possible in a close neighborhood of the branch point).
std::complex<double> lambert_w_principal(std::complex<double> z);

}  // namespace dwmm
