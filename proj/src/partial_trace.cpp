#include "dwmm/partial_trace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dwmm {

int poly_degree(const NPoly& p) {
    int deg = -1;
    for (const auto& [e, c] : p)
        if (c != 0) deg = std::max(deg, e);
    return deg;
}

NPoly poly_sub(const NPoly& a, const NPoly& b) {
    NPoly out = a;
    for (const auto& [e, c] : b) out[e] -= c;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

BigInt poly_eval(const NPoly& p, const BigInt& value) {
    BigInt acc = 0;
    for (const auto& [e, c] : p)
        acc += c * big_pow(value, static_cast<unsigned long>(e));
    return acc;
}

void WeightedPermSum::add(const Permutation& p, int exponent, const BigInt& coeff) {
    if (coeff == 0) return;
    NPoly& poly = terms[p];
    poly[exponent] += coeff;
    if (poly[exponent] == 0) poly.erase(exponent);
    if (poly.empty()) terms.erase(p);
}

namespace {

Permutation fixed_pairing(int n) {
    std::vector<int> img(static_cast<size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
        img[static_cast<size_t>(i - 1)] = i + n;
        img[static_cast<size_t>(i + n - 1)] = i;
    }
    return Permutation(std::move(img));
}

void require_pairing(const Permutation& gamma) {
    if (gamma.degree() % 2 != 0)
        throw std::invalid_argument("partial trace: degree must be even");
    for (int x = 1; x <= gamma.degree(); ++x) {
        int y = gamma.of(x);
        if (y == x || gamma.of(y) != x)
            throw std::invalid_argument("partial trace: permutation is not a pairing");
    }
}

}  // namespace

PartialTraceResult partial_trace(const Permutation& gamma) {
    require_pairing(gamma);
    const int n = gamma.degree() / 2;
    const Permutation alpha = fixed_pairing(n);
    auto in_first = [&](int x) { return x >= 1 && x <= n; };

    // Points of the first block paired within the first block, and points
    // of the second block paired within the second block (shifted down).
    std::vector<bool> p_final(static_cast<size_t>(n) + 1, false);
    std::vector<bool> p_initial(static_cast<size_t>(n) + 1, false);
    int s = 0;
    for (int x = 1; x <= n; ++x) {
        if (in_first(gamma.of(x))) {
            p_final[static_cast<size_t>(x)] = true;
            ++s;
        }
        if (!in_first(gamma.of(x + n))) p_initial[static_cast<size_t>(x)] = true;
    }

    std::vector<int> nu_f(static_cast<size_t>(n)), nu_i(static_cast<size_t>(n)),
        mu(static_cast<size_t>(n));
    auto ga = [&](int x) { return gamma.of(alpha.of(x)); };
    auto ga_inv = [&](int x) { return alpha.of(gamma.of(x)); };
    for (int x = 1; x <= n; ++x) {
        nu_f[static_cast<size_t>(x - 1)] = p_final[static_cast<size_t>(x)] ? gamma.of(x) : x;
        nu_i[static_cast<size_t>(x - 1)] =
            p_initial[static_cast<size_t>(x)] ? gamma.of(x + n) - n : x;
        if (!p_initial[static_cast<size_t>(x)]) {
            mu[static_cast<size_t>(x - 1)] = ga(x);
        } else {
            int y = x;
            int steps = 0;
            while (!p_final[static_cast<size_t>(y)]) {
                y = ga_inv(y);
                if (!in_first(y) || ++steps > 2 * n)
                    throw std::logic_error("partial trace: orbit failed to re-enter");
            }
            mu[static_cast<size_t>(x - 1)] = y;
        }
    }

    Permutation mu_p(std::move(mu));
    PartialTraceResult out{mu_p.cycle_count() - s,
                           Permutation(std::move(nu_f)) * mu_p * Permutation(std::move(nu_i))};
    if (out.exponent < 0) throw std::logic_error("partial trace: negative weight exponent");
    return out;
}

namespace {

long encode(const std::vector<int>& digits, int N) {
    long code = 0;
    for (int d : digits) code = code * N + d;
    return code;
}

}  // namespace

std::map<std::pair<long, long>, long> partial_trace_oracle(const Permutation& gamma, int N) {
    require_pairing(gamma);
    const int n = gamma.degree() / 2;
    if (N < 1) throw std::invalid_argument("oracle: size must be positive");
    double states = std::pow(static_cast<double>(N), n);
    if (states > 1e6 || states * states > 2e8)
        throw std::invalid_argument("oracle: index space too large");

    const Permutation sigma = gamma * fixed_pairing(n);
    std::map<std::pair<long, long>, long> out;

    // Enumerate all assignments of the output column (b) and the traced
    // indices (c). The operator's deltas determine the row multi-index
    // completely; it contributes when its traced half reproduces c.
    std::vector<int> v(static_cast<size_t>(2 * n), 0);
    std::vector<int> u(static_cast<size_t>(2 * n), 0);
    while (true) {
        for (int k = 1; k <= 2 * n; ++k)
            u[static_cast<size_t>(sigma.of(k) - 1)] = v[static_cast<size_t>(k - 1)];
        bool traced_match = true;
        for (int k = n; k < 2 * n; ++k)
            if (u[static_cast<size_t>(k)] != v[static_cast<size_t>(k)]) {
                traced_match = false;
                break;
            }
        if (traced_match) {
            std::vector<int> row(u.begin(), u.begin() + n);
            std::vector<int> col(v.begin(), v.begin() + n);
            out[{encode(row, N), encode(col, N)}] += 1;
        }
        int pos = 2 * n - 1;
        while (pos >= 0 && v[static_cast<size_t>(pos)] == N - 1)
            v[static_cast<size_t>(pos--)] = 0;
        if (pos < 0) break;
        v[static_cast<size_t>(pos)]++;
    }
    return out;
}

std::map<std::pair<long, long>, long> permutation_operator(const Permutation& sigma, int N,
                                                           long value) {
    const int n = sigma.degree();
    double states = std::pow(static_cast<double>(N), n);
    if (states > 1e6) throw std::invalid_argument("operator: index space too large");
    std::map<std::pair<long, long>, long> out;
    std::vector<int> b(static_cast<size_t>(n), 0);
    std::vector<int> a(static_cast<size_t>(n), 0);
    while (true) {
        for (int k = 1; k <= n; ++k)
            a[static_cast<size_t>(sigma.of(k) - 1)] = b[static_cast<size_t>(k - 1)];
        out[{encode(a, N), encode(b, N)}] += value;
        int pos = n - 1;
        while (pos >= 0 && b[static_cast<size_t>(pos)] == N - 1)
            b[static_cast<size_t>(pos--)] = 0;
        if (pos < 0) break;
        b[static_cast<size_t>(pos)]++;
    }
    return out;
}

std::pair<WeightedPermSum, WeightedPermSum> lemma_sum(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("lemma_sum: n out of range");
    WeightedPermSum lhs, rhs;
    for (const auto& gamma : class_elements(2 * n, pairing_type(2 * n))) {
        auto pt = partial_trace(gamma);
        lhs.add(pt.result, pt.exponent, 1);
    }
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
    do {
        Permutation rho(img);
        rhs.add(rho, rho.cycle_count(), 1);
    } while (std::next_permutation(img.begin(), img.end()));
    return {lhs, rhs};
}

}  // namespace dwmm
