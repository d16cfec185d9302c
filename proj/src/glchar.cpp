#include "dwmm/glchar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dwmm/exactnum.hpp"
#include "dwmm/permutation.hpp"

namespace dwmm {

namespace {

// Generic dense determinant by Gaussian elimination. Pivot selection is
// supplied by the caller so the same routine serves exact and floating
// scalars.
template <typename T, typename AbsFn>
T gauss_det(std::vector<std::vector<T>> a, AbsFn absval) {
    const size_t n = a.size();
    T det{1};
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        auto best = absval(a[col][col]);
        for (size_t r = col + 1; r < n; ++r) {
            auto cand = absval(a[r][col]);
            if (cand > best) {
                best = cand;
                piv = r;
            }
        }
        if (!(best > 0)) return T{0};
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == T{0}) continue;
            T f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

double abs_rat(const BigRational& x) { return std::fabs(to_double(x)); }

template <typename T>
T power(T base, long e) {
    T out{1};
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

// Complete homogeneous symmetric polynomials of the eigenvalues, degrees
// 0..kmax, via the Newton recurrence k h_k = sum_{i<=k} p_i h_{k-i}.
template <typename T>
std::vector<T> complete_homogeneous(const std::vector<T>& x, long kmax) {
    std::vector<T> p(static_cast<size_t>(kmax) + 1, T{0});
    for (long k = 1; k <= kmax; ++k)
        for (const T& xi : x) p[static_cast<size_t>(k)] += power(xi, k);
    std::vector<T> h(static_cast<size_t>(kmax) + 1, T{0});
    h[0] = T{1};
    for (long k = 1; k <= kmax; ++k) {
        T acc{0};
        for (long i = 1; i <= k; ++i)
            acc += p[static_cast<size_t>(i)] * h[static_cast<size_t>(k - i)];
        h[static_cast<size_t>(k)] = acc / T(static_cast<int>(k));
    }
    return h;
}

// Jacobi-Trudi determinant for the Schur polynomial of lambda.
template <typename T, typename AbsFn>
T schur_jacobi_trudi(const Partition& lambda, const std::vector<T>& x, AbsFn absval) {
    const long ell = static_cast<long>(lambda.size());
    if (ell == 0) return T{1};
    const long kmax = lambda[0] + ell;
    auto h = complete_homogeneous(x, kmax);
    std::vector<std::vector<T>> m(static_cast<size_t>(ell),
                                  std::vector<T>(static_cast<size_t>(ell), T{0}));
    for (long i = 0; i < ell; ++i)
        for (long j = 0; j < ell; ++j) {
            long deg = lambda[static_cast<size_t>(i)] - (i + 1) + (j + 1);
            if (deg >= 0) m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                h[static_cast<size_t>(deg)];
        }
    return gauss_det(std::move(m), absval);
}

template <typename T, typename AbsFn>
T char_det_ratio(const ShiftedWeights& hw, const std::vector<T>& x, AbsFn absval) {
    const int N = hw.N();
    std::vector<long> hinc(hw.values());
    std::sort(hinc.begin(), hinc.end());
    std::vector<std::vector<T>> num(static_cast<size_t>(N),
                                    std::vector<T>(static_cast<size_t>(N)));
    for (int k = 0; k < N; ++k)
        for (int t = 0; t < N; ++t)
            num[static_cast<size_t>(k)][static_cast<size_t>(t)] =
                power(x[static_cast<size_t>(k)], hinc[static_cast<size_t>(t)]);
    T den{1};
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            den *= x[static_cast<size_t>(j)] - x[static_cast<size_t>(i)];
    return gauss_det(std::move(num), absval) / den;
}

}  // namespace

ShiftedWeights::ShiftedWeights(std::vector<long> h) : h_(std::move(h)) {
    if (h_.empty()) throw std::invalid_argument("shifted weights: empty");
    for (size_t i = 0; i < h_.size(); ++i) {
        if (h_[i] < 0) throw std::invalid_argument("shifted weights: negative entry");
        if (i + 1 < h_.size() && h_[i] <= h_[i + 1])
            throw std::invalid_argument("shifted weights: not strictly decreasing");
    }
}

long ShiftedWeights::n() const {
    long s = 0;
    for (long v : h_) s += v;
    const long N = static_cast<long>(h_.size());
    return s - N * (N - 1) / 2;
}

Partition ShiftedWeights::to_partition() const {
    const int N = this->N();
    Partition lambda;
    for (int i = 0; i < N; ++i) {
        long part = h_[static_cast<size_t>(i)] - (N - 1 - i);
        if (part > 0) lambda.push_back(static_cast<int>(part));
    }
    return lambda;
}

std::string ShiftedWeights::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < h_.size(); ++i) {
        if (i) os << ',';
        os << h_[i];
    }
    return os.str();
}

ShiftedWeights ShiftedWeights::parse(const std::string& text) {
    std::string body = text;
    if (body.rfind("h:", 0) == 0) body = body.substr(2);
    std::vector<long> h;
    std::string token;
    std::istringstream is(body);
    while (std::getline(is, token, ','))
        if (!token.empty()) h.push_back(std::stol(token));
    return ShiftedWeights(std::move(h));
}

ShiftedWeights from_partition(const Partition& lambda, int N) {
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition");
    if (static_cast<int>(lambda.size()) > N)
        throw std::invalid_argument("partition has more rows than the matrix size");
    std::vector<long> h(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) {
        long part = i < static_cast<int>(lambda.size()) ? lambda[static_cast<size_t>(i)] : 0;
        h[static_cast<size_t>(i)] = part + (N - 1 - i);
    }
    return ShiftedWeights(std::move(h));
}

ParityReport parity_split(const ShiftedWeights& h) {
    ParityReport rep;
    for (long v : h.values()) (v % 2 == 0 ? rep.even_count : rep.odd_count)++;
    const int N = h.N();
    rep.admissible = rep.even_count == (N + 1) / 2;
    return rep;
}

BigRational gl_dimension(const ShiftedWeights& h) {
    std::vector<BigInt> hinc;
    for (auto it = h.values().rbegin(); it != h.values().rend(); ++it)
        hinc.emplace_back(static_cast<long>(*it));
    BigRational num(vandermonde(hinc));
    BigRational den(1);
    for (int k = 1; k < h.N(); ++k) den *= BigRational(factorial(k));
    return num / den;
}

std::complex<double> weyl_character(const ShiftedWeights& h,
                                    const std::vector<std::complex<double>>& eigs) {
    if (static_cast<int>(eigs.size()) != h.N())
        throw std::invalid_argument("eigenvalue count does not match N");
    double scale = 1.0;
    for (const auto& x : eigs) scale = std::max(scale, std::abs(x));
    bool confluent = false;
    for (size_t i = 0; i < eigs.size() && !confluent; ++i)
        for (size_t j = i + 1; j < eigs.size(); ++j)
            if (std::abs(eigs[i] - eigs[j]) < 1e-8 * scale) {
                confluent = true;
                break;
            }
    auto absval = [](const std::complex<double>& z) { return std::abs(z); };
    if (confluent)
        return schur_jacobi_trudi(h.to_partition(), eigs, absval);
    return char_det_ratio(h, eigs, absval);
}

BigRational weyl_character(const ShiftedWeights& h, const std::vector<BigRational>& eigs) {
    if (static_cast<int>(eigs.size()) != h.N())
        throw std::invalid_argument("eigenvalue count does not match N");
    bool repeated = false;
    for (size_t i = 0; i < eigs.size() && !repeated; ++i)
        for (size_t j = i + 1; j < eigs.size(); ++j)
            if (eigs[i] == eigs[j]) {
                repeated = true;
                break;
            }
    if (repeated)
        return schur_jacobi_trudi(h.to_partition(), eigs, abs_rat);
    return char_det_ratio(h, eigs, abs_rat);
}

BigRational expansion_coefficient(const ShiftedWeights& h) {
    const int N = h.N();
    std::vector<long> hinc(h.values());
    std::sort(hinc.begin(), hinc.end());
    std::vector<std::vector<BigRational>> a(
        static_cast<size_t>(N), std::vector<BigRational>(static_cast<size_t>(N), BigRational(0)));
    for (int l = 0; l < N; ++l)
        for (int t = 0; t < N; ++t) {
            long diff = hinc[static_cast<size_t>(t)] - l;
            if (diff >= 0 && diff % 2 == 0)
                a[static_cast<size_t>(l)][static_cast<size_t>(t)] =
                    BigRational(1) / BigRational(factorial(diff / 2));
        }
    return gauss_det(std::move(a), abs_rat);
}

BigRational chi_C1(const ShiftedWeights& h) {
    const long n = h.n();
    BigRational out(big_pow(BigInt(h.N()), static_cast<unsigned long>(n)));
    out *= BigRational(sn_dimension(h.to_partition()));
    out /= BigRational(factorial(n));
    return out;
}

BigRational chi_C2_over_C1(const ShiftedWeights& h) {
    auto rep = parity_split(h);
    if (!rep.admissible) return BigRational(0);
    std::vector<long> he, ho;
    for (long v : h.values()) (v % 2 == 0 ? he : ho).push_back(v);
    const long ceilhalf = (h.N() + 1) / 2;
    BigRational out(ceilhalf * (ceilhalf - 1) / 2 % 2 == 0 ? 1 : -1);
    for (long v : he) out *= BigRational(double_factorial(v - 1));
    for (long v : ho) out *= BigRational(double_factorial(v));
    for (long o : ho)
        for (long e : he) out /= BigRational(o - e);
    return out;
}

BigRational chi_C2_rule(const ShiftedWeights& h) {
    const long n = h.n();
    if (n % 2 != 0) return BigRational(0);
    const Partition lambda = h.to_partition();
    const auto type = pairing_type(static_cast<int>(n));
    BigRational out(big_pow(BigInt(h.N()), static_cast<unsigned long>(n / 2)));
    out *= BigRational(class_size(static_cast<int>(n), type));
    out *= BigRational(sn_character(lambda, type));
    out /= BigRational(factorial(n));
    return out;
}

double chi_Cm_uncalibrated(const ShiftedWeights& h, int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    const int N = h.N();
    std::vector<std::vector<long>> cls(static_cast<size_t>(m));
    for (long v : h.values()) cls[static_cast<size_t>(v % m)].push_back(v);
    // The residue-class sizes must match those of the trivial weights
    // (N-1, ..., 1, 0); otherwise the character vanishes.
    std::vector<int> want(static_cast<size_t>(m), 0);
    for (int i = 0; i < N; ++i) want[static_cast<size_t>(i % m)]++;
    for (int e = 0; e < m; ++e)
        if (static_cast<int>(cls[static_cast<size_t>(e)].size()) != want[static_cast<size_t>(e)])
            return 0.0;

    double value = 1.0;
    long quotient_sum = 0;
    for (int e = 0; e < m; ++e) {
        const auto& c = cls[static_cast<size_t>(e)];
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j)
                value *= static_cast<double>(c[i] - c[j]);
        for (long v : c) {
            long q = (v - e) / m;
            quotient_sum += q;
            value /= std::tgamma(static_cast<double>(q) + 1.0);
        }
    }
    double crosses = 1.0;
    for (int e1 = 0; e1 < m; ++e1)
        for (int e2 = e1 + 1; e2 < m; ++e2)
            for (long a : cls[static_cast<size_t>(e2)])
                for (long b : cls[static_cast<size_t>(e1)])
                    crosses *= static_cast<double>(a - b);
    if (crosses < 0) value = -value;
    value *= std::pow(static_cast<double>(N) / m, static_cast<double>(quotient_sum));
    return value;
}

}  // namespace dwmm
