#include "dwmm/gaussavg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dwmm/exactnum.hpp"
#include "dwmm/permutation.hpp"

namespace dwmm {

void LaurentPoly::add(long exponent, const BigRational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

BigRational LaurentPoly::eval(const BigRational& x) const {
    BigRational acc = 0;
    for (const auto& [e, c] : terms_) acc += c * rat_pow(x, e);
    return acc;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        BigRational c = it->second;
        if (out.empty()) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += (c < 0) ? " - " : " + ";
            if (c < 0) c = -c;
        }
        const bool unit = (c == 1 && it->first != 0);
        if (!unit) out += dwmm::to_string(c);
        if (it->first != 0) {
            if (!unit) out += " ";
            out += "N";
            if (it->first != 1) out += "^" + std::to_string(it->first);
        }
    }
    return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add(ea + eb, ca * cb);
    return r;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.terms().empty()) throw std::domain_error("divide_exact: division by zero");
    if (a.terms().empty()) return {};
    // Long division from the top exponent. An exact quotient cannot reach
    // below bottom(a) - bottom(b); crossing that floor proves inexactness.
    const long floor_exp = a.terms().begin()->first - b.terms().begin()->first;
    const auto& [be, bc] = *b.terms().rbegin();
    LaurentPoly q;
    LaurentPoly r = a;
    while (!r.terms().empty()) {
        const auto& [re, rc] = *r.terms().rbegin();
        const long qe = re - be;
        if (qe < floor_exp) throw std::domain_error("divide_exact: not divisible");
        const BigRational qc = rc / bc;
        q.add(qe, qc);
        LaurentPoly mono;
        mono.add(qe, qc);
        r = r - mono * b;
    }
    return q;
}

BigRational oracle_chiA(const Partition& R, int N) {
    if (!is_partition(R)) throw std::invalid_argument("oracle_chiA: not a partition");
    if (N < 1) throw std::invalid_argument("oracle_chiA: N must be positive");
    const int n = partition_weight(R);
    if (n > 12) throw std::invalid_argument("oracle_chiA: representation size above 12");
    if (n % 2 != 0) return 0;
    if (static_cast<int>(R.size()) > N) return 0;  // the GL(N) character vanishes
    if (n == 0) return 1;

    const Partition pairing = pairing_type(n);
    const BigRational d = gl_dimension(from_partition(R, N));
    const BigInt s = sn_dimension(R);
    BigRational v = d / BigRational(s);
    v *= BigRational(class_size(n, pairing) * sn_character(R, pairing));
    v /= BigRational(big_pow(BigInt(N), static_cast<unsigned long>(n / 2)));
    return v;
}

BigRational dfi_chiA(const ShiftedWeights& h) {
    const long n = h.n();
    if (n % 2 != 0) return 0;
    BigRational v = gl_dimension(h) * chi_C2_over_C1(h);
    if (v == 0) return 0;
    v /= BigRational(big_pow(BigInt(h.N()), static_cast<unsigned long>(n / 2)));
    return v;
}

namespace {

// Representative of the conjugacy class with the given cycle type:
// consecutive cycles (1..t1)(t1+1..t1+t2)...
Permutation class_representative(int n, const Partition& type) {
    std::vector<int> img(static_cast<size_t>(n));
    int base = 1;
    for (int len : type) {
        for (int k = 0; k < len; ++k)
            img[static_cast<size_t>(base + k - 1)] = (k + 1 < len) ? base + k + 1 : base;
        base += len;
    }
    return Permutation(std::move(img));
}

// All fixed-point-free involutions of {1..2n} as one-line images.
void enumerate_pairings(std::vector<int>& img, unsigned used, int points,
                        std::vector<Permutation>& out) {
    int first = -1;
    for (int i = 0; i < points; ++i)
        if (!(used & (1u << i))) {
            first = i;
            break;
        }
    if (first < 0) {
        out.emplace_back(img);
        return;
    }
    for (int j = first + 1; j < points; ++j) {
        if (used & (1u << j)) continue;
        img[static_cast<size_t>(first)] = j + 1;
        img[static_cast<size_t>(j)] = first + 1;
        enumerate_pairings(img, used | (1u << first) | (1u << j), points, out);
    }
}

}  // namespace

LaurentPoly oracle_chiA2_symbolic(const Partition& R) {
    if (!is_partition(R)) throw std::invalid_argument("oracle_chiA2: not a partition");
    const int n = partition_weight(R);
    if (n > 6) throw std::invalid_argument("oracle_chiA2: representation size above 6");
    LaurentPoly poly;
    if (n == 0) {
        poly.add(0, 1);
        return poly;
    }

    const int points = 2 * n;
    std::vector<Permutation> pairings;
    {
        std::vector<int> img(static_cast<size_t>(points));
        enumerate_pairings(img, 0u, points, pairings);
    }

    // alpha swaps the two n-point blocks pointwise.
    std::vector<int> aimg(static_cast<size_t>(points));
    for (int i = 1; i <= n; ++i) {
        aimg[static_cast<size_t>(i - 1)] = i + n;
        aimg[static_cast<size_t>(i + n - 1)] = i;
    }
    const Permutation alpha(std::move(aimg));

    const BigInt nfact = factorial(n);
    for (const Partition& type : partitions_of(n)) {
        const BigInt chi = sn_character(R, type);
        if (chi == 0) continue;
        const BigRational weight =
            BigRational(chi * class_size(n, type)) / BigRational(nfact);

        // Extend the class representative to act on the first block only.
        const Permutation sigma = class_representative(n, type);
        std::vector<int> simg(static_cast<size_t>(points));
        for (int i = 1; i <= n; ++i) simg[static_cast<size_t>(i - 1)] = sigma.of(i);
        for (int i = n + 1; i <= points; ++i) simg[static_cast<size_t>(i - 1)] = i;
        const Permutation sigma_ext(std::move(simg));

        const Permutation tail = sigma_ext * alpha;
        for (const Permutation& gamma : pairings) {
            // cycle count is conjugation-invariant, so the composition order
            // inside the trace is immaterial
            const Permutation w = gamma * tail;
            poly.add(w.cycle_count() - n, weight);
        }
    }
    return poly;
}

BigRational oracle_chiA2(const Partition& R, int N) {
    if (N < 1) throw std::invalid_argument("oracle_chiA2: N must be positive");
    if (static_cast<int>(R.size()) > N) return 0;
    return oracle_chiA2_symbolic(R).eval(BigRational(N));
}

BigRational chiA2_pfaffian_raw(const ShiftedWeights& h) {
    const int N = h.N();
    if (N % 2 != 0) throw std::invalid_argument("chiA2_pfaffian: N must be even");

    AntisymmetricMatrix t(N);
    for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
            const long hi2 = 2 * h[i];
            const long hj2 = 2 * h[j];
            BigRational entry = 0;
            for (long k = 0; k <= hi2; ++k) {
                const long l = hi2 - k;
                for (long u = 0; u <= hj2; ++u) {
                    if ((k + u) % 2 == 0) continue;  // sign factor vanishes
                    const long v = hj2 - u;
                    BigRational term(double_factorial(k + u) * double_factorial(l + v - 2));
                    term /= BigRational(factorial(k) * factorial(u) * factorial(l) *
                                        factorial(v));
                    entry += (u % 2 == 0) ? term : -term;
                }
            }
            t.set_upper(i, j, entry);
        }
    }

    long hsum = 0;
    BigInt hfact = 1;
    for (long hi : h.values()) {
        hsum += hi;
        hfact *= factorial(2 * hi);
    }
    BigInt superfact = 1;
    for (int k = 2; k < N; ++k) superfact *= factorial(k);

    BigRational pref(big_pow(BigInt(N), static_cast<unsigned long>(N) *
                                            static_cast<unsigned long>(N - 1) / 2) *
                     hfact);
    pref /= BigRational(big_pow(BigInt(2 * N), static_cast<unsigned long>(hsum)) *
                        superfact);
    return pref * pfaffian(t);
}

BigRational pfaffian_calibration(int N) {
    std::vector<long> trivial(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) trivial[static_cast<size_t>(i)] = N - 1 - i;
    return chiA2_pfaffian_raw(ShiftedWeights(std::move(trivial)));
}

BigRational chiA2_pfaffian(const ShiftedWeights& h) {
    return chiA2_pfaffian_raw(h) / pfaffian_calibration(h.N());
}

BigRational chiA2_largeN(const Partition& R, int N) {
    if (!is_partition(R)) throw std::invalid_argument("chiA2_largeN: not a partition");
    if (N < 1) throw std::invalid_argument("chiA2_largeN: N must be positive");
    if (static_cast<int>(R.size()) > N) return 0;
    const int n = partition_weight(R);
    const BigRational d = gl_dimension(from_partition(R, N));
    BigRational v = BigRational(factorial(n)) * d * d / BigRational(sn_dimension(R));
    v /= BigRational(big_pow(BigInt(N), static_cast<unsigned long>(n)));
    return v;
}

namespace {

// Pfaffian of a real skew-symmetric matrix by the same congruence
// elimination as the exact routine, returning sign and log magnitude so the
// caller can attach enormous prefactors without overflow.
struct LogPf {
    int sign = 1;        // 0 when the Pfaffian vanishes
    long double log = 0; // ln |Pf|
};

LogPf pfaffian_log(std::vector<std::vector<long double>> a) {
    const int n = static_cast<int>(a.size());
    LogPf r;
    for (int k = 0; k < n; k += 2) {
        int piv = k + 1;
        for (int j = k + 2; j < n; ++j)
            if (std::fabs(static_cast<double>(a[static_cast<size_t>(k)][static_cast<size_t>(j)])) >
                std::fabs(static_cast<double>(a[static_cast<size_t>(k)][static_cast<size_t>(piv)])))
                piv = j;
        if (a[static_cast<size_t>(k)][static_cast<size_t>(piv)] == 0.0L) {
            r.sign = 0;
            return r;
        }
        if (piv != k + 1) {
            std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(k + 1)]);
            for (int i = 0; i < n; ++i)
                std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(piv)],
                          a[static_cast<size_t>(i)][static_cast<size_t>(k + 1)]);
            r.sign = -r.sign;
        }
        const long double p = a[static_cast<size_t>(k)][static_cast<size_t>(k + 1)];
        if (p < 0) r.sign = -r.sign;
        r.log += std::log(std::fabs(p));
        for (int i = k + 2; i < n; ++i) {
            const long double fi = a[static_cast<size_t>(k)][static_cast<size_t>(i)] / p;
            const long double gi = a[static_cast<size_t>(k + 1)][static_cast<size_t>(i)] / p;
            if (fi == 0.0L && gi == 0.0L) continue;
            for (int j = k + 2; j < n; ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                    gi * a[static_cast<size_t>(k)][static_cast<size_t>(j)] -
                    fi * a[static_cast<size_t>(k + 1)][static_cast<size_t>(j)];
        }
    }
    return r;
}

}  // namespace

double chiA2_saddle(const ShiftedWeights& h, double eps) {
    const int N = h.N();
    if (N % 2 != 0) throw std::invalid_argument("chiA2_saddle: N must be even");
    std::vector<long double> ht;
    ht.reserve(static_cast<size_t>(N));
    for (long v : h.values()) {
        if (v < 0) throw std::invalid_argument("chiA2_saddle: negative weight");
        ht.push_back(static_cast<long double>(v) / N);
    }
    for (int i = 1; i < N; ++i)
        if (ht[static_cast<size_t>(i - 1)] == ht[static_cast<size_t>(i)])
            throw std::invalid_argument("chiA2_saddle: coincident scaled weights");

    std::vector<std::vector<long double>> s(
        static_cast<size_t>(N), std::vector<long double>(static_cast<size_t>(N), 0.0L));
    const long double e2 = static_cast<long double>(eps) * eps;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            const long double d = ht[static_cast<size_t>(i)] - ht[static_cast<size_t>(j)];
            const long double p = ht[static_cast<size_t>(i)] + ht[static_cast<size_t>(j)];
            s[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                (eps == 0.0) ? p / d : d * (p + e2 / 2) / (d * d + e2 * p + e2 * e2 / 4);
        }

    const LogPf pf = pfaffian_log(std::move(s));
    if (pf.sign == 0) return 0.0;

    // ln of N^(N^2/2) (2 pi)^(-N/2) / prod k!  plus the saddle weights and
    // the 2^(N/2) from pulling the per-entry scale out of the Pfaffian.
    long double logpref = 0.5L * N * N * std::log(static_cast<long double>(N)) -
                          0.5L * N * std::log(2.0L * std::numbers::pi_v<long double>) +
                          0.5L * N * std::log(2.0L);
    for (int k = 2; k < N; ++k) logpref -= std::lgamma(static_cast<long double>(k + 1));
    for (long double v : ht)
        if (v > 0) logpref += static_cast<long double>(N) * v * (std::log(2.0L * v) - 1.0L);

    return static_cast<double>(pf.sign * std::exp(logpref + pf.log));
}

BigRational det_power_average(int N, long q) {
    if (N < 2 || N % 2 != 0) throw std::invalid_argument("det_power_average: N must be even");
    if (q < 0) throw std::invalid_argument("det_power_average: q must be non-negative");
    BigRational v = 1;
    for (long k = 0; k < N / 2; ++k) {
        v *= BigRational(double_factorial(2 * q + 2 * k + 1) *
                         double_factorial(2 * q + 2 * k - 1));
        v /= BigRational(double_factorial(2 * k + 1) * double_factorial(2 * k - 1));
    }
    v /= BigRational(big_pow(BigInt(N), static_cast<unsigned long>(N) *
                                            static_cast<unsigned long>(q)));
    return v;
}

BigRational conjecture_kN(const ShiftedWeights& h) {
    const int N = h.N();
    BigRational numer;
    if (N % 2 == 0)
        numer = chiA2_pfaffian(h);
    else
        numer = oracle_chiA2(h.to_partition(), N);

    BigRational denom = 1;
    for (int residue = 0; residue < 4; ++residue) {
        std::vector<BigInt> block;
        for (long v : h.values())
            if (v % 4 == residue) {
                block.emplace_back(v);
                denom *= BigRational(double_factorial(2 * v));
            }
        const BigInt delta = vandermonde(block);
        denom *= BigRational(delta * delta);
    }
    denom /= rat_pow(BigRational(N), h.n());
    if (denom == 0) throw std::domain_error("conjecture_kN: vanishing comparison product");
    return numer / denom;
}

BigRational traceM_property(long p, long N) {
    if (p < 2 || p % 2 != 0) throw std::invalid_argument("traceM_property: p must be even");
    if (N < 2 || N % 2 != 0) throw std::invalid_argument("traceM_property: N must be even");
    BigRational v(double_factorial(p * N / 2 + 1), double_factorial(p * (N / 2 - 1) + 1));
    v.canonicalize();
    v /= BigRational(big_pow(BigInt(N), static_cast<unsigned long>(p / 2)));
    return v;
}

AverageResult average_chi(const ShiftedWeights& h, int power, const std::string& method,
                          double eps) {
    if (power != 1 && power != 2)
        throw std::invalid_argument("average_chi: power must be 1 or 2");
    AverageResult res;
    res.method = method;
    res.N = h.N();
    res.n = h.n();
    if (power == 1) {
        if (method == "oracle")
            res.value = oracle_chiA(h.to_partition(), h.N());
        else if (method == "dfi")
            res.value = dfi_chiA(h);
        else
            throw std::invalid_argument("average_chi: power 1 supports oracle and dfi");
    } else {
        if (method == "oracle")
            res.value = oracle_chiA2(h.to_partition(), h.N());
        else if (method == "pfaffian")
            res.value = chiA2_pfaffian(h);
        else if (method == "large-n")
            res.value = chiA2_largeN(h.to_partition(), h.N());
        else if (method == "saddle") {
            res.exact = false;
            res.value_float = chiA2_saddle(h, eps);
            return res;
        } else
            throw std::invalid_argument("average_chi: unknown method " + method);
    }
    res.value_float = to_double(res.value);
    return res;
}

}  // namespace dwmm
