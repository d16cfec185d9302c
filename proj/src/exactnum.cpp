#include "dwmm/exactnum.hpp"

#include <mutex>
#include <stdexcept>

namespace dwmm {

BigInt factorial(long k) {
    if (k < 0) throw std::domain_error("factorial: negative argument");
    static std::vector<BigInt> cache{1};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(cache.size()) <= k)
        cache.push_back(cache.back() * static_cast<long>(cache.size()));
    return cache[static_cast<size_t>(k)];
}

BigInt double_factorial(long k) {
    if (k < -1) throw std::domain_error("double_factorial: argument below -1");
    BigInt r = 1;
    for (long v = k; v > 1; v -= 2) r *= v;
    return r;
}

template <typename T>
static T vandermonde_impl(const std::vector<T>& v) {
    T prod = 1;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) prod *= v[j] - v[i];
    return prod;
}

BigRational vandermonde(const std::vector<BigRational>& v) {
    return vandermonde_impl(v);
}
BigInt vandermonde(const std::vector<BigInt>& v) { return vandermonde_impl(v); }

AntisymmetricMatrix::AntisymmetricMatrix(int dim) : dim_(dim) {
    if (dim < 0 || dim % 2 != 0)
        throw std::domain_error("AntisymmetricMatrix: dimension must be even");
    upper_.assign(static_cast<size_t>(dim) * dim, BigRational(0));
}

BigRational AntisymmetricMatrix::get(int i, int j) const {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
        throw std::out_of_range("AntisymmetricMatrix::get");
    if (i == j) return 0;
    if (i < j) return upper_[static_cast<size_t>(i) * dim_ + j];
    return -upper_[static_cast<size_t>(j) * dim_ + i];
}

void AntisymmetricMatrix::set_upper(int i, int j, const BigRational& v) {
    if (!(0 <= i && i < j && j < dim_))
        throw std::out_of_range("AntisymmetricMatrix::set_upper: need i < j");
    upper_[static_cast<size_t>(i) * dim_ + j] = v;
}

namespace {

// Pf over the index subset `idx` of m, by cofactor expansion on idx[0].
BigRational pf_cofactor(const AntisymmetricMatrix& m, std::vector<int> idx) {
    if (idx.empty()) return 1;
    BigRational sum = 0;
    std::vector<int> rest(idx.size() - 2);
    for (size_t j = 1; j < idx.size(); ++j) {
        BigRational a = m.get(idx[0], idx[j]);
        if (a == 0) continue;
        size_t t = 0;
        for (size_t k = 1; k < idx.size(); ++k)
            if (k != j) rest[t++] = idx[k];
        BigRational term = a * pf_cofactor(m, rest);
        if (j % 2 == 0) term = -term;
        sum += term;
    }
    return sum;
}

// Exact skew-symmetric elimination: zero out row/column pairs below the
// (2k, 2k+1) pivot, accumulating Pf = prod of pivots, with pivoting swaps
// each flipping the sign.
BigRational pf_eliminate(const AntisymmetricMatrix& m) {
    int n = m.dim();
    std::vector<std::vector<BigRational>> a(
        n, std::vector<BigRational>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.get(i, j);

    BigRational pf = 1;
    for (int k = 0; k < n; k += 2) {
        int piv = -1;
        for (int j = k + 1; j < n; ++j)
            if (a[k][j] != 0) {
                piv = j;
                break;
            }
        if (piv < 0) return 0;  // row k is zero on the active block
        if (piv != k + 1) {
            std::swap(a[piv], a[k + 1]);
            for (int i = 0; i < n; ++i) std::swap(a[i][piv], a[i][k + 1]);
            pf = -pf;
        }
        BigRational p = a[k][k + 1];
        pf *= p;
        // Shear both rows and columns i >= k+2 against the pivot pair; the
        // congruence update keeps the trailing block skew-symmetric and has
        // unit determinant, so Pf accumulates exactly the pivots.
        for (int i = k + 2; i < n; ++i) {
            BigRational fi = a[k][i] / p;
            BigRational gi = a[k + 1][i] / p;
            if (fi == 0 && gi == 0) continue;
            for (int j = k + 2; j < n; ++j) {
                a[i][j] += gi * a[k][j] - fi * a[k + 1][j];
            }
        }
    }
    return pf;
}

}  // namespace

BigRational pfaffian(const AntisymmetricMatrix& m) {
    if (m.dim() <= 8) {
        std::vector<int> idx(static_cast<size_t>(m.dim()));
        for (int i = 0; i < m.dim(); ++i) idx[static_cast<size_t>(i)] = i;
        return pf_cofactor(m, idx);
    }
    return pf_eliminate(m);
}

}  // namespace dwmm
