#include <complex>
#include <functional>
#include <vector>

#include "doctest.h"
#include "dwmm/exactnum.hpp"
#include "dwmm/glchar.hpp"

using namespace dwmm;

namespace {

// Schur polynomial by direct semistandard-tableau enumeration: sum over
// fillings with entries in 1..N, rows weakly and columns strictly
// increasing, of the product of the chosen variables.
BigRational schur_ssyt(const Partition& lambda, const std::vector<BigRational>& x) {
    const int rows = static_cast<int>(lambda.size());
    const int N = static_cast<int>(x.size());
    std::vector<std::vector<int>> fill(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r)
        fill[static_cast<size_t>(r)].assign(static_cast<size_t>(lambda[static_cast<size_t>(r)]), 0);
    BigRational total(0);
    std::function<void(int, int, BigRational)> walk = [&](int r, int c, BigRational prod) {
        if (r == rows) {
            total += prod;
            return;
        }
        if (c == lambda[static_cast<size_t>(r)]) {
            walk(r + 1, 0, prod);
            return;
        }
        int low = 1;
        if (c > 0) low = fill[static_cast<size_t>(r)][static_cast<size_t>(c - 1)];
        if (r > 0) {
            int above = fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c)];
            low = std::max(low, above + 1);
        }
        for (int v = low; v <= N; ++v) {
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            walk(r, c + 1, prod * x[static_cast<size_t>(v - 1)]);
        }
    };
    if (rows == 0) return BigRational(1);
    walk(0, 0, BigRational(1));
    return total;
}

BigRational rat(int num, int den = 1) {
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("shifted weight dictionaries") {
    auto triv = from_partition({}, 4);
    CHECK(triv.values() == std::vector<long>{3, 2, 1, 0});
    CHECK(triv.n() == 0);
    auto def = from_partition({1}, 4);
    CHECK(def.values() == std::vector<long>{4, 2, 1, 0});
    CHECK(def.n() == 1);
    auto rect = from_partition({3, 3}, 2);
    CHECK(rect.values() == std::vector<long>{4, 3});
    CHECK(from_partition({2, 1}, 3).to_partition() == Partition{2, 1});
    CHECK_THROWS(from_partition({1, 1, 1}, 2));
    CHECK_THROWS(ShiftedWeights({2, 2}));
    CHECK(ShiftedWeights::parse("h:7,4,2,0").values() == std::vector<long>{7, 4, 2, 0});
    CHECK(ShiftedWeights::parse("3,1,0").to_string() == "3,1,0");
}

TEST_CASE("parity split admissibility") {
    CHECK(parity_split(from_partition({}, 4)).admissible);
    auto rep = parity_split(from_partition({1}, 2));  // h = {2,0}, both even
    CHECK(rep.even_count == 2);
    CHECK(rep.odd_count == 0);
    CHECK_FALSE(rep.admissible);
    CHECK(parity_split(from_partition({2}, 2)).admissible);  // h = {3,0}
}

TEST_CASE("dimensions") {
    for (int N : {1, 2, 3, 5}) CHECK(gl_dimension(from_partition({}, N)) == 1);
    for (int N : {2, 3, 5}) CHECK(gl_dimension(from_partition({1}, N)) == N);
    CHECK(gl_dimension(from_partition({2}, 2)) == 3);
    CHECK(gl_dimension(from_partition({2, 1}, 3)) == 8);  // adjoint of GL(3)
}

TEST_CASE("weyl character closed cases") {
    std::vector<BigRational> x{rat(2), rat(3), rat(5)};
    CHECK(weyl_character(from_partition({}, 3), x) == 1);
    CHECK(weyl_character(from_partition({1}, 3), x) == 10);

    std::vector<BigRational> xy{rat(1, 2), rat(1, 3)};
    // x^2 + xy + y^2
    CHECK(weyl_character(from_partition({2}, 2), xy) == rat(1, 4) + rat(1, 6) + rat(1, 9));
}

TEST_CASE("weyl character matches tableau enumeration") {
    std::vector<std::vector<BigRational>> grids{
        {rat(1), rat(2)},
        {rat(2), rat(3), rat(7, 2)},
        {rat(-1), rat(1, 3), rat(2), rat(5)},
    };
    for (const auto& x : grids) {
        int N = static_cast<int>(x.size());
        for (int n = 0; n <= 4; ++n)
            for (const auto& lambda : partitions_of(n)) {
                if (static_cast<int>(lambda.size()) > N) continue;
                CHECK(weyl_character(from_partition(lambda, N), x) == schur_ssyt(lambda, x));
            }
    }
}

TEST_CASE("repeated eigenvalues use the stable route") {
    // all ones: the character value is the dimension
    for (int N : {2, 3, 4}) {
        std::vector<BigRational> ones(static_cast<size_t>(N), rat(1));
        for (int n = 0; n <= 4; ++n)
            for (const auto& lambda : partitions_of(n)) {
                if (static_cast<int>(lambda.size()) > N) continue;
                auto h = from_partition(lambda, N);
                CHECK(weyl_character(h, ones) == gl_dimension(h));
            }
    }
    // near-confluent complex eigenvalues stay close to the exact value
    std::vector<std::complex<double>> close{{1.0, 0.0}, {1.0 + 5e-10, 0.0}, {2.0, 0.0}};
    std::vector<BigRational> exact{rat(1), rat(1), rat(2)};
    auto h = from_partition({2, 1}, 3);
    double want = to_double(weyl_character(h, exact));
    CHECK(std::abs(weyl_character(h, close) - want) < 1e-6 * std::abs(want));
}

TEST_CASE("expansion coefficients") {
    CHECK(expansion_coefficient(from_partition({}, 2)) == 1);
    CHECK(expansion_coefficient(from_partition({2}, 2)) == 1);
    CHECK(expansion_coefficient(from_partition({1, 1}, 2)) == -1);
    CHECK(expansion_coefficient(from_partition({1}, 2)) == 0);  // inadmissible
    // the trivial representation has coefficient one at every N
    for (int N = 1; N <= 8; ++N) CHECK(expansion_coefficient(from_partition({}, N)) == 1);
    // Magnitude closed form on admissible weights. The split-Vandermonde
    // expression carries an N-dependent constant; normalizing by its value
    // on the trivial weights pins the coefficient of the trivial character
    // to one, which is what the exponential expansion requires.
    auto split_form = [](const ShiftedWeights& h) -> BigRational {
        std::vector<BigInt> he, ho;
        BigRational denom(1);
        for (long v : h.values()) {
            (v % 2 == 0 ? he : ho).emplace_back(v);
            denom *= BigRational(factorial(v / 2));
        }
        std::sort(he.begin(), he.end());
        std::sort(ho.begin(), ho.end());
        return BigRational(vandermonde(he) * vandermonde(ho)) / denom;
    };
    for (int N : {2, 3, 4}) {
        BigRational base = split_form(from_partition({}, N));
        for (int n = 0; n <= 6; n += 2) {
            for (const auto& lambda : partitions_of(n)) {
                if (static_cast<int>(lambda.size()) > N) continue;
                auto h = from_partition(lambda, N);
                auto c = expansion_coefficient(h);
                if (!parity_split(h).admissible) {
                    CHECK(c == 0);
                    continue;
                }
                BigRational mag = split_form(h) / base;
                CHECK((c == mag || c == -mag));
                CHECK(c != 0);
            }
        }
    }
}

TEST_CASE("constraint characters of order one and two") {
    for (int N : {2, 3, 4}) {
        CHECK(chi_C1(from_partition({}, N)) == 1);
        CHECK(chi_C1(from_partition({1}, N)) == N);
        CHECK(chi_C1(from_partition({2}, N)) == rat(N * N, 2));
    }
    CHECK(chi_C2_over_C1(from_partition({}, 2)) == 1);
    CHECK(chi_C2_over_C1(from_partition({2}, 2)) == 1);
    CHECK(chi_C2_over_C1(from_partition({1}, 2)) == 0);
    CHECK(chi_C2_over_C1(from_partition({4}, 4)) == 3);
}

TEST_CASE("closed form ratio equals the group algebra sum") {
    // chi(C2)/chi(C1) carries a factor N^{n/2} against the N-free
    // double-factorial combination
    for (int N = 2; N <= 5; ++N) {
        for (int n = 0; n <= 6; ++n) {
            for (const auto& lambda : partitions_of(n)) {
                if (static_cast<int>(lambda.size()) > N) continue;
                auto h = from_partition(lambda, N);
                BigRational lhs = chi_C2_rule(h) * rat_pow(BigRational(N), n / 2);
                if (n % 2 == 1) {
                    CHECK(chi_C2_rule(h) == 0);
                    CHECK(chi_C2_over_C1(h) == 0);
                    continue;
                }
                CHECK(lhs == chi_C2_over_C1(h) * chi_C1(h));
            }
        }
    }
}

TEST_CASE("order-m closed form cross-check") {
    for (int N : {2, 3, 4}) {
        auto triv = from_partition({}, N);
        double base1 = chi_Cm_uncalibrated(triv, 1);
        double base2 = chi_Cm_uncalibrated(triv, 2);
        REQUIRE(base1 != 0.0);
        REQUIRE(base2 != 0.0);
        for (int n = 0; n <= 5; ++n) {
            for (const auto& lambda : partitions_of(n)) {
                if (static_cast<int>(lambda.size()) > N) continue;
                auto h = from_partition(lambda, N);
                double got1 = chi_Cm_uncalibrated(h, 1) / base1;
                CHECK(got1 == doctest::Approx(to_double(chi_C1(h))).epsilon(1e-9));
                double got2 = chi_Cm_uncalibrated(h, 2) / base2;
                CHECK(got2 == doctest::Approx(to_double(chi_C2_rule(h))).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("littlewood richardson decompositions") {
    auto sym_alt = littlewood_richardson({1}, {1});
    CHECK(sym_alt == std::map<Partition, long>{{{2}, 1}, {{1, 1}, 1}});
    auto pieri = littlewood_richardson({2}, {1});
    CHECK(pieri == std::map<Partition, long>{{{3}, 1}, {{2, 1}, 1}});
    CHECK(invariant_dimension({1}, {1}) == 2);
    CHECK(invariant_dimension({2}, {1}) == 2);
    // Self inner product of the product character: expanding s_{21}^2 in
    // the power-sum basis gives (p1^6 - 2 p1^3 p3 + p3^2)/9, whose squared
    // norm is (720 + 4*18 + 18)/81 = 10; the GL(3) dimension identity
    // 8*8 = 27+10+10+2*8+1 confirms it.
    CHECK(invariant_dimension({2, 1}, {2, 1}) == 10);
    CHECK_THROWS(littlewood_richardson({9}, {8}));
}

TEST_CASE("pieri rule oracle") {
    // beta a single row: shapes obtained by adding k boxes, no two in a column
    for (const auto& alpha : std::vector<Partition>{{1}, {2}, {2, 1}, {3, 1}}) {
        for (int k = 1; k <= 3; ++k) {
            auto got = littlewood_richardson(alpha, {k});
            std::map<Partition, long> want;
            for (const auto& r : partitions_of(partition_weight(alpha) + k)) {
                // r/alpha must be a horizontal strip
                if (r.size() < alpha.size()) continue;
                if (static_cast<int>(r.size()) > static_cast<int>(alpha.size()) + 1) continue;
                bool ok = true;
                for (size_t i = 0; i < r.size(); ++i) {
                    int ai = i < alpha.size() ? alpha[i] : 0;
                    int prev = i == 0 ? 1 << 20 : alpha[i - 1];
                    if (r[i] < ai || r[i] > prev) {
                        ok = false;
                        break;
                    }
                }
                if (ok) want[r] = 1;
            }
            CHECK(got == want);
        }
    }
}

TEST_CASE("dimension identity under tensor decomposition") {
    std::vector<Partition> shapes{{1}, {2}, {1, 1}, {2, 1}, {3}};
    for (const auto& alpha : shapes)
        for (const auto& beta : shapes) {
            if (partition_weight(alpha) + partition_weight(beta) > 6) continue;
            auto dec = littlewood_richardson(alpha, beta);
            for (int N = 4; N <= 8; ++N) {
                BigRational want =
                    gl_dimension(from_partition(alpha, N)) * gl_dimension(from_partition(beta, N));
                BigRational got(0);
                for (const auto& [r, mult] : dec)
                    got += BigRational(mult) * gl_dimension(from_partition(r, N));
                CHECK(got == want);
            }
        }
}
