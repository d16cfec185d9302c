#include <cmath>
#include <vector>

#include "doctest.h"
#include "dwmm/gaussavg.hpp"
#include "dwmm/glchar.hpp"
#include "dwmm/sn_char.hpp"

using namespace dwmm;

namespace {

BigRational frac(long n, long d) {
    BigRational r(n, d);
    r.canonicalize();
    return r;
}

ShiftedWeights det_rep(int N, long q) {
    return from_partition(Partition(static_cast<size_t>(N), static_cast<int>(q)), N);
}

double fitted_decay_exponent(const Partition& R) {
    const LaurentPoly sym = oracle_chiA2_symbolic(R);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (int N = 10; N <= 60; N += 10) {
        const double dev =
            std::fabs(to_double(chiA2_largeN(R, N) / sym.eval(BigRational(N))) - 1.0);
        const double lx = std::log(N), ly = std::log(dev);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++cnt;
    }
    return -(cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
}

}  // namespace

TEST_CASE("laurent polynomials in N") {
    LaurentPoly p;
    p.add(2, 1);
    p.add(0, frac(3, 2));
    p.add(-1, -2);
    p.add(-1, 2);  // cancels away
    CHECK(p.terms().size() == 2);
    CHECK(p.eval(BigRational(2)) == frac(11, 2));
    CHECK(p.to_string() == "N^2 + 3/2");

    LaurentPoly q;
    q.add(1, 2);
    q.add(-1, 1);
    CHECK(q.to_string() == "2 N + N^-1");
    CHECK((p + q).eval(BigRational(3)) == p.eval(BigRational(3)) + q.eval(BigRational(3)));
    CHECK((p - q).eval(BigRational(3)) == p.eval(BigRational(3)) - q.eval(BigRational(3)));
    CHECK(LaurentPoly{}.to_string() == "0");
}

TEST_CASE("laurent multiplication and exact division") {
    LaurentPoly np1, nm1;  // N + 1 and N - 1
    np1.add(1, 1);
    np1.add(0, 1);
    nm1.add(1, 1);
    nm1.add(0, -1);
    LaurentPoly n2m1;
    n2m1.add(2, 1);
    n2m1.add(0, -1);
    CHECK(np1 * nm1 == n2m1);
    CHECK(divide_exact(n2m1, np1) == nm1);
    CHECK(divide_exact(n2m1, nm1) == np1);

    // (N + N^-1)^2 = N^2 + 2 + N^-2, with negative exponents in play
    LaurentPoly w;
    w.add(1, 1);
    w.add(-1, 1);
    LaurentPoly sq = w * w;
    CHECK(sq.to_string() == "N^2 + 2 + N^-2");
    CHECK(divide_exact(sq, w) == w);

    CHECK((LaurentPoly{} * np1) == LaurentPoly{});
    CHECK(divide_exact(LaurentPoly{}, np1) == LaurentPoly{});

    LaurentPoly n2p1;
    n2p1.add(2, 1);
    n2p1.add(0, 1);
    CHECK_THROWS_AS(divide_exact(n2p1, np1), std::domain_error);
    CHECK_THROWS_AS(divide_exact(np1, LaurentPoly{}), std::domain_error);
}

TEST_CASE("first-power character averages") {
    SUBCASE("anchors") {
        CHECK(oracle_chiA({}, 5) == 1);
        CHECK(oracle_chiA({1}, 3) == 0);
        CHECK(oracle_chiA({3}, 4) == 0);  // odd size
        for (int N = 2; N <= 6; ++N) CHECK(oracle_chiA({2}, N) == frac(N + 1, 2));
        CHECK(oracle_chiA({1, 1}, 2) == frac(-1, 2));
        CHECK(oracle_chiA({1, 1, 1}, 2) == 0);  // more rows than N
        CHECK_THROWS_AS(oracle_chiA({13}, 3), std::invalid_argument);
    }

    SUBCASE("shifted-weight route agrees exactly everywhere") {
        int checked = 0;
        for (int n = 0; n <= 6; ++n)
            for (const Partition& R : partitions_of(n))
                for (int N = 2; N <= 6; ++N) {
                    if (static_cast<int>(R.size()) > N) continue;
                    CHECK(dfi_chiA(from_partition(R, N)) == oracle_chiA(R, N));
                    ++checked;
                }
        CHECK(checked == 125);
    }
}

TEST_CASE("second-power brute-force oracle") {
    SUBCASE("symbolic forms") {
        LaurentPoly one;
        one.add(0, 1);
        CHECK(oracle_chiA2_symbolic({}) == one);

        LaurentPoly defining;
        defining.add(1, 1);
        CHECK(oracle_chiA2_symbolic({1}) == defining);

        LaurentPoly two;  // 1/2 N^2 + N + 1 + 1/2 N^-1
        two.add(2, frac(1, 2));
        two.add(1, 1);
        two.add(0, 1);
        two.add(-1, frac(1, 2));
        CHECK(oracle_chiA2_symbolic({2}) == two);

        LaurentPoly onone;  // 1/2 N^2 - N + 1 - 1/2 N^-1
        onone.add(2, frac(1, 2));
        onone.add(1, -1);
        onone.add(0, 1);
        onone.add(-1, frac(-1, 2));
        CHECK(oracle_chiA2_symbolic({1, 1}) == onone);

        // (chi_2 + chi_11)(A^2) = (Tr A^2)^2 and the difference is Tr A^4,
        // whose Gaussian averages are N^2 + 2 and 2N + 1/N.
        LaurentPoly sq;
        sq.add(2, 1);
        sq.add(0, 2);
        CHECK(oracle_chiA2_symbolic({2}) + oracle_chiA2_symbolic({1, 1}) == sq);
        LaurentPoly quart;
        quart.add(1, 2);
        quart.add(-1, 1);
        CHECK(oracle_chiA2_symbolic({2}) - oracle_chiA2_symbolic({1, 1}) == quart);

        LaurentPoly twoone;  // 1/3 N^3 + 1/3 N - 2/3 N^-1
        twoone.add(3, frac(1, 3));
        twoone.add(1, frac(1, 3));
        twoone.add(-1, frac(-2, 3));
        CHECK(oracle_chiA2_symbolic({2, 1}) == twoone);
    }

    SUBCASE("numeric anchors") {
        CHECK(oracle_chiA2({}, 7) == 1);
        CHECK(oracle_chiA2({1}, 4) == 4);
        CHECK(oracle_chiA2({2}, 2) == frac(21, 4));
        CHECK(oracle_chiA2({1, 1}, 2) == frac(3, 4));
        CHECK(oracle_chiA2({3}, 2) == 18);
        CHECK(oracle_chiA2({1, 1, 1}, 2) == 0);  // more rows than N
    }

    SUBCASE("size guard") {
        CHECK_THROWS_AS(oracle_chiA2_symbolic({4, 3}), std::invalid_argument);
    }

    SUBCASE("square decomposition identity") {
        // chi_R(A^2) = chi_{Sym^2 R}(A) - chi_{Alt^2 R}(A); for R = (1) the
        // two halves are (2) and (1,1), for R = (2) they decompose as
        // (4) + (2,2) and (3,1).
        for (int N = 2; N <= 4; ++N) {
            CHECK(oracle_chiA({2}, N) - oracle_chiA({1, 1}, N) == oracle_chiA2({1}, N));
            CHECK(oracle_chiA({4}, N) + oracle_chiA({2, 2}, N) - oracle_chiA({3, 1}, N) ==
                  oracle_chiA2({2}, N));
        }
    }
}

TEST_CASE("pfaffian route for the second power") {
    SUBCASE("calibration scalar is one") {
        for (int N : {2, 4, 6}) CHECK(pfaffian_calibration(N) == 1);
    }

    SUBCASE("matches the oracle for every small representation") {
        for (int N : {2, 4})
            for (int n = 0; n <= 4; ++n)
                for (const Partition& R : partitions_of(n)) {
                    if (static_cast<int>(R.size()) > N) continue;
                    CHECK(chiA2_pfaffian(from_partition(R, N)) == oracle_chiA2(R, N));
                }
        CHECK(chiA2_pfaffian(from_partition({2}, 2)) == frac(21, 4));
        CHECK(chiA2_pfaffian(from_partition({1, 1}, 2)) == frac(3, 4));
    }

    SUBCASE("odd N rejected") {
        CHECK_THROWS_AS(chiA2_pfaffian_raw(from_partition({1}, 3)), std::invalid_argument);
    }
}

TEST_CASE("large-N closed form") {
    SUBCASE("defining representation is exact") {
        for (int N = 2; N <= 12; ++N) CHECK(chiA2_largeN({1}, N) == N);
    }

    SUBCASE("anchor and frozen deviations") {
        CHECK(chiA2_largeN({2}, 2) == frac(9, 2));
        const double d10 =
            std::fabs(to_double(chiA2_largeN({2}, 10) / oracle_chiA2({2}, 10)) - 1.0);
        const double d60 =
            std::fabs(to_double(chiA2_largeN({2}, 60) / oracle_chiA2({2}, 60)) - 1.0);
        CHECK(d10 == doctest::Approx(9.009009e-3).epsilon(1e-6));
        CHECK(d60 == doctest::Approx(2.731494e-4).epsilon(1e-6));
    }

    SUBCASE("quadratic decay of the relative error") {
        CHECK(fitted_decay_exponent({2}) > 1.9);
        CHECK(fitted_decay_exponent({1, 1}) > 1.9);
        CHECK(fitted_decay_exponent({2, 1}) > 1.9);
    }
}

TEST_CASE("saddle-point route") {
    SUBCASE("stays a fixed distance from the exact value") {
        for (int rep = 0; rep < 3; ++rep) {
            double first = 0, last = 0;
            for (int N : {4, 6, 10, 14, 20, 30}) {
                Partition lam;
                if (rep == 1) lam = {1};
                if (rep == 2) lam = Partition(static_cast<size_t>(N), 1);
                const ShiftedWeights h = from_partition(lam, N);
                const double dev =
                    std::fabs(chiA2_saddle(h, 0.0) / to_double(chiA2_pfaffian(h)) - 1.0);
                CHECK(dev > 1.0);
                if (N == 4) first = dev;
                if (N == 30) last = dev;
            }
            CHECK(last > first);
        }
    }

    SUBCASE("frozen value and damping continuity") {
        const ShiftedWeights h = from_partition({}, 4);
        CHECK(chiA2_saddle(h, 0.0) == doctest::Approx(13.8876).epsilon(1e-4));
        const ShiftedWeights h6 = from_partition({}, 6);
        const double undamped = chiA2_saddle(h6, 0.0);
        CHECK(std::fabs(chiA2_saddle(h6, 0.01) / undamped - 1.0) < 0.02);
    }

    SUBCASE("preconditions") {
        CHECK_THROWS_AS(chiA2_saddle(from_partition({1}, 3), 0.0), std::invalid_argument);
        // coincident weights cannot even be constructed
        CHECK_THROWS_AS(ShiftedWeights({3, 3, 1, 0}), std::invalid_argument);
    }
}

TEST_CASE("determinant power averages") {
    SUBCASE("formula values") {
        CHECK(det_power_average(2, 0) == 1);
        CHECK(det_power_average(6, 0) == 1);
        CHECK(det_power_average(2, 1) == frac(3, 4));
        CHECK(det_power_average(2, 2) == frac(45, 16));
        CHECK(det_power_average(4, 1) == frac(45, 256));
        CHECK_THROWS_AS(det_power_average(3, 1), std::invalid_argument);
        CHECK_THROWS_AS(det_power_average(2, -1), std::invalid_argument);
    }

    SUBCASE("agrees with the oracle on rectangular representations") {
        CHECK(det_power_average(2, 1) == oracle_chiA2({1, 1}, 2));
        CHECK(det_power_average(2, 2) == oracle_chiA2({2, 2}, 2));
        CHECK(det_power_average(4, 1) == oracle_chiA2({1, 1, 1, 1}, 4));
    }
}

TEST_CASE("proportionality-constant refutation") {
    CHECK(conjecture_kN(from_partition({}, 4)) == frac(1, 768));
    CHECK(conjecture_kN(from_partition({1}, 4)) == frac(1, 6144));

    const BigRational q1 = conjecture_kN(det_rep(4, 1));
    const BigRational q2 = conjecture_kN(det_rep(4, 2));
    CHECK(q1 == frac(5, 32768));
    CHECK(q2 == frac(175, 4194304));
    CHECK(q1 != q2);

    // odd N goes through the brute-force oracle
    CHECK(conjecture_kN(from_partition({}, 3)) == frac(1, 16));
}

TEST_CASE("trace property of the hypothetical average matrix") {
    CHECK(traceM_property(2, 2) == frac(3, 2));
    for (long N : {4L, 10L, 50L}) CHECK(traceM_property(2, N) == frac(N + 1, N));

    // (1/N) Tr(M^4) = 4 - 1/N^2 approaches 2^2 from below
    for (long N : {10L, 100L, 400L})
        CHECK(traceM_property(4, N) == 4 - rat_pow(BigRational(N), -2));
    CHECK(to_double(traceM_property(6, 400)) == doctest::Approx(26.9325).epsilon(1e-4));

    CHECK_THROWS_AS(traceM_property(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(traceM_property(2, 5), std::invalid_argument);
}

TEST_CASE("average dispatcher") {
    const ShiftedWeights h = from_partition({2}, 2);
    CHECK(average_chi(h, 1, "oracle").value == frac(3, 2));
    CHECK(average_chi(h, 1, "dfi").value == frac(3, 2));
    CHECK(average_chi(h, 2, "oracle").value == frac(21, 4));
    CHECK(average_chi(h, 2, "pfaffian").value == frac(21, 4));
    CHECK(average_chi(h, 2, "large-n").value == frac(9, 2));

    const AverageResult sad = average_chi(from_partition({}, 4), 2, "saddle");
    CHECK_FALSE(sad.exact);
    CHECK(sad.value_float == doctest::Approx(13.8876).epsilon(1e-4));

    CHECK(average_chi(h, 2, "oracle").n == 2);
    CHECK(average_chi(h, 2, "oracle").N == 2);
    CHECK_THROWS_AS(average_chi(h, 1, "pfaffian"), std::invalid_argument);
    CHECK_THROWS_AS(average_chi(h, 2, "dfi"), std::invalid_argument);
    CHECK_THROWS_AS(average_chi(h, 3, "oracle"), std::invalid_argument);
}
