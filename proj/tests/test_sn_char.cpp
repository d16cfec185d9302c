#include <map>
#include <vector>

#include "doctest.h"
#include "dwmm/exactnum.hpp"
#include "dwmm/permutation.hpp"
#include "dwmm/sn_char.hpp"

using namespace dwmm;

TEST_CASE("partition enumeration counts") {
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n)
        CHECK(partitions_of(n).size() == static_cast<size_t>(counts[n]));
    CHECK(parse_partition("3,1,1") == Partition{3, 1, 1});
    CHECK(partition_to_string(Partition{3, 1, 1}) == "3,1,1");
    CHECK_THROWS(parse_partition("1,3"));
}

TEST_CASE("hook length dimensions") {
    CHECK(sn_dimension({7}) == 1);
    CHECK(sn_dimension({1, 1, 1, 1}) == 1);
    CHECK(sn_dimension({2, 1}) == 2);
    CHECK(sn_dimension({3, 2}) == 5);
    CHECK(sn_dimension({4, 2, 1}) == 35);
    // sum of squared dimensions is n!
    for (int n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (const auto& r : partitions_of(n)) {
            BigInt d = sn_dimension(r);
            total += d * d;
        }
        CHECK(total == factorial(n));
    }
}

namespace {

// Character of the 2-dimensional standard representation of S3, computed
// from permutation matrices: fixed points minus one.
long std3_char(const Permutation& p) {
    long fixed = 0;
    for (int x = 1; x <= 3; ++x)
        if (p.of(x) == x) ++fixed;
    return fixed - 1;
}

}  // namespace

TEST_CASE("character values against direct representations") {
    CHECK(sn_character({1, 1}, {2}) == -1);
    CHECK(sn_character({2}, {1, 1}) == 1);
    CHECK(sn_character({2, 1}, {3}) == -1);
    for (const auto& type : partitions_of(3)) {
        auto reps = class_elements(3, type);
        CHECK(sn_character({2, 1}, type) == std3_char(reps.front()));
    }
    CHECK_THROWS(sn_character({2, 1}, {2}));
}

TEST_CASE("characters at the identity give dimensions") {
    for (int n = 1; n <= 8; ++n) {
        Partition ones(static_cast<size_t>(n), 1);
        for (const auto& r : partitions_of(n)) CHECK(sn_character(r, ones) == sn_dimension(r));
    }
}

TEST_CASE("column orthogonality") {
    for (int n = 2; n <= 6; ++n) {
        auto types = partitions_of(n);
        for (size_t a = 0; a < types.size(); ++a)
            for (size_t b = a; b < types.size(); ++b) {
                BigInt sum = 0;
                for (const auto& r : partitions_of(n))
                    sum += sn_character(r, types[a]) * sn_character(r, types[b]);
                if (a == b)
                    CHECK(sum * class_size(n, types[a]) == factorial(n));
                else
                    CHECK(sum == 0);
            }
    }
}

TEST_CASE("sign representation on general classes") {
    // chi_sign of a class is (-1)^{n - #cycles}
    for (int n = 2; n <= 7; ++n) {
        Partition sign_shape(static_cast<size_t>(n), 1);
        for (const auto& type : partitions_of(n)) {
            int transpositions = 0;
            for (int part : type) transpositions += part - 1;
            CHECK(sn_character(sign_shape, type) == (transpositions % 2 == 0 ? 1 : -1));
        }
    }
}
