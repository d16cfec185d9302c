#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dwmm/bigint.hpp"

namespace dwmm {

// Permutation of {1..n} in one-line notation: image(i) = img_[i-1].
// Composition is right-to-left: (a*b)(x) = a(b(x)).
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(int n);                    // identity on {1..n}
    explicit Permutation(std::vector<int> images);  // validates bijection

    int degree() const { return static_cast<int>(img_.size()); }
    int of(int x) const { return img_[static_cast<size_t>(x - 1)]; }

    Permutation inverse() const;
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    // Cycle decomposition, fixed points omitted; each cycle starts at its
    // smallest element, cycles ordered by that element.
    std::vector<std::vector<int>> cycles() const;
    int cycle_count() const;              // counts fixed points too
    std::vector<int> cycle_type() const;  // partition of n, descending

    // "(1 5)(2 17)" style; identity prints "()". parse accepts spaces or
    // commas inside cycles; degree defaults to the largest mentioned point.
    std::string to_cycle_string() const;
    static Permutation parse_cycles(const std::string& text, int degree = 0);

  private:
    std::vector<int> img_;
};

// All permutations of S_n with the given cycle type (a partition of n,
// any order). Enumeration is duplicate-free.
std::vector<Permutation> class_elements(int n, const std::vector<int>& type);

// n! / prod_k (k^{c_k} c_k!), the conjugacy class size.
BigInt class_size(int n, const std::vector<int>& type);

// Cycle type [2^(n/2)] of fixed-point-free involutions in S_n (n even).
std::vector<int> pairing_type(int n);

}  // namespace dwmm
