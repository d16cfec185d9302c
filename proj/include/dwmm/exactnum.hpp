#pragma once

#include <vector>

#include "dwmm/bigint.hpp"

namespace dwmm {

// k! for k >= 0.
BigInt factorial(long k);

// k!! with the conventions (-1)!! = 0!! = 1; k < -1 is rejected.
BigInt double_factorial(long k);

// prod_{i<j} (v[j] - v[i]); empty and singleton sequences give 1.
BigRational vandermonde(const std::vector<BigRational>& v);
BigInt vandermonde(const std::vector<BigInt>& v);

// Dense antisymmetric matrix of even dimension. Only the strict upper
// triangle is stored; (i,j) reads apply the sign, diagonal reads give 0.
class AntisymmetricMatrix {
  public:
    explicit AntisymmetricMatrix(int dim);

    int dim() const { return dim_; }
    BigRational get(int i, int j) const;
    // Sets entry (i,j) with i < j; (j,i) is implied.
    void set_upper(int i, int j, const BigRational& v);

  private:
    int dim_;
    std::vector<BigRational> upper_;  // row-major strict upper triangle
};

// Pfaffian of an antisymmetric matrix of even dimension (dim 0 gives 1).
// Cofactor expansion along the first row up to dim 8, exact skew-symmetric
// elimination above.
BigRational pfaffian(const AntisymmetricMatrix& m);

}  // namespace dwmm
