#pragma once

#include "keller/polynomial.hpp"

#include <vector>

namespace keller {

// Dense matrix of polynomials over a shared variable set, row-major.
class PolyMatrix {
public:
    PolyMatrix(std::size_t nrows, std::size_t ncols, std::size_t nvars);
    static PolyMatrix identity(std::size_t n, std::size_t nvars);

    std::size_t nrows() const { return nrows_; }
    std::size_t ncols() const { return ncols_; }
    std::size_t nvars() const { return nvars_; }
    bool is_square() const { return nrows_ == ncols_; }

    const Polynomial& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, Polynomial p);

    PolyMatrix transposed() const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const Rational& c, const PolyMatrix& m);

    bool operator==(const PolyMatrix&) const = default;

private:
    std::size_t nrows_, ncols_, nvars_;
    std::vector<Polynomial> entries_;
};

// Exact determinant by fraction-free (Bareiss) elimination over the
// polynomial ring; every interior division is exact.
Polynomial determinant(const PolyMatrix& m);

// Transpose of the cofactor matrix: adjugate(m) * m == determinant(m) * I.
PolyMatrix adjugate(const PolyMatrix& m);

}  // namespace keller
