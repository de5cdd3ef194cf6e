#include "keller/poly_matrix.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace keller;
using keller::testing::P;
using keller::testing::random_poly;
using keller::testing::xy;

namespace {

// independent oracle: cofactor expansion along the first row
Polynomial naive_det(const PolyMatrix& m) {
    const std::size_t n = m.nrows();
    if (n == 1) return m.at(0, 0);
    Polynomial acc(m.nvars());
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix sub(n - 1, n - 1, m.nvars());
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t sc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.set(r - 1, sc, m.at(r, c));
                ++sc;
            }
        }
        Polynomial cof = m.at(0, j) * naive_det(sub);
        acc = j % 2 == 0 ? acc + cof : acc - cof;
    }
    return acc;
}

PolyMatrix from_exprs(std::size_t n, const std::vector<std::string>& exprs,
                      const std::vector<std::string>& vars) {
    PolyMatrix m(n, n, vars.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, P(exprs[i * n + j], vars));
    return m;
}

}  // namespace

TEST_CASE("determinant by hand-checked examples") {
    CHECK(determinant(from_exprs(2, {"1", "2*y", "0", "1"}, xy())) == P("1", xy()));
    CHECK(determinant(PolyMatrix::identity(3, 2)) == P("1", xy()));
    CHECK(determinant(from_exprs(2, {"1", "0", "y", "x"}, xy())) == P("x", xy()));
    CHECK_THROWS_AS(determinant(PolyMatrix(2, 3, 2)), std::invalid_argument);
}

TEST_CASE("determinant handles zero pivots and singular matrices") {
    // leading pivot zero forces a row swap
    CHECK(determinant(from_exprs(2, {"0", "1", "x", "0"}, xy())) == P("-x", xy()));
    // equal rows, singular
    CHECK(determinant(from_exprs(2, {"x + y", "y", "x + y", "y"}, xy())).is_zero());
    CHECK(determinant(from_exprs(3,
                                 {"0", "0", "1", "0", "x", "0", "1", "0", "0"}, xy())) ==
          P("-x", xy()));
}

TEST_CASE("adjugate by hand-checked examples") {
    CHECK(adjugate(from_exprs(2, {"1", "2*y", "0", "1"}, xy())) ==
          from_exprs(2, {"1", "-2*y", "0", "1"}, xy()));
    CHECK(adjugate(PolyMatrix::identity(3, 2)) == PolyMatrix::identity(3, 2));
    CHECK(adjugate(from_exprs(2, {"3", "0", "0", "7"}, xy())) ==
          from_exprs(2, {"7", "0", "0", "3"}, xy()));
    CHECK_THROWS_AS(adjugate(PolyMatrix(2, 3, 2)), std::invalid_argument);
    // 1x1 adjugate is the empty-minor convention
    PolyMatrix one(1, 1, 1);
    one.set(0, 0, Polynomial::variable(1, 0));
    CHECK(adjugate(one).at(0, 0) == Polynomial::constant(1, Rational(1)));
}

TEST_CASE("fraction-free determinant agrees with cofactor expansion up to 4x4") {
    std::mt19937_64 rng(19);
    for (std::size_t n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            PolyMatrix m(n, n, 2);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.set(i, j, random_poly(rng, 2, 2, 2));
            CHECK(determinant(m) == naive_det(m));
        }
    }
}

TEST_CASE("adjugate identity adj(M) * M == det(M) * I") {
    std::mt19937_64 rng(23);
    for (std::size_t n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 6; ++trial) {
            PolyMatrix m(n, n, 2);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.set(i, j, random_poly(rng, 2, 2, 2));
            const Polynomial det = determinant(m);
            const PolyMatrix prod = adjugate(m) * m;
            PolyMatrix expected(n, n, 2);
            for (std::size_t i = 0; i < n; ++i) expected.set(i, i, det);
            CHECK(prod == expected);
            CHECK(m * adjugate(m) == expected);
        }
    }
}
