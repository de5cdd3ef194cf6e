#include "keller/poly_map.hpp"

#include "keller/corpus.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace keller;
using namespace keller::testing;

TEST_CASE("jacobian entries are the component partials") {
    const PolyMatrix j = jacobian(example_a());
    CHECK(j.at(0, 0) == P("1", xy()));
    CHECK(j.at(0, 1) == P("2*y", xy()));
    CHECK(j.at(1, 0) == Polynomial(2));
    CHECK(j.at(1, 1) == P("1", xy()));

    CHECK(jacobian(PolyMap::identity(3)) == PolyMatrix::identity(3, 3));

    const PolyMatrix jk = jacobian(non_keller());
    CHECK(jk.at(0, 0) == P("1", xy()));
    CHECK(jk.at(0, 1) == Polynomial(2));
    CHECK(jk.at(1, 0) == P("y", xy()));
    CHECK(jk.at(1, 1) == P("x", xy()));
}

TEST_CASE("keller gate returns the constant or throws with the determinant") {
    CHECK(keller_check(example_a()) == Rational(1));
    CHECK(keller_check(affine_scaled()) == Rational(10));
    try {
        keller_check(non_keller());
        FAIL("expected KellerViolationError");
    } catch (const KellerViolationError& e) {
        CHECK(e.det() == P("x", xy()));
    }
    // zero determinant is also a violation
    try {
        keller_check(M({"x", "x"}, xy()));
        FAIL("expected KellerViolationError");
    } catch (const KellerViolationError& e) {
        CHECK(e.det().is_zero());
    }
}

TEST_CASE("frame construction matches hand calculations") {
    const NambuFrame fa = nambu_frame(example_a());
    CHECK(fa.det_constant() == Rational(1));
    CHECK(fa.scaled_matrix().at(0, 0) == P("1", xy()));
    CHECK(fa.scaled_matrix().at(0, 1) == Polynomial(2));
    CHECK(fa.scaled_matrix().at(1, 0) == P("-2*y", xy()));
    CHECK(fa.scaled_matrix().at(1, 1) == P("1", xy()));

    const NambuFrame fi = nambu_frame(PolyMap::identity(2));
    CHECK(fi.det_constant() == Rational(1));
    CHECK(fi.scaled_matrix() == PolyMatrix::identity(2, 2));

    const NambuFrame fs = nambu_frame(affine_scaled());
    CHECK(fs.det_constant() == Rational(10));
    CHECK(fs.scaled_matrix().at(0, 0) == P("5", xy()));
    CHECK(fs.scaled_matrix().at(1, 1) == P("2", xy()));
    CHECK(fs.scaled_matrix().at(0, 1) == Polynomial(2));
    CHECK(fs.scaled_matrix().at(1, 0) == Polynomial(2));

    CHECK_THROWS_AS(nambu_frame(non_keller()), KellerViolationError);
}

TEST_CASE("derivation application") {
    const NambuFrame f = nambu_frame(example_a());
    CHECK(nambu_apply(f, 1, P("x", xy())) == P("-2*y", xy()));
    CHECK(nambu_apply(f, 0, Polynomial::constant(2, Rational(9))) == Polynomial(2));
    CHECK(nambu_apply(f, 1, P("-2*y", xy())) == P("-2", xy()));
    // the scaled affine frame divides by the constant
    const NambuFrame fs = nambu_frame(affine_scaled());
    CHECK(nambu_apply(fs, 0, P("x", xy())) == P("1/2", xy()));
    CHECK(nambu_apply(fs, 1, P("y", xy())) == P("1/5", xy()));
    CHECK_THROWS_AS(nambu_apply(f, 2, P("x", xy())), std::out_of_range);
}

TEST_CASE("composition") {
    const PolyMap g = M({"y1 - y2^2", "y2"}, {"y1", "y2"});
    CHECK(compose_maps(example_a(), g) == PolyMap::identity(2));
    CHECK(compose_maps(example_a(), PolyMap::identity(2)) == example_a());
    CHECK(compose_maps(PolyMap::identity(2), example_a()) == example_a());
    CHECK_THROWS_AS(compose_maps(example_a(), PolyMap::identity(3)), std::invalid_argument);
}

TEST_CASE("map degree floors at one and rejects constant maps") {
    CHECK(map_degree(example_a()) == 2);
    CHECK(map_degree(affine_scaled()) == 1);
    CHECK(map_degree(nagata()) == 5);
    CHECK_THROWS_AS(map_degree(M({"3", "1/2"}, xy())), std::invalid_argument);
}

TEST_CASE("poly map construction validates shape") {
    CHECK_THROWS_AS(PolyMap(std::vector<Polynomial>{}), std::invalid_argument);
    CHECK_THROWS_AS(PolyMap(std::vector<Polynomial>{Polynomial(2)}), std::invalid_argument);
    CHECK(example_a().value_at_origin() == std::vector<Rational>{Rational(0), Rational(0)});
    CHECK(affine_scaled().value_at_origin() == std::vector<Rational>{Rational(3), Rational(0)});
}

TEST_CASE("kronecker property: the frame derivations are dual to the components") {
    std::vector<PolyMap> maps = gen_triangular_corpus(101, 2, 2, 2, 3);
    for (auto& m : gen_triangular_corpus(102, 3, 3, 2, 3)) maps.push_back(m);
    maps.push_back(example_a());
    maps.push_back(affine_scaled());
    maps.push_back(nagata());
    maps.push_back(PolyMap::identity(3));
    for (const auto& f : maps) {
        const NambuFrame frame = nambu_frame(f);
        for (std::size_t i = 0; i < f.nvars(); ++i)
            for (std::size_t j = 0; j < f.nvars(); ++j) {
                const Polynomial d = nambu_apply(frame, i, f.component(j));
                if (i == j)
                    CHECK(d == Polynomial::constant(f.nvars(), Rational(1)));
                else
                    CHECK(d.is_zero());
            }
    }
}

TEST_CASE("frame derivations commute on random polynomials") {
    std::mt19937_64 rng(31);
    std::vector<PolyMap> maps = gen_triangular_corpus(103, 2, 3, 2, 2);
    for (auto& m : gen_triangular_corpus(104, 3, 2, 3, 2)) maps.push_back(m);
    maps.push_back(example_a());
    maps.push_back(nagata());
    for (const auto& f : maps) {
        const NambuFrame frame = nambu_frame(f);
        for (int trial = 0; trial < 4; ++trial) {
            const Polynomial p = random_poly(rng, f.nvars(), 4);
            for (std::size_t i = 0; i < f.nvars(); ++i)
                for (std::size_t j = i + 1; j < f.nvars(); ++j) {
                    CHECK(nambu_apply(frame, i, nambu_apply(frame, j, p)) ==
                          nambu_apply(frame, j, nambu_apply(frame, i, p)));
                }
        }
    }
}

TEST_CASE("frame identity scaled^T J == det I") {
    std::vector<PolyMap> maps = gen_triangular_corpus(105, 3, 3, 3, 3);
    maps.push_back(example_a());
    maps.push_back(affine_scaled());
    maps.push_back(nagata());
    for (const auto& f : maps) {
        const NambuFrame frame = nambu_frame(f);
        const std::size_t n = f.nvars();
        PolyMatrix expected(n, n, n);
        for (std::size_t i = 0; i < n; ++i)
            expected.set(i, i, Polynomial::constant(n, frame.det_constant()));
        CHECK(frame.scaled_matrix().transposed() * jacobian(f) == expected);
    }
}
