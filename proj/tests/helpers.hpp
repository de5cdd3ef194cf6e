#pragma once

#include "keller/parse.hpp"
#include "keller/poly_map.hpp"

#include <random>
#include <string>
#include <vector>

namespace keller::testing {

inline std::vector<std::string> xy() { return {"x", "y"}; }
inline std::vector<std::string> xyz() { return {"x", "y", "z"}; }

inline Polynomial P(const std::string& expr, const std::vector<std::string>& vars) {
    return parse_poly(expr, vars);
}

inline PolyMap M(const std::vector<std::string>& exprs, const std::vector<std::string>& vars) {
    std::vector<Polynomial> comps;
    comps.reserve(exprs.size());
    for (const auto& e : exprs) comps.push_back(parse_poly(e, vars));
    return PolyMap(std::move(comps));
}

// F = (x + y^2, y), inverse (y1 - y2^2, y2)
inline PolyMap example_a() { return M({"x + y^2", "y"}, xy()); }

// F = (2x + 3, 5y), inverse (1/2 y1 - 3/2, 1/5 y2)
inline PolyMap affine_scaled() { return M({"2*x + 3", "5*y"}, xy()); }

// det(J) = x, outside the constant-Jacobian hypothesis
inline PolyMap non_keller() { return M({"x", "x*y"}, xy()); }

inline PolyMap nagata() {
    return M({"x - 2*y*(x*z + y^2) - z*(x*z + y^2)^2", "y + z*(x*z + y^2)", "z"}, xyz());
}

inline PolyMap nagata_inverse() {
    return M({"y1 + 2*y2*(y1*y3 + y2^2) - y3*(y1*y3 + y2^2)^2", "y2 - y3*(y1*y3 + y2^2)", "y3"},
             {"y1", "y2", "y3"});
}

// small random polynomial for property tests; deterministic per rng state
inline Polynomial random_poly(std::mt19937_64& rng, std::size_t nvars, std::uint32_t max_degree,
                              std::size_t max_terms = 4) {
    std::vector<Term> terms;
    const std::size_t nterms = 1 + rng() % max_terms;
    for (std::size_t t = 0; t < nterms; ++t) {
        std::vector<std::uint32_t> exps(nvars, 0);
        const std::uint32_t total = rng() % (max_degree + 1);
        for (std::uint32_t u = 0; u < total; ++u) ++exps[rng() % nvars];
        const long num = static_cast<long>(rng() % 9) - 4;
        const long den = 1 + static_cast<long>(rng() % 3);
        if (num == 0) continue;
        terms.push_back(Term{Monomial(std::move(exps)), Rational(num, den)});
    }
    return Polynomial::from_terms(nvars, std::move(terms));
}

}  // namespace keller::testing
