#include "keller/corpus.hpp"

#include <random>
#include <stdexcept>

namespace keller {

namespace {

// std::uniform_int_distribution is implementation-defined; plain modulo
// reduction keeps the stream reproducible across standard libraries.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }

Rational random_coeff(std::mt19937_64& rng) {
    static const long nums[] = {-2, -1, 1, 2};
    long num = nums[rand_below(rng, 4)];
    long den = rand_below(rng, 6) == 0 ? 2 : 1;  // occasional half-integer
    return Rational(num, den);
}

// nonzero polynomial in the variables other than `skip`, total degree in [1, deg]
Polynomial random_omitting_poly(std::mt19937_64& rng, std::size_t n, std::uint32_t deg,
                                std::size_t skip) {
    while (true) {
        Polynomial p(n);
        const std::size_t nterms = 1 + rand_below(rng, 2);
        for (std::size_t t = 0; t < nterms; ++t) {
            const std::uint32_t total = 1 + static_cast<std::uint32_t>(rand_below(rng, deg));
            std::vector<std::uint32_t> exps(n, 0);
            for (std::uint32_t u = 0; u < total; ++u) {
                std::size_t var = rand_below(rng, n - 1);
                if (var >= skip) ++var;
                ++exps[var];
            }
            p += Polynomial::from_monomial(Monomial(std::move(exps)), random_coeff(rng));
        }
        if (!p.is_zero()) return p;
    }
}

PolyMap elementary_layer(std::mt19937_64& rng, std::size_t n, std::uint32_t deg) {
    const std::size_t target = rand_below(rng, n);
    std::vector<Polynomial> comps;
    comps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) comps.push_back(Polynomial::variable(n, i));
    comps[target] += random_omitting_poly(rng, n, deg, target);
    return PolyMap(std::move(comps));
}

// a product of unit shears, occasionally rescaling one coordinate
PolyMap linear_mix(std::mt19937_64& rng, std::size_t n) {
    std::vector<Polynomial> comps;
    comps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) comps.push_back(Polynomial::variable(n, i));
    const std::size_t shears = 1 + rand_below(rng, 2);
    for (std::size_t s = 0; s < shears; ++s) {
        const std::size_t row = rand_below(rng, n);
        std::size_t other = rand_below(rng, n - 1);
        if (other >= row) ++other;
        static const long mults[] = {-2, -1, 1, 2};
        comps[row] += Rational(mults[rand_below(rng, 4)]) * Polynomial::variable(n, other);
    }
    if (rand_below(rng, 4) == 0) {
        const std::size_t row = rand_below(rng, n);
        comps[row] = Rational(rand_below(rng, 2) == 0 ? 2 : 1, 2) * comps[row];
    }
    return PolyMap(std::move(comps));
}

}  // namespace

std::vector<PolyMap> gen_triangular_corpus(std::uint64_t seed, std::size_t n, std::uint32_t deg,
                                           std::uint32_t layers, std::size_t count) {
    if (n < 2) throw std::invalid_argument("gen_triangular_corpus: need at least two variables");
    if (deg < 2) throw std::invalid_argument("gen_triangular_corpus: need degree at least two");
    if (layers < 1) throw std::invalid_argument("gen_triangular_corpus: need at least one layer");
    if (count < 1) throw std::invalid_argument("gen_triangular_corpus: need a positive count");

    std::mt19937_64 rng(seed);
    std::vector<PolyMap> maps;
    maps.reserve(count);
    for (std::size_t m = 0; m < count; ++m) {
        PolyMap f = elementary_layer(rng, n, deg);
        for (std::uint32_t layer = 1; layer < layers; ++layer) {
            // mixes sit strictly between elementary layers so that a
            // single-layer corpus stays elementary
            if (rand_below(rng, 2) == 0) f = compose_maps(linear_mix(rng, n), f);
            f = compose_maps(elementary_layer(rng, n, deg), f);
        }
        maps.push_back(std::move(f));
    }
    return maps;
}

}  // namespace keller
