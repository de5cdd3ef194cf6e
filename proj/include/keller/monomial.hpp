#pragma once

#include <cstdint>
#include <vector>

namespace keller {

// A power product, stored as one exponent per ambient variable. The
// exponent vector length is the variable count and never changes.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t operator[](std::size_t var) const { return e_[var]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    std::uint32_t total_degree() const;
    bool is_unit() const { return total_degree() == 0; }

    // exponentwise sum (product of the power products)
    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const;

    // this monomial with the exponent of `var` bumped by one
    Monomial raised(std::size_t var) const;

    // 1-based position of the last variable with nonzero exponent; 0 when unit
    std::size_t last_active_var() const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<std::uint32_t> e_;
};

// Graded lexicographic comparison under the declared variable order:
// total degree first, ties broken by the first differing exponent
// (larger exponent on an earlier variable wins). Returns -1, 0 or 1.
int grlex_cmp(const Monomial& a, const Monomial& b);

// Canonical term order for iteration and printing: ascending total
// degree, and inside one degree level the lex-larger monomial (earlier
// variable, higher exponent) comes first. A multiplicative total order,
// so leading terms are still well behaved under products. Returns -1
// when a precedes b.
int canonical_cmp(const Monomial& a, const Monomial& b);

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) < 0; }
};

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

struct CanonicalTermLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return canonical_cmp(a, b) < 0; }
};

}  // namespace keller
