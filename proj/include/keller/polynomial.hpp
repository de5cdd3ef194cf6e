#pragma once

#include "keller/monomial.hpp"
#include "keller/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace keller {

struct Term {
    Monomial mono;
    Rational coeff;
    bool operator==(const Term&) const = default;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in the canonical degree-graded order (see canonical_cmp)
// and no stored coefficient is zero, so operator== is both structural and
// semantic. Values are immutable once built; every operation returns a
// new value.
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, Rational c);
    static Polynomial variable(std::size_t nvars, std::size_t var);
    static Polynomial from_monomial(Monomial m, Rational c);
    // Sorts, merges duplicate monomials and drops zero coefficients.
    static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const;
    Rational constant_term() const { return coeff(Monomial(nvars_)); }
    // Last term in canonical order: maximal degree, used for division.
    const Term& leading_term() const;

    // Max total degree of stored monomials; nullopt for the zero polynomial
    // (the minus-infinity sentinel -- never -1 or 0).
    std::optional<std::uint32_t> degree() const;
    bool is_constant() const { return terms_.size() <= 1 && (terms_.empty() || terms_[0].mono.is_unit()); }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }
    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);

    bool operator==(const Polynomial&) const = default;

    // Prints with generated names x1..xn; the canonical named form is
    // to_string below.
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
    std::size_t nvars_;
    std::vector<Term> terms_;
};

Polynomial partial_derivative(const Polynomial& p, std::size_t var);
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

// p with variable j replaced by images[j]; the result lives in the
// images' common variable count, which may differ from p.nvars().
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);
// Same, but discards every term of total degree > max_degree as soon as
// it appears, keeping intermediates bounded.
Polynomial substitute_truncated(const Polynomial& p, std::span<const Polynomial> images,
                                std::uint32_t max_degree);

Polynomial truncate_above(const Polynomial& p, std::uint32_t max_degree);
Polynomial pow(const Polynomial& p, std::uint32_t k);

// Exact quotient p / q; throws std::domain_error when q does not divide p.
Polynomial divide_exact(const Polynomial& p, const Polynomial& q);

// Canonical rendering: terms in canonical order, lowest-term
// coefficients, '-' folded into the joining sign, explicit '*'.
std::string to_string(const Polynomial& p, std::span<const std::string> var_names);

}  // namespace keller
