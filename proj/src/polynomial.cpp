#include "keller/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace keller {

namespace {

void check_same_arity(const Polynomial& p, const Polynomial& q, const char* op) {
    if (p.nvars() != q.nvars())
        throw std::invalid_argument(std::string(op) + ": variable count mismatch");
}

// sort into canonical order, merge equal monomials, drop zeros
std::vector<Term> normalize_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return canonical_cmp(a.mono, b.mono) < 0; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    return out;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, Rational c) {
    return from_monomial(Monomial(nvars), std::move(c));
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var) {
    if (var >= nvars) throw std::out_of_range("Polynomial::variable: index out of range");
    return from_monomial(Monomial(nvars).raised(var), Rational(1));
}

Polynomial Polynomial::from_monomial(Monomial m, Rational c) {
    Polynomial p(m.nvars());
    if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.mono.nvars() != nvars)
            throw std::invalid_argument("Polynomial::from_terms: monomial arity mismatch");
    Polynomial p(nvars);
    p.terms_ = normalize_terms(std::move(terms));
    return p;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
        return canonical_cmp(t.mono, key) < 0;
    });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Rational(0);
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading term");
    return terms_.back();
}

std::optional<std::uint32_t> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    // degree-graded order: the last term carries the total degree
    return terms_.back().mono.total_degree();
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, -t.coeff});
    return r;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    check_same_arity(p, q, "poly_add");
    Polynomial r(p.nvars());
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < p.terms_.size() && j < q.terms_.size()) {
        const int c = canonical_cmp(p.terms_[i].mono, q.terms_[j].mono);
        if (c < 0) {
            r.terms_.push_back(p.terms_[i++]);
        } else if (c > 0) {
            r.terms_.push_back(q.terms_[j++]);
        } else {
            Rational s = p.terms_[i].coeff + q.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back(Term{p.terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < p.terms_.size(); ++i) r.terms_.push_back(p.terms_[i]);
    for (; j < q.terms_.size(); ++j) r.terms_.push_back(q.terms_[j]);
    return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial& Polynomial::operator+=(const Polynomial& q) {
    *this = *this + q;
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
    *this = *this - q;
    return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    check_same_arity(p, q, "poly_mul");
    if (p.is_zero() || q.is_zero()) return Polynomial(p.nvars());
    std::vector<Term> cross;
    cross.reserve(p.terms_.size() * q.terms_.size());
    for (const auto& a : p.terms_)
        for (const auto& b : q.terms_) cross.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
    return Polynomial::from_terms(p.nvars(), std::move(cross));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c.is_zero()) return Polynomial(p.nvars());
    Polynomial r(p.nvars());
    r.terms_.reserve(p.terms_.size());
    for (const auto& t : p.terms_) r.terms_.push_back(Term{t.mono, c * t.coeff});
    return r;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
    if (var >= p.nvars()) throw std::out_of_range("partial_derivative: variable index out of range");
    std::vector<Term> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        const std::uint32_t e = t.mono[var];
        if (e == 0) continue;
        std::vector<std::uint32_t> exps = t.mono.exponents();
        exps[var] = e - 1;
        out.push_back(Term{Monomial(std::move(exps)), t.coeff * Rational(static_cast<long>(e))});
    }
    return Polynomial::from_terms(p.nvars(), std::move(out));
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
    if (point.size() != p.nvars()) throw std::invalid_argument("evaluate: point arity mismatch");
    // cache powers per variable up to the largest exponent used
    std::vector<std::vector<Rational>> pows(p.nvars(), std::vector<Rational>{Rational(1)});
    auto power = [&](std::size_t j, std::uint32_t e) -> const Rational& {
        auto& cache = pows[j];
        while (cache.size() <= e) cache.push_back(cache.back() * point[j]);
        return cache[e];
    };
    Rational acc(0);
    for (const auto& t : p.terms()) {
        Rational v = t.coeff;
        for (std::size_t j = 0; j < p.nvars(); ++j)
            if (t.mono[j] != 0) v *= power(j, t.mono[j]);
        acc += v;
    }
    return acc;
}

namespace {

constexpr std::uint32_t kNoTruncation = UINT32_MAX;

Polynomial mul_truncated(const Polynomial& p, const Polynomial& q, std::uint32_t max_degree) {
    if (max_degree == kNoTruncation) return p * q;
    if (p.is_zero() || q.is_zero()) return Polynomial(p.nvars());
    std::vector<Term> cross;
    for (const auto& a : p.terms()) {
        const std::uint32_t da = a.mono.total_degree();
        if (da > max_degree) continue;
        for (const auto& b : q.terms()) {
            if (da + b.mono.total_degree() > max_degree) continue;
            cross.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
        }
    }
    return Polynomial::from_terms(p.nvars(), std::move(cross));
}

Polynomial substitute_impl(const Polynomial& p, std::span<const Polynomial> images,
                           std::uint32_t max_degree) {
    if (images.size() != p.nvars()) throw std::invalid_argument("substitute: image count mismatch");
    std::size_t out_vars = 0;
    if (!images.empty()) {
        out_vars = images[0].nvars();
        for (const auto& im : images)
            if (im.nvars() != out_vars)
                throw std::invalid_argument("substitute: images disagree on variable count");
    }
    // power caches, one per substituted variable
    std::vector<std::vector<Polynomial>> pows(images.size());
    auto power = [&](std::size_t j, std::uint32_t e) -> const Polynomial& {
        auto& cache = pows[j];
        if (cache.empty()) cache.push_back(Polynomial::constant(out_vars, Rational(1)));
        while (cache.size() <= e) cache.push_back(mul_truncated(cache.back(), images[j], max_degree));
        return cache[e];
    };
    Polynomial acc(out_vars);
    for (const auto& t : p.terms()) {
        Polynomial factor = Polynomial::constant(out_vars, t.coeff);
        for (std::size_t j = 0; j < images.size() && !factor.is_zero(); ++j)
            if (t.mono[j] != 0) factor = mul_truncated(factor, power(j, t.mono[j]), max_degree);
        acc += factor;
    }
    return acc;
}

}  // namespace

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
    return substitute_impl(p, images, kNoTruncation);
}

Polynomial substitute_truncated(const Polynomial& p, std::span<const Polynomial> images,
                                std::uint32_t max_degree) {
    return substitute_impl(p, images, max_degree);
}

Polynomial truncate_above(const Polynomial& p, std::uint32_t max_degree) {
    std::vector<Term> kept;
    kept.reserve(p.term_count());
    for (const auto& t : p.terms())
        if (t.mono.total_degree() <= max_degree) kept.push_back(t);
    return Polynomial::from_terms(p.nvars(), std::move(kept));
}

Polynomial pow(const Polynomial& p, std::uint32_t k) {
    Polynomial r = Polynomial::constant(p.nvars(), Rational(1));
    for (std::uint32_t i = 0; i < k; ++i) r = r * p;
    return r;
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& q) {
    check_same_arity(p, q, "divide_exact");
    if (q.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    Polynomial rem = p;
    std::vector<Term> quot;
    const Term& qlead = q.leading_term();
    while (!rem.is_zero()) {
        const Term& rlead = rem.leading_term();
        if (!qlead.mono.divides(rlead.mono))
            throw std::domain_error("divide_exact: inexact division");
        Term t{rlead.mono.divided_by(qlead.mono), rlead.coeff / qlead.coeff};
        rem -= Polynomial::from_monomial(t.mono, t.coeff) * q;
        quot.push_back(std::move(t));
    }
    return Polynomial::from_terms(p.nvars(), std::move(quot));
}

std::string to_string(const Polynomial& p, std::span<const std::string> var_names) {
    if (var_names.size() != p.nvars())
        throw std::invalid_argument("to_string: variable name count mismatch");
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        const Rational mag = t.coeff.abs();
        if (first) {
            if (t.coeff.sign() < 0) os << '-';
            first = false;
        } else {
            os << (t.coeff.sign() < 0 ? " - " : " + ");
        }
        const bool unit_mono = t.mono.is_unit();
        if (!mag.is_one() || unit_mono) {
            os << mag.to_string();
            if (!unit_mono) os << '*';
        }
        bool first_factor = true;
        for (std::size_t j = 0; j < p.nvars(); ++j) {
            const std::uint32_t e = t.mono[j];
            if (e == 0) continue;
            if (!first_factor) os << '*';
            first_factor = false;
            os << var_names[j];
            if (e > 1) os << '^' << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    std::vector<std::string> names;
    names.reserve(p.nvars());
    for (std::size_t j = 0; j < p.nvars(); ++j) names.push_back("x" + std::to_string(j + 1));
    return os << to_string(p, names);
}

}  // namespace keller
