#include "keller/monomial.hpp"

#include <stdexcept>

namespace keller {

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (auto e : e_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw std::invalid_argument("Monomial: variable count mismatch");
    std::vector<std::uint32_t> r(e_);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += o.e_[j];
    return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw std::invalid_argument("Monomial: variable count mismatch");
    for (std::size_t j = 0; j < e_.size(); ++j)
        if (e_[j] > o.e_[j]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    if (!o.divides(*this)) throw std::domain_error("Monomial: inexact quotient");
    std::vector<std::uint32_t> r(e_);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= o.e_[j];
    return Monomial(std::move(r));
}

Monomial Monomial::raised(std::size_t var) const {
    if (var >= e_.size()) throw std::out_of_range("Monomial: variable index out of range");
    std::vector<std::uint32_t> r(e_);
    ++r[var];
    return Monomial(std::move(r));
}

std::size_t Monomial::last_active_var() const {
    for (std::size_t j = e_.size(); j > 0; --j)
        if (e_[j - 1] != 0) return j;
    return 0;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("grlex_cmp: variable count mismatch");
    const std::uint32_t da = a.total_degree();
    const std::uint32_t db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t j = 0; j < a.nvars(); ++j) {
        if (a[j] != b[j]) return a[j] < b[j] ? -1 : 1;
    }
    return 0;
}

int canonical_cmp(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("canonical_cmp: variable count mismatch");
    const std::uint32_t da = a.total_degree();
    const std::uint32_t db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t j = 0; j < a.nvars(); ++j) {
        if (a[j] != b[j]) return a[j] > b[j] ? -1 : 1;
    }
    return 0;
}

}  // namespace keller
