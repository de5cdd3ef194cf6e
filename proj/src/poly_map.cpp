#include "keller/poly_map.hpp"

#include <sstream>
#include <utility>

namespace keller {

PolyMap::PolyMap(std::vector<Polynomial> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("PolyMap: no components");
    for (const auto& c : components_)
        if (c.nvars() != components_.size())
            throw std::invalid_argument("PolyMap: component count must equal variable count");
}

PolyMap PolyMap::identity(std::size_t n) {
    std::vector<Polynomial> comps;
    comps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) comps.push_back(Polynomial::variable(n, i));
    return PolyMap(std::move(comps));
}

std::vector<Rational> PolyMap::value_at_origin() const {
    std::vector<Rational> v;
    v.reserve(nvars());
    for (const auto& c : components_) v.push_back(c.constant_term());
    return v;
}

namespace {

std::string describe_violation(const Polynomial& det) {
    std::ostringstream os;
    os << "keller-violation: det = " << det;
    return os.str();
}

}  // namespace

KellerViolationError::KellerViolationError(Polynomial det)
    : std::runtime_error(describe_violation(det)), det_(std::move(det)) {}

PolyMatrix jacobian(const PolyMap& f) {
    const std::size_t n = f.nvars();
    PolyMatrix j(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) j.set(i, k, partial_derivative(f.component(i), k));
    return j;
}

Rational keller_check(const PolyMap& f) {
    Polynomial det = determinant(jacobian(f));
    if (det.is_zero() || !det.is_constant()) throw KellerViolationError(std::move(det));
    return det.constant_term();
}

NambuFrame nambu_frame(const PolyMap& f) {
    Rational det = keller_check(f);
    PolyMatrix scaled = adjugate(jacobian(f)).transposed();
    return NambuFrame(std::move(scaled), std::move(det));
}

Polynomial nambu_apply(const NambuFrame& frame, std::size_t i, const Polynomial& p) {
    const std::size_t n = frame.nvars();
    if (i >= n) throw std::out_of_range("nambu_apply: derivation index out of range");
    if (p.nvars() != n) throw std::invalid_argument("nambu_apply: polynomial arity mismatch");
    Polynomial acc(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Polynomial& row_entry = frame.scaled_matrix().at(i, j);
        if (row_entry.is_zero()) continue;
        Polynomial d = partial_derivative(p, j);
        if (d.is_zero()) continue;
        acc += row_entry * d;
    }
    return frame.det_constant().reciprocal() * acc;
}

PolyMap compose_maps(const PolyMap& f, const PolyMap& g) {
    if (f.nvars() != g.nvars()) throw std::invalid_argument("compose_maps: variable count mismatch");
    std::vector<Polynomial> comps;
    comps.reserve(f.nvars());
    for (const auto& fi : f.components()) comps.push_back(substitute(fi, g.components()));
    return PolyMap(std::move(comps));
}

std::uint32_t map_degree(const PolyMap& f) {
    std::uint32_t max_deg = 0;
    bool any_nonconstant = false;
    for (const auto& c : f.components()) {
        if (auto d = c.degree(); d && *d > 0) {
            any_nonconstant = true;
            if (*d > max_deg) max_deg = *d;
        }
    }
    if (!any_nonconstant) throw std::invalid_argument("map_degree: all components constant");
    return max_deg < 1 ? 1 : max_deg;
}

}  // namespace keller
