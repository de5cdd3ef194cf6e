#pragma once

#include "keller/poly_matrix.hpp"
#include "keller/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace keller {

// Square polynomial map F = (F_1, ..., F_n) in n variables.
class PolyMap {
public:
    explicit PolyMap(std::vector<Polynomial> components);
    static PolyMap identity(std::size_t n);

    std::size_t nvars() const { return components_.size(); }
    const Polynomial& component(std::size_t i) const { return components_[i]; }
    const std::vector<Polynomial>& components() const { return components_; }

    // F(0), the vector of constant terms.
    std::vector<Rational> value_at_origin() const;

    bool operator==(const PolyMap&) const = default;

private:
    std::vector<Polynomial> components_;
};

// Raised when det(J_F) is zero or non-constant, i.e. the map falls
// outside the constant-Jacobian hypothesis. Carries the offending
// determinant.
class KellerViolationError : public std::runtime_error {
public:
    explicit KellerViolationError(Polynomial det);
    const Polynomial& det() const { return det_; }

private:
    Polynomial det_;
};

// Entry (i, j) is the partial derivative of F_i with respect to X_j.
PolyMatrix jacobian(const PolyMap& f);

// Returns the constant c = det(J_F) when it is a nonzero constant;
// throws KellerViolationError otherwise.
Rational keller_check(const PolyMap& f);

// The derivation frame attached to a constant-Jacobian map: the rows of
// scaled_matrix() = adjugate(J_F)^T, divided by the constant
// det_constant() = det(J_F), are the coefficient vectors of the
// derivations d_1, ..., d_n in the basis d/dX_1, ..., d/dX_n. These are
// the dual derivations of F: d_i(F_j) is 1 when i == j and 0 otherwise,
// and they map polynomials to polynomials since the determinant is a
// constant.
class NambuFrame {
public:
    const PolyMatrix& scaled_matrix() const { return scaled_; }
    const Rational& det_constant() const { return det_; }
    std::size_t nvars() const { return scaled_.nrows(); }

private:
    friend NambuFrame nambu_frame(const PolyMap& f);
    NambuFrame(PolyMatrix scaled, Rational det) : scaled_(std::move(scaled)), det_(std::move(det)) {}

    PolyMatrix scaled_;
    Rational det_;
};

// Builds the frame; propagates KellerViolationError from the gate.
NambuFrame nambu_frame(const PolyMap& f);

// d_i applied to p: (1/det) * sum_j scaled[i][j] * dp/dX_j.
Polynomial nambu_apply(const NambuFrame& frame, std::size_t i, const Polynomial& p);

// Componentwise substitution (f o g)(X) = f(g(X)).
PolyMap compose_maps(const PolyMap& f, const PolyMap& g);

// max(1, max component total degree); throws std::invalid_argument for
// all-constant maps, which cannot pass the Keller gate anyway.
std::uint32_t map_degree(const PolyMap& f);

}  // namespace keller
