#pragma once

#include "keller/poly_map.hpp"

#include <cstdint>
#include <vector>

namespace keller {

// Deterministic family of invertible test maps: compositions of
// elementary layers X_i <- X_i + p(X_1, .., X_i-hat, .., X_n), with p of
// total degree between 1 and `deg` and omitting X_i, interleaved with
// invertible rational linear mixes. Elementary layers have unit Jacobian
// determinant, so det(J_F) equals the product of the linear-layer
// determinants and every output passes the constant-Jacobian gate.
// A fixed seed yields a byte-identical corpus on every run.
std::vector<PolyMap> gen_triangular_corpus(std::uint64_t seed, std::size_t n, std::uint32_t deg,
                                           std::uint32_t layers, std::size_t count);

}  // namespace keller
