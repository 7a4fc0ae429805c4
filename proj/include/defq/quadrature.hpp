#pragma once

#include "defq/graphs.hpp"

#include <cstdint>

namespace defq {

/// Monte Carlo estimate of a graph weight from the hyperbolic-angle
/// integral, in the same normalization as the exact table:
///   w = (2pi)^{-E} Integral_{C_{n,m}} wedge_e dphi_e
/// First aerial vertex gauge-fixed at i, remaining aerials over the upper
/// half plane, ground points over R in ascending order. Stratified
/// sampling; deterministic for a fixed seed.
struct QuadratureResult {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Supported for n <= 2 aerial vertices (low-dimensional integrals).
/// Throws std::invalid_argument for n > 2 or a dimension mismatch.
QuadratureResult weight_quadrature(const AdmissibleGraph& g, std::uint64_t samples,
                                   std::uint64_t seed);

} // namespace defq
