#pragma once

#include <cstdint>

#include "vkcgs/invariants.hpp"
#include "vkcgs/rng.hpp"

namespace vkcgs {

/// A general-position shift of the cone over a base map: every base point
/// lifted to height 0 in R^{d+1}, an apex above the centroid, and an
/// independent small rational perturbation on every coordinate.
struct ConeConfiguration {
    VertexConfiguration base;
    VertexConfiguration result;  // dimension d+1, one extra point (the apex)
    int apexIndex = 0;
    Rational epsilon;  // perturbation magnitude H * 2^{-epsilonExponent}
    std::uint64_t perturbationSeed = 0;
    int epsilonExponent = 0;
    int retries = 0;  // discarded degenerate perturbations before success
};

/// The unperturbed lift: base points at height 0, apex at (centroid, H)
/// where H is the maximum coordinate spread (or 1 if the spread is 0).
/// Never in general position once the base has d+2 or more points.
VertexConfiguration coneLiftUnperturbed(const VertexConfiguration& base);

/// Builds the perturbed cone. Perturbations are rationals with denominator
/// 2^{epsilonExponent+10} drawn deterministically from perturbationSeed in
/// [-H*2^{-epsilonExponent}, H*2^{-epsilonExponent}], point-major then
/// coordinate-minor, apex last. Retries with successively derived seeds
/// until the result passes isGeneralPosition (cap 1000, then
/// RetryCapExceeded).
ConeConfiguration coneConfiguration(const VertexConfiguration& base,
                                    std::uint64_t perturbationSeed,
                                    int epsilonExponent);

/// The link of f at vertex `center`: direction vectors f(B) - f(A) for all
/// B != A in increasing order of B. Not normalized; every spherical
/// predicate is scale-invariant.
struct LinkConfiguration {
    VertexConfiguration base;
    int center = 0;
    SphericalConfiguration result;
};

LinkConfiguration linkConfiguration(const VertexConfiguration& base, int center);

}  // namespace vkcgs
