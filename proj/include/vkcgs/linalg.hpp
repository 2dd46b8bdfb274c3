#pragma once

#include <vector>

#include "vkcgs/errors.hpp"
#include "vkcgs/rational.hpp"

namespace vkcgs {

using IntMatrix = std::vector<std::vector<BigInt>>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// Sign pattern of a one-dimensional linear/affine dependence, canonicalized
/// so the first entry is +1. Entries are +1 or -1 only: a vanishing
/// coefficient is a degeneracy and never produces a silent zero sign.
struct SignVector {
    std::vector<int> signs;

    bool operator==(const SignVector&) const = default;
};

/// Exact determinant by Bareiss fraction-free elimination (integer pivots,
/// exact divisions), which keeps intermediate growth polynomial.
BigInt intDeterminant(IntMatrix m);

/// Exact determinant of a rational matrix. Rows are scaled to integers and
/// the scaling is divided back out after the fraction-free elimination.
Rational determinant(const RatMatrix& m);

int rank(RatMatrix m);

/// Sign pattern of the unique (up to global sign) affine dependence
/// sum(lambda_i) = 0, sum(lambda_i p_i) = 0 of exactly k+2 points in R^k.
/// Throws DegenerateConfiguration when the dependence space has dimension
/// != 1 or some coefficient vanishes (a general-position violation).
SignVector affineDependence(const std::vector<Point>& points);

/// Sign pattern of the unique linear dependence sum(mu_i u_i) = 0 of exactly
/// k+1 nonzero vectors in R^k. Same degeneracy contract as affineDependence.
SignVector linearDependence(const std::vector<Point>& vectors);

/// True iff the points (at most dim+1 of them) are affinely independent.
bool affinelyIndependent(const std::vector<Point>& points, int dim);

/// True iff the vectors (at most dim of them) are linearly independent.
bool linearlyIndependent(const std::vector<Point>& vectors, int dim);

}  // namespace vkcgs
