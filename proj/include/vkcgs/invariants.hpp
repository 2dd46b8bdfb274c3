#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "vkcgs/linalg.hpp"
#include "vkcgs/simplicial.hpp"

namespace vkcgs {

/// A simplexwise-linear map Delta_{n-1} -> R^d, encoded by the images of the
/// vertices. The map is affine on every face, so the vertex images determine
/// it completely.
struct VertexConfiguration {
    int d = 0;
    std::vector<Point> points;

    int vertexCount() const { return static_cast<int>(points.size()); }

    /// The sub-map on the given (strictly increasing) vertex indices,
    /// relabeled order-preservingly to 0..k-1.
    VertexConfiguration restrictTo(const std::vector<int>& indices) const;

    /// Restriction to vertices 0..count-1.
    VertexConfiguration prefix(int count) const;
};

/// A map to S^{d-1} encoded by one nonzero direction vector per vertex; a
/// face goes to the geodesic simplex pos(vectors) intersected with S^{d-1}.
struct SphericalConfiguration {
    int d = 0;  // ambient dimension; the sphere has dimension d-1
    std::vector<Point> vectors;

    int vertexCount() const { return static_cast<int>(vectors.size()); }
    int sphereDim() const { return d - 1; }
};

/// Parity together with the exact count and the realizing face pairs.
struct PairCountResult {
    Parity parity;
    long count = 0;
    std::vector<FacePair> positives;
};

/// Memoizes the affine-dependence sign vector per vertex subset of one
/// configuration. All invariant computations over a fixed configuration
/// reuse the same few kernels, so this removes nearly all repeated
/// eliminations. Thread-confined; create one per evaluation.
class AffineDependenceCache {
  public:
    explicit AffineDependenceCache(const VertexConfiguration& cfg);

    /// Sign vector for the points at `involved` (strictly increasing).
    /// Degeneracies are rethrown with configuration-level indices.
    const SignVector& forVertices(const std::vector<int>& involved);

    const VertexConfiguration& configuration() const { return cfg_; }

  private:
    const VertexConfiguration& cfg_;
    std::unordered_map<std::uint64_t, SignVector> memo_;
};

/// Spherical analogue of AffineDependenceCache (linear dependences).
class LinearDependenceCache {
  public:
    explicit LinearDependenceCache(const SphericalConfiguration& s);

    const SignVector& forVertices(const std::vector<int>& involved);

    const SphericalConfiguration& configuration() const { return s_; }

  private:
    const SphericalConfiguration& s_;
    std::unordered_map<std::uint64_t, SignVector> memo_;
};

/// True iff every subset of min(n, d+1) image points is affinely
/// independent. This is exactly the condition under which every dependence
/// kernel used by the invariants below succeeds.
bool isGeneralPosition(const VertexConfiguration& cfg);

/// First (lexicographic) violating subset, if any.
std::optional<std::vector<int>> findDegenerateSubset(const VertexConfiguration& cfg);

/// True iff every subset of min(n, d) vectors is linearly independent.
bool isGenericSpherical(const SphericalConfiguration& s);

std::optional<std::vector<int>> findDegenerateSubsetSpherical(const SphericalConfiguration& s);

/// Whether f(sigma) and f(tau) intersect, for disjoint faces with
/// |sigma| + |tau| = d+2. In general position this is a Radon test: the
/// affine dependence of the d+2 involved points must be sign-constant on
/// sigma and oppositely constant on tau.
bool facesIntersect(const VertexConfiguration& cfg, const Face& sigma, const Face& tau);
bool facesIntersect(AffineDependenceCache& cache, const Face& sigma, const Face& tau);

/// The van Kampen number: parity of the number of intersection points of
/// images of disjoint faces of K whose dimensions sum to d.
Parity vanKampenNumber(const VertexConfiguration& cfg, const Complex& K);
PairCountResult vanKampenDetailed(const VertexConfiguration& cfg, const Complex& K);

/// Mod-2 linking number of f(boundary sigma) and f(boundary tau) for
/// disjoint faces with dim sigma + dim tau = d+1 (both >= 1), computed as
/// |f(sigma) ^ f(boundary tau)| mod 2, i.e. filling one cycle by the face
/// it bounds.
Parity linkingNumberMod2(const VertexConfiguration& cfg, const Face& sigma, const Face& tau);
Parity linkingNumberMod2(AffineDependenceCache& cache, const Face& sigma, const Face& tau);

/// The Conway-Gordon-Sachs number (d odd, d+3 points): parity of the number
/// of linked pairs among the images of boundaries of complementary
/// (d+1)/2-faces of Delta_{d+2}.
Parity cgsNumber(const VertexConfiguration& cfg);
PairCountResult cgsDetailed(const VertexConfiguration& cfg);

/// Footnote-style mixed count (d odd, d+3 points): the number of
/// intersecting disjoint pairs of a (d-1)/2-face and a (d+1)/2-face,
/// together with its parity.
PairCountResult mixedPairParity(const VertexConfiguration& cfg);

/// Wedge of two vertex-disjoint subcomplexes (given as face lists): parity
/// of |f(A) ^ f(B)|, which in general position is the sum of
/// facesIntersect over the cell pairs whose dimensions sum to d.
Parity subcomplexWedge(const VertexConfiguration& cfg, const std::vector<Face>& A,
                       const std::vector<Face>& B);
Parity subcomplexWedge(AffineDependenceCache& cache, const std::vector<Face>& A,
                       const std::vector<Face>& B);

/// Whether the geodesic simplices pos(sigma) and pos(tau) on S^{d-1}
/// intersect, for disjoint faces with |sigma| + |tau| = d+1: the linear
/// dependence of the d+1 involved vectors must be sign-constant on sigma
/// and oppositely constant on tau.
bool sphericalFacesIntersect(const SphericalConfiguration& s, const Face& sigma,
                             const Face& tau);
bool sphericalFacesIntersect(LinearDependenceCache& cache, const Face& sigma, const Face& tau);

/// Spherical van Kampen number: pairs of disjoint faces of K with dimension
/// sum d-1 (the sphere dimension).
Parity sphericalVanKampen(const SphericalConfiguration& s, const Complex& K);
PairCountResult sphericalVanKampenDetailed(const SphericalConfiguration& s, const Complex& K);

/// Spherical mod-2 linking for disjoint faces with |sigma| + |tau| = d+2,
/// dim tau >= 1; the geodesic simplex pos(sigma) fills its boundary.
Parity sphericalLinkingMod2(const SphericalConfiguration& s, const Face& sigma,
                            const Face& tau);
Parity sphericalLinkingMod2(LinearDependenceCache& cache, const Face& sigma, const Face& tau);

/// Spherical Conway-Gordon-Sachs number (sphere dimension m = d-1 odd,
/// m+3 vectors): linked complementary pairs of (m+1)/2-faces of Delta_{m+2}.
Parity sphericalCgs(const SphericalConfiguration& s);
PairCountResult sphericalCgsDetailed(const SphericalConfiguration& s);

}  // namespace vkcgs
