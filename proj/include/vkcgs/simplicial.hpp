#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "vkcgs/errors.hpp"

namespace vkcgs {

/// An element of Z/2.
class Parity {
  public:
    constexpr Parity() = default;
    constexpr explicit Parity(long v) : bit_(static_cast<int>(v & 1)) {}

    constexpr int value() const { return bit_; }

    friend constexpr Parity operator+(Parity a, Parity b) {
        return Parity(a.bit_ ^ b.bit_);
    }
    Parity& operator+=(Parity other) {
        bit_ ^= other.bit_;
        return *this;
    }
    friend constexpr bool operator==(Parity, Parity) = default;

  private:
    int bit_ = 0;
};

/// A nonempty face of Delta_N: a strictly increasing list of vertex indices.
/// The empty face (dimension -1) is unrepresentable by construction.
class Face {
  public:
    /// Sorts the vertices; rejects empty input, duplicates and negatives.
    explicit Face(std::vector<int> vertices);

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    int vertexCount() const { return static_cast<int>(verts_.size()); }
    const std::vector<int>& vertices() const { return verts_; }
    int maxVertex() const { return verts_.back(); }

    bool contains(int v) const;
    bool disjointFrom(const Face& other) const;
    bool isSubsetOf(const Face& other) const;

    /// The face on vertices() plus one extra vertex (a cone cell).
    Face joined(int extraVertex) const;

    friend bool operator==(const Face&, const Face&) = default;
    /// Lexicographic on the vertex lists.
    friend auto operator<=>(const Face&, const Face&) = default;

  private:
    std::vector<int> verts_;
};

using FacePair = std::pair<Face, Face>;

/// A subcomplex of Delta_N given by an explicit face list, closed under
/// taking nonempty subsets. Instances come from the factories below, which
/// guarantee the closure invariant.
class Complex {
  public:
    Complex(int n, std::vector<Face> faces);

    /// The N of Delta_N (vertex indices run over 0..N).
    int vertexParameter() const { return n_; }
    const std::vector<Face>& faces() const { return faces_; }

  private:
    int n_;
    std::vector<Face> faces_;
};

/// All C(N+1, k+1) k-dimensional faces of Delta_N, lexicographic.
std::vector<Face> enumerateFaces(int N, int k);

/// The k-skeleton of Delta_N: all faces of dimension <= k.
Complex skeleton(int N, int k);

/// Delta_N as a complex (equals skeleton(N, N)).
Complex fullSimplex(int N);

/// The face on {0..N} \ sigma. Throws EmptyComplement when sigma uses all
/// vertices.
Face complement(const Face& sigma, int N);

/// All dim(sigma)+1 facets of sigma (delete one vertex each). Throws
/// NoBoundary for a vertex.
std::vector<Face> boundaryFacets(const Face& sigma);

/// boundaryFacets, with the boundary of a vertex read as the empty list
/// (the convention used by every summation in this library).
std::vector<Face> boundaryFacetsOrEmpty(const Face& sigma);

/// All unordered pairs {sigma, tau} of disjoint faces of K with
/// dim sigma + dim tau = totalDim. Each pair appears once with the
/// lexicographically smaller face first; the list is sorted.
std::vector<FacePair> disjointPairs(const Complex& K, int totalDim);

}  // namespace vkcgs
