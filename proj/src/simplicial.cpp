#include "vkcgs/simplicial.hpp"

#include <algorithm>

namespace vkcgs {

Face::Face(std::vector<int> vertices) : verts_(std::move(vertices)) {
    if (verts_.empty()) {
        throw InvalidDimension("a face must have at least one vertex");
    }
    std::sort(verts_.begin(), verts_.end());
    if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end()) {
        throw InvalidDimension("repeated vertex in face");
    }
    if (verts_.front() < 0) {
        throw IndexOutOfRange("negative vertex index");
    }
}

bool Face::contains(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Face::disjointFrom(const Face& other) const {
    auto a = verts_.begin();
    auto b = other.verts_.begin();
    while (a != verts_.end() && b != other.verts_.end()) {
        if (*a == *b) return false;
        if (*a < *b) {
            ++a;
        } else {
            ++b;
        }
    }
    return true;
}

bool Face::isSubsetOf(const Face& other) const {
    return std::includes(other.verts_.begin(), other.verts_.end(), verts_.begin(),
                         verts_.end());
}

Face Face::joined(int extraVertex) const {
    std::vector<int> v = verts_;
    v.push_back(extraVertex);
    return Face(std::move(v));
}

Complex::Complex(int n, std::vector<Face> faces) : n_(n), faces_(std::move(faces)) {
    if (n_ < 0) {
        throw InvalidDimension("negative vertex parameter");
    }
    for (const auto& f : faces_) {
        if (f.maxVertex() > n_) {
            throw IndexOutOfRange("face vertex exceeds the complex's vertex set");
        }
    }
}

std::vector<Face> enumerateFaces(int N, int k) {
    if (k < 0 || k > N) {
        throw InvalidDimension("face dimension out of range");
    }
    std::vector<Face> out;
    std::vector<int> pick(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
        out.emplace_back(pick);
        // next lexicographic (k+1)-combination of {0..N}
        int i = k;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == N - (k - i)) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j <= k; ++j) {
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

Complex skeleton(int N, int k) {
    if (k < 0 || k > N) {
        throw InvalidDimension("skeleton dimension out of range");
    }
    std::vector<Face> faces;
    for (int dim = 0; dim <= k; ++dim) {
        auto level = enumerateFaces(N, dim);
        faces.insert(faces.end(), std::make_move_iterator(level.begin()),
                     std::make_move_iterator(level.end()));
    }
    return Complex(N, std::move(faces));
}

Complex fullSimplex(int N) { return skeleton(N, N); }

Face complement(const Face& sigma, int N) {
    if (sigma.maxVertex() > N) {
        throw IndexOutOfRange("face does not live on {0..N}");
    }
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(N) + 1 - sigma.vertices().size());
    for (int v = 0; v <= N; ++v) {
        if (!sigma.contains(v)) rest.push_back(v);
    }
    if (rest.empty()) {
        throw EmptyComplement("face uses every vertex of Delta_N");
    }
    return Face(std::move(rest));
}

std::vector<Face> boundaryFacets(const Face& sigma) {
    if (sigma.dim() < 1) {
        throw NoBoundary("a vertex has no boundary facets");
    }
    std::vector<Face> out;
    out.reserve(sigma.vertices().size());
    for (std::size_t skip = 0; skip < sigma.vertices().size(); ++skip) {
        std::vector<int> v;
        v.reserve(sigma.vertices().size() - 1);
        for (std::size_t i = 0; i < sigma.vertices().size(); ++i) {
            if (i != skip) v.push_back(sigma.vertices()[i]);
        }
        out.emplace_back(std::move(v));
    }
    return out;
}

std::vector<Face> boundaryFacetsOrEmpty(const Face& sigma) {
    if (sigma.dim() < 1) {
        return {};
    }
    return boundaryFacets(sigma);
}

std::vector<FacePair> disjointPairs(const Complex& K, int totalDim) {
    std::vector<FacePair> out;
    const auto& faces = K.faces();
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = i + 1; j < faces.size(); ++j) {
            if (faces[i].dim() + faces[j].dim() != totalDim) continue;
            if (!faces[i].disjointFrom(faces[j])) continue;
            if (faces[i] < faces[j]) {
                out.emplace_back(faces[i], faces[j]);
            } else {
                out.emplace_back(faces[j], faces[i]);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace vkcgs
