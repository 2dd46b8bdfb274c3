#include "vkcgs/invariants.hpp"

#include <algorithm>

namespace vkcgs {

namespace {

std::uint64_t subsetMask(const std::vector<int>& involved, int vertexCount) {
    if (vertexCount > 63) {
        throw DimensionMismatch("configurations above 63 vertices are unsupported");
    }
    std::uint64_t mask = 0;
    for (int v : involved) {
        if (v < 0 || v >= vertexCount) {
            throw IndexOutOfRange("vertex index outside the configuration");
        }
        mask |= std::uint64_t{1} << v;
    }
    return mask;
}

std::vector<int> mergedVertices(const Face& sigma, const Face& tau) {
    std::vector<int> involved;
    involved.reserve(sigma.vertices().size() + tau.vertices().size());
    std::merge(sigma.vertices().begin(), sigma.vertices().end(), tau.vertices().begin(),
               tau.vertices().end(), std::back_inserter(involved));
    return involved;
}

/// Signs constant on sigma and oppositely constant on tau?
bool partitionMatchesSigns(const SignVector& sv, const std::vector<int>& involved,
                           const Face& sigma) {
    int sigmaSign = 0;
    int tauSign = 0;
    for (std::size_t pos = 0; pos < involved.size(); ++pos) {
        const int s = sv.signs[pos];
        int& slot = sigma.contains(involved[pos]) ? sigmaSign : tauSign;
        if (slot == 0) {
            slot = s;
        } else if (slot != s) {
            return false;
        }
    }
    return sigmaSign == -tauSign;
}

template <typename Fn>
void forEachCombination(int n, int k, Fn&& fn) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
        fn(pick);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - (k - i)) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

void validateMiddleDimInput(int d, int n, const char* what) {
    if (d % 2 == 0) {
        throw WrongParity(std::string(what) + " requires an odd dimension");
    }
    if (n != d + 3) {
        throw DimensionMismatch(std::string(what) + " needs exactly d+3 points");
    }
}

}  // namespace

VertexConfiguration VertexConfiguration::restrictTo(const std::vector<int>& indices) const {
    VertexConfiguration out;
    out.d = d;
    out.points.reserve(indices.size());
    for (int i : indices) {
        if (i < 0 || i >= vertexCount()) {
            throw IndexOutOfRange("restriction index outside the configuration");
        }
        out.points.push_back(points[static_cast<std::size_t>(i)]);
    }
    return out;
}

VertexConfiguration VertexConfiguration::prefix(int count) const {
    if (count < 0 || count > vertexCount()) {
        throw IndexOutOfRange("prefix length outside the configuration");
    }
    VertexConfiguration out;
    out.d = d;
    out.points.assign(points.begin(), points.begin() + count);
    return out;
}

AffineDependenceCache::AffineDependenceCache(const VertexConfiguration& cfg) : cfg_(cfg) {}

const SignVector& AffineDependenceCache::forVertices(const std::vector<int>& involved) {
    const std::uint64_t mask = subsetMask(involved, cfg_.vertexCount());
    auto it = memo_.find(mask);
    if (it != memo_.end()) {
        return it->second;
    }
    std::vector<Point> pts;
    pts.reserve(involved.size());
    for (int v : involved) {
        pts.push_back(cfg_.points[static_cast<std::size_t>(v)]);
    }
    try {
        auto [pos, inserted] = memo_.emplace(mask, affineDependence(pts));
        return pos->second;
    } catch (const DegenerateConfiguration& e) {
        std::vector<int> mapped;
        mapped.reserve(e.indices().size());
        for (int local : e.indices()) {
            mapped.push_back(involved[static_cast<std::size_t>(local)]);
        }
        throw e.withIndices(std::move(mapped));
    }
}

LinearDependenceCache::LinearDependenceCache(const SphericalConfiguration& s) : s_(s) {}

const SignVector& LinearDependenceCache::forVertices(const std::vector<int>& involved) {
    const std::uint64_t mask = subsetMask(involved, s_.vertexCount());
    auto it = memo_.find(mask);
    if (it != memo_.end()) {
        return it->second;
    }
    std::vector<Point> vecs;
    vecs.reserve(involved.size());
    for (int v : involved) {
        vecs.push_back(s_.vectors[static_cast<std::size_t>(v)]);
    }
    try {
        auto [pos, inserted] = memo_.emplace(mask, linearDependence(vecs));
        return pos->second;
    } catch (const DegenerateConfiguration& e) {
        std::vector<int> mapped;
        mapped.reserve(e.indices().size());
        for (int local : e.indices()) {
            mapped.push_back(involved[static_cast<std::size_t>(local)]);
        }
        throw e.withIndices(std::move(mapped));
    }
}

bool isGeneralPosition(const VertexConfiguration& cfg) {
    return !findDegenerateSubset(cfg).has_value();
}

std::optional<std::vector<int>> findDegenerateSubset(const VertexConfiguration& cfg) {
    const int n = cfg.vertexCount();
    if (n == 0) {
        return std::nullopt;
    }
    const int size = std::min(n, cfg.d + 1);
    std::optional<std::vector<int>> bad;
    forEachCombination(n, size, [&](const std::vector<int>& pick) {
        if (bad) return;
        std::vector<Point> pts;
        pts.reserve(pick.size());
        for (int v : pick) pts.push_back(cfg.points[static_cast<std::size_t>(v)]);
        if (!affinelyIndependent(pts, cfg.d)) {
            bad = pick;
        }
    });
    return bad;
}

bool isGenericSpherical(const SphericalConfiguration& s) {
    return !findDegenerateSubsetSpherical(s).has_value();
}

std::optional<std::vector<int>> findDegenerateSubsetSpherical(const SphericalConfiguration& s) {
    const int n = s.vertexCount();
    if (n == 0) {
        return std::nullopt;
    }
    const int size = std::min(n, s.d);
    std::optional<std::vector<int>> bad;
    forEachCombination(n, size, [&](const std::vector<int>& pick) {
        if (bad) return;
        std::vector<Point> vecs;
        vecs.reserve(pick.size());
        for (int v : pick) vecs.push_back(s.vectors[static_cast<std::size_t>(v)]);
        if (!linearlyIndependent(vecs, s.d)) {
            bad = pick;
        }
    });
    return bad;
}

bool facesIntersect(AffineDependenceCache& cache, const Face& sigma, const Face& tau) {
    if (!sigma.disjointFrom(tau)) {
        throw OverlappingSubcomplexes("facesIntersect requires disjoint faces");
    }
    const auto involved = mergedVertices(sigma, tau);
    if (involved.size() != static_cast<std::size_t>(cache.configuration().d) + 2) {
        throw DimensionMismatch("facesIntersect needs |sigma| + |tau| = d + 2");
    }
    return partitionMatchesSigns(cache.forVertices(involved), involved, sigma);
}

bool facesIntersect(const VertexConfiguration& cfg, const Face& sigma, const Face& tau) {
    AffineDependenceCache cache(cfg);
    return facesIntersect(cache, sigma, tau);
}

PairCountResult vanKampenDetailed(const VertexConfiguration& cfg, const Complex& K) {
    if (K.vertexParameter() + 1 != cfg.vertexCount()) {
        throw DimensionMismatch("complex vertex set does not index the configuration");
    }
    AffineDependenceCache cache(cfg);
    PairCountResult result;
    for (const auto& [sigma, tau] : disjointPairs(K, cfg.d)) {
        if (facesIntersect(cache, sigma, tau)) {
            ++result.count;
            result.positives.emplace_back(sigma, tau);
        }
    }
    result.parity = Parity(result.count);
    return result;
}

Parity vanKampenNumber(const VertexConfiguration& cfg, const Complex& K) {
    return vanKampenDetailed(cfg, K).parity;
}

Parity linkingNumberMod2(AffineDependenceCache& cache, const Face& sigma, const Face& tau) {
    if (!sigma.disjointFrom(tau)) {
        throw OverlappingSubcomplexes("linkingNumberMod2 requires disjoint faces");
    }
    if (sigma.dim() < 1 || tau.dim() < 1) {
        throw DimensionMismatch("linkingNumberMod2 requires faces of dimension >= 1");
    }
    if (sigma.dim() + tau.dim() != cache.configuration().d + 1) {
        throw DimensionMismatch("linkingNumberMod2 needs dim sigma + dim tau = d + 1");
    }
    Parity acc;
    for (const auto& rho : boundaryFacets(tau)) {
        acc += Parity(facesIntersect(cache, sigma, rho) ? 1 : 0);
    }
    return acc;
}

Parity linkingNumberMod2(const VertexConfiguration& cfg, const Face& sigma, const Face& tau) {
    AffineDependenceCache cache(cfg);
    return linkingNumberMod2(cache, sigma, tau);
}

PairCountResult cgsDetailed(const VertexConfiguration& cfg) {
    validateMiddleDimInput(cfg.d, cfg.vertexCount(), "cgsNumber");
    const int N = cfg.d + 2;
    const int half = (cfg.d + 3) / 2;
    AffineDependenceCache cache(cfg);
    PairCountResult result;
    Parity parity;
    // Each unordered complementary pair once: enumerate the side containing
    // vertex 0 (which is also the lexicographically smaller side).
    forEachCombination(N, half - 1, [&](const std::vector<int>& pick) {
        std::vector<int> side{0};
        for (int v : pick) side.push_back(v + 1);
        const Face sigma(std::move(side));
        const Face tau = complement(sigma, N);
        if (linkingNumberMod2(cache, sigma, tau) == Parity(1)) {
            ++result.count;
            result.positives.emplace_back(sigma, tau);
        }
    });
    result.parity = Parity(result.count);
    return result;
}

Parity cgsNumber(const VertexConfiguration& cfg) { return cgsDetailed(cfg).parity; }

PairCountResult mixedPairParity(const VertexConfiguration& cfg) {
    validateMiddleDimInput(cfg.d, cfg.vertexCount(), "mixedPairParity");
    const int N = cfg.d + 2;
    const int smallDim = (cfg.d - 1) / 2;
    const int bigVerts = (cfg.d + 3) / 2;
    AffineDependenceCache cache(cfg);
    PairCountResult result;
    for (const auto& sigma : enumerateFaces(N, smallDim)) {
        const Face rest = complement(sigma, N);
        const auto& pool = rest.vertices();
        forEachCombination(static_cast<int>(pool.size()), bigVerts,
                           [&](const std::vector<int>& pick) {
                               std::vector<int> verts;
                               verts.reserve(pick.size());
                               for (int i : pick) {
                                   verts.push_back(pool[static_cast<std::size_t>(i)]);
                               }
                               const Face tau(std::move(verts));
                               if (facesIntersect(cache, sigma, tau)) {
                                   ++result.count;
                                   result.positives.emplace_back(sigma, tau);
                               }
                           });
    }
    result.parity = Parity(result.count);
    return result;
}

Parity subcomplexWedge(AffineDependenceCache& cache, const std::vector<Face>& A,
                       const std::vector<Face>& B) {
    for (const auto& a : A) {
        for (const auto& b : B) {
            if (!a.disjointFrom(b)) {
                throw OverlappingSubcomplexes("wedge subcomplexes share a vertex");
            }
        }
    }
    const int d = cache.configuration().d;
    Parity acc;
    for (const auto& a : A) {
        for (const auto& b : B) {
            if (a.dim() + b.dim() != d) continue;  // generically empty intersection
            acc += Parity(facesIntersect(cache, a, b) ? 1 : 0);
        }
    }
    return acc;
}

Parity subcomplexWedge(const VertexConfiguration& cfg, const std::vector<Face>& A,
                       const std::vector<Face>& B) {
    AffineDependenceCache cache(cfg);
    return subcomplexWedge(cache, A, B);
}

bool sphericalFacesIntersect(LinearDependenceCache& cache, const Face& sigma,
                             const Face& tau) {
    if (!sigma.disjointFrom(tau)) {
        throw OverlappingSubcomplexes("sphericalFacesIntersect requires disjoint faces");
    }
    const auto involved = mergedVertices(sigma, tau);
    if (involved.size() != static_cast<std::size_t>(cache.configuration().d) + 1) {
        throw DimensionMismatch("sphericalFacesIntersect needs |sigma| + |tau| = d + 1");
    }
    return partitionMatchesSigns(cache.forVertices(involved), involved, sigma);
}

bool sphericalFacesIntersect(const SphericalConfiguration& s, const Face& sigma,
                             const Face& tau) {
    LinearDependenceCache cache(s);
    return sphericalFacesIntersect(cache, sigma, tau);
}

PairCountResult sphericalVanKampenDetailed(const SphericalConfiguration& s,
                                           const Complex& K) {
    if (K.vertexParameter() + 1 != s.vertexCount()) {
        throw DimensionMismatch("complex vertex set does not index the configuration");
    }
    LinearDependenceCache cache(s);
    PairCountResult result;
    for (const auto& [sigma, tau] : disjointPairs(K, s.sphereDim())) {
        if (sphericalFacesIntersect(cache, sigma, tau)) {
            ++result.count;
            result.positives.emplace_back(sigma, tau);
        }
    }
    result.parity = Parity(result.count);
    return result;
}

Parity sphericalVanKampen(const SphericalConfiguration& s, const Complex& K) {
    return sphericalVanKampenDetailed(s, K).parity;
}

Parity sphericalLinkingMod2(LinearDependenceCache& cache, const Face& sigma,
                            const Face& tau) {
    if (!sigma.disjointFrom(tau)) {
        throw OverlappingSubcomplexes("sphericalLinkingMod2 requires disjoint faces");
    }
    if (tau.dim() < 1) {
        throw DimensionMismatch("sphericalLinkingMod2 requires dim tau >= 1");
    }
    const auto merged = mergedVertices(sigma, tau);
    if (merged.size() != static_cast<std::size_t>(cache.configuration().d) + 2) {
        throw DimensionMismatch("sphericalLinkingMod2 needs |sigma| + |tau| = d + 2");
    }
    Parity acc;
    for (const auto& rho : boundaryFacets(tau)) {
        acc += Parity(sphericalFacesIntersect(cache, sigma, rho) ? 1 : 0);
    }
    return acc;
}

Parity sphericalLinkingMod2(const SphericalConfiguration& s, const Face& sigma,
                            const Face& tau) {
    LinearDependenceCache cache(s);
    return sphericalLinkingMod2(cache, sigma, tau);
}

PairCountResult sphericalCgsDetailed(const SphericalConfiguration& s) {
    const int m = s.sphereDim();
    if (m % 2 == 0) {
        throw WrongParity("sphericalCgs requires an odd sphere dimension");
    }
    if (s.vertexCount() != m + 3) {
        throw DimensionMismatch("sphericalCgs needs exactly m+3 vectors");
    }
    const int N = m + 2;
    const int half = (m + 3) / 2;
    LinearDependenceCache cache(s);
    PairCountResult result;
    forEachCombination(N, half - 1, [&](const std::vector<int>& pick) {
        std::vector<int> side{0};
        for (int v : pick) side.push_back(v + 1);
        const Face sigma(std::move(side));
        const Face tau = complement(sigma, N);
        if (sphericalLinkingMod2(cache, sigma, tau) == Parity(1)) {
            ++result.count;
            result.positives.emplace_back(sigma, tau);
        }
    });
    result.parity = Parity(result.count);
    return result;
}

Parity sphericalCgs(const SphericalConfiguration& s) {
    return sphericalCgsDetailed(s).parity;
}

}  // namespace vkcgs
