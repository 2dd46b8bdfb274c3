#include "doctest.h"

#include <algorithm>
#include <set>

#include "vkcgs/simplicial.hpp"

using namespace vkcgs;

TEST_CASE("enumerateFaces") {
    const auto edges = enumerateFaces(2, 1);
    REQUIRE(edges.size() == 3);
    CHECK(edges[0] == Face({0, 1}));
    CHECK(edges[1] == Face({0, 2}));
    CHECK(edges[2] == Face({1, 2}));

    CHECK(enumerateFaces(5, 2).size() == 20);  // C(6,3)
    CHECK(enumerateFaces(4, 4) == std::vector<Face>{Face({0, 1, 2, 3, 4})});
    CHECK_THROWS_AS(enumerateFaces(3, 4), InvalidDimension);
    CHECK_THROWS_AS(enumerateFaces(3, -1), InvalidDimension);
}

TEST_CASE("face lists are sorted and duplicate-free") {
    for (int N = 1; N <= 6; ++N) {
        for (int k = 0; k <= N; ++k) {
            const auto faces = enumerateFaces(N, k);
            CHECK(std::is_sorted(faces.begin(), faces.end()));
            CHECK(std::adjacent_find(faces.begin(), faces.end()) == faces.end());
        }
    }
}

TEST_CASE("skeleton") {
    const Complex k5 = skeleton(4, 1);
    CHECK(k5.faces().size() == 15);  // 5 vertices + 10 edges

    CHECK(fullSimplex(2).faces().size() == 7);
    CHECK(skeleton(6, 2).faces().size() == 63);  // 7 + 21 + 35
}

TEST_CASE("complement") {
    CHECK(complement(Face({0, 1}), 4) == Face({2, 3, 4}));
    CHECK(complement(Face({2}), 2) == Face({0, 1}));
    const Face f({1, 3});
    CHECK(complement(complement(f, 5), 5) == f);
    CHECK_THROWS_AS(complement(Face({0, 1, 2}), 2), EmptyComplement);
}

TEST_CASE("boundaryFacets") {
    const auto b = boundaryFacets(Face({0, 1, 2}));
    CHECK(b == std::vector<Face>{Face({1, 2}), Face({0, 2}), Face({0, 1})});
    CHECK(boundaryFacets(Face({3, 5})) == std::vector<Face>{Face({5}), Face({3})});
    CHECK(boundaryFacets(Face({0, 1, 2})).size() == 3);  // (d+1)/2-face for d=3
    CHECK_THROWS_AS(boundaryFacets(Face({4})), NoBoundary);
    CHECK(boundaryFacetsOrEmpty(Face({4})).empty());
}

TEST_CASE("disjointPairs") {
    // full Delta_2, totalDim 1: the three (vertex, opposite edge) pairs
    const auto small = disjointPairs(fullSimplex(2), 1);
    REQUIRE(small.size() == 3);
    for (const auto& [a, b] : small) {
        CHECK(a.dim() + b.dim() == 1);
        CHECK(a.disjointFrom(b));
    }

    CHECK(disjointPairs(skeleton(4, 1), 2).size() == 15);  // disjoint K5 edge pairs

    // full Delta_{d+1} with totalDim d: exactly the complementary partitions
    for (int d = 1; d <= 4; ++d) {
        const auto pairs = disjointPairs(fullSimplex(d + 1), d);
        CHECK(pairs.size() == (1u << (d + 1)) - 1);
        for (const auto& [a, b] : pairs) {
            CHECK(b == complement(a, d + 1));
            CHECK(a < b);
        }
    }
}

TEST_CASE("facet duality: tau in boundary(sigma) iff comp(sigma) in boundary(comp(tau))") {
    for (int N = 2; N <= 6; ++N) {
        std::vector<Face> all;
        for (int k = 0; k <= N; ++k) {
            auto level = enumerateFaces(N, k);
            all.insert(all.end(), level.begin(), level.end());
        }
        for (const auto& sigma : all) {
            if (sigma.dim() == N) continue;  // complement undefined
            for (const auto& tau : all) {
                if (tau.dim() == N) continue;
                const bool lhs = tau != sigma && tau.isSubsetOf(sigma);
                const Face sigmaBar = complement(sigma, N);
                const Face tauBar = complement(tau, N);
                const bool rhs = sigmaBar != tauBar && sigmaBar.isSubsetOf(tauBar);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("face validation") {
    CHECK_THROWS_AS(Face({}), InvalidDimension);
    CHECK_THROWS_AS(Face({1, 1}), InvalidDimension);
    CHECK_THROWS_AS(Face({-1, 2}), IndexOutOfRange);
    CHECK(Face({3, 1, 2}).vertices() == std::vector<int>{1, 2, 3});
}

TEST_CASE("parity arithmetic") {
    CHECK(Parity(1) + Parity(1) == Parity(0));
    CHECK(Parity(1) + Parity(0) == Parity(1));
    CHECK(Parity(7) == Parity(1));
    Parity p;
    p += Parity(1);
    p += Parity(1);
    p += Parity(1);
    CHECK(p == Parity(1));
}
