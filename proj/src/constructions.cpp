#include "vkcgs/constructions.hpp"

#include <algorithm>

namespace vkcgs {

namespace {

constexpr int kConeRetryCap = 1000;

/// Maximum coordinate spread of the base, or 1 when all points coincide.
Rational coordinateSpread(const VertexConfiguration& base) {
    Rational spread = 0;
    for (int c = 0; c < base.d; ++c) {
        Rational lo = base.points.front()[static_cast<std::size_t>(c)];
        Rational hi = lo;
        for (const auto& p : base.points) {
            lo = std::min(lo, p[static_cast<std::size_t>(c)]);
            hi = std::max(hi, p[static_cast<std::size_t>(c)]);
        }
        spread = std::max(spread, Rational(hi - lo));
    }
    if (spread == 0) {
        spread = 1;
    }
    return spread;
}

Point centroid(const VertexConfiguration& base) {
    Point c(static_cast<std::size_t>(base.d), Rational(0));
    for (const auto& p : base.points) {
        for (int i = 0; i < base.d; ++i) {
            c[static_cast<std::size_t>(i)] += p[static_cast<std::size_t>(i)];
        }
    }
    const Rational n(base.vertexCount());
    for (auto& v : c) {
        v /= n;
    }
    return c;
}

}  // namespace

VertexConfiguration coneLiftUnperturbed(const VertexConfiguration& base) {
    if (base.vertexCount() == 0) {
        throw DimensionMismatch("cannot cone an empty configuration");
    }
    const Rational height = coordinateSpread(base);
    VertexConfiguration out;
    out.d = base.d + 1;
    out.points.reserve(base.points.size() + 1);
    for (const auto& p : base.points) {
        Point lifted = p;
        lifted.emplace_back(0);
        out.points.push_back(std::move(lifted));
    }
    Point apex = centroid(base);
    apex.push_back(height);
    out.points.push_back(std::move(apex));
    return out;
}

ConeConfiguration coneConfiguration(const VertexConfiguration& base,
                                    std::uint64_t perturbationSeed, int epsilonExponent) {
    if (epsilonExponent < 1) {
        throw InvalidDimension("epsilonExponent must be positive");
    }
    const VertexConfiguration lift = coneLiftUnperturbed(base);
    const Rational height = coordinateSpread(base);

    // Perturbations are j / 2^{E+10} with |j| <= floor(H * 2^10), so each
    // offset lies in [-H * 2^-E, H * 2^-E] and has denominator 2^{E+10}.
    BigInt maxNumerator = floorRational(height * 1024);
    if (maxNumerator < 1) {
        maxNumerator = 1;
    }
    BigInt denom = BigInt(1) << (epsilonExponent + 10);

    std::uint64_t attemptSeed = perturbationSeed;
    for (int attempt = 0; attempt < kConeRetryCap; ++attempt) {
        SplitMix64 gen(attemptSeed);
        VertexConfiguration candidate = lift;
        for (auto& point : candidate.points) {
            for (auto& coord : point) {
                const BigInt j = gen.nextBigIntInRange(-maxNumerator, maxNumerator);
                coord += Rational(j, denom);
            }
        }
        if (isGeneralPosition(candidate)) {
            ConeConfiguration cone;
            cone.base = base;
            cone.result = std::move(candidate);
            cone.apexIndex = base.vertexCount();
            cone.epsilon = height / Rational(BigInt(1) << epsilonExponent);
            cone.perturbationSeed = perturbationSeed;
            cone.epsilonExponent = epsilonExponent;
            cone.retries = attempt;
            return cone;
        }
        attemptSeed = splitmix64(attemptSeed);
    }
    throw RetryCapExceeded("cone perturbation stayed degenerate after 1000 attempts");
}

LinkConfiguration linkConfiguration(const VertexConfiguration& base, int center) {
    if (center < 0 || center >= base.vertexCount()) {
        throw IndexOutOfRange("link center outside the configuration");
    }
    LinkConfiguration link;
    link.base = base;
    link.center = center;
    link.result.d = base.d;
    link.result.vectors.reserve(static_cast<std::size_t>(base.vertexCount()) - 1);
    const Point& origin = base.points[static_cast<std::size_t>(center)];
    for (int b = 0; b < base.vertexCount(); ++b) {
        if (b == center) continue;
        Point v(static_cast<std::size_t>(base.d));
        bool zero = true;
        for (int c = 0; c < base.d; ++c) {
            v[static_cast<std::size_t>(c)] =
                base.points[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] -
                origin[static_cast<std::size_t>(c)];
            zero = zero && v[static_cast<std::size_t>(c)] == 0;
        }
        if (zero) {
            throw DegenerateConfiguration("coincident points produce a zero link vector",
                                          {center, b});
        }
        link.result.vectors.push_back(std::move(v));
    }
    return link;
}

}  // namespace vkcgs
