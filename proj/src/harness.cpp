#include "vkcgs/harness.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace vkcgs {

namespace {

constexpr int kSampleRetryCap = 1000;

struct StatementOutcome {
    Json invariants;
    std::vector<FacePair> witnesses;
    bool pass = false;
    Json extra;
};

std::vector<Point> drawIntegerPoints(SplitMix64& gen, int d, int pointCount, long bound) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(pointCount));
    for (int i = 0; i < pointCount; ++i) {
        Point p;
        p.reserve(static_cast<std::size_t>(d));
        for (int c = 0; c < d; ++c) {
            p.emplace_back(BigInt(gen.nextInRange(-bound, bound)));
        }
        pts.push_back(std::move(p));
    }
    return pts;
}

/// Draws configurations from an existing stream until one is in general
/// position. Shared by sampleConfiguration and the per-trial sampler so both
/// consume the stream identically.
VertexConfiguration sampleFromStream(SplitMix64& gen, int d, int pointCount, long bound,
                                     int* resamples) {
    for (int attempt = 0; attempt < kSampleRetryCap; ++attempt) {
        VertexConfiguration cfg;
        cfg.d = d;
        cfg.points = drawIntegerPoints(gen, d, pointCount, bound);
        if (isGeneralPosition(cfg)) {
            return cfg;
        }
        if (resamples != nullptr) {
            ++*resamples;
        }
    }
    throw RetryCapExceeded("no general-position configuration after 1000 draws");
}

Parity trMapVanKampen(const VertexConfiguration& cfg) {
    // v over the full simplex on all vertices of a Delta_{d+1} -> R^d map.
    return vanKampenNumber(cfg, fullSimplex(cfg.vertexCount() - 1));
}

// ---- per-statement checks ----

StatementOutcome checkTrPlus(const VertexConfiguration& cfg) {
    StatementOutcome out;
    const auto v = vanKampenDetailed(cfg, fullSimplex(cfg.vertexCount() - 1));
    out.invariants["v"] = v.parity.value();
    out.invariants["intersectingPairs"] = v.count;
    out.witnesses = v.positives;
    out.pass = v.parity == Parity(1) && !v.positives.empty();
    return out;
}

StatementOutcome checkVkfPlus(const VertexConfiguration& cfg, int d) {
    StatementOutcome out;
    if (d % 2 == 0) {
        const auto v = vanKampenDetailed(cfg, skeleton(d + 2, d / 2));
        out.invariants["vSkeleton"] = v.parity.value();
        out.invariants["intersectingPairs"] = v.count;
        out.witnesses = v.positives;
        out.pass = v.parity == Parity(1) && !v.positives.empty();
    } else {
        const auto c = cgsDetailed(cfg);
        out.invariants["c"] = c.parity.value();
        out.invariants["linkedPairs"] = c.count;
        out.witnesses = c.positives;
        out.pass = c.parity == Parity(1) && !c.positives.empty();
    }
    return out;
}

StatementOutcome checkLemmaPai(const VertexConfiguration& cfg, int d) {
    StatementOutcome out;
    const auto lhs = vanKampenDetailed(cfg.prefix(d + 2), fullSimplex(d + 1));
    out.invariants["vRestriction"] = lhs.parity.value();
    Parity rhs;
    if (d % 2 == 0) {
        rhs = vanKampenNumber(cfg, skeleton(d + 2, d / 2));
        out.invariants["vSkeleton"] = rhs.value();
    } else {
        rhs = cgsNumber(cfg);
        out.invariants["c"] = rhs.value();
    }
    out.witnesses = lhs.positives;
    out.pass = lhs.parity == rhs;
    return out;
}

StatementOutcome checkLemmaRecCone(const VertexConfiguration& cfg, int d,
                                   std::uint64_t perturbationSeed, int epsilonExponent) {
    StatementOutcome out;
    const ConeConfiguration cone = coneConfiguration(cfg, perturbationSeed, epsilonExponent);
    out.extra["cone"] = configurationToJson(cone.result);
    out.extra["apexIndex"] = cone.apexIndex;
    out.extra["perturbationSeed"] = cone.perturbationSeed;

    // v is preserved by coning a map of Delta_{d+1}: compare the cone over
    // the first d+2 base vertices with the base restricted to them.
    std::vector<int> coneOverTr;
    for (int v = 0; v < d + 2; ++v) coneOverTr.push_back(v);
    coneOverTr.push_back(cone.apexIndex);
    const Parity vCone = trMapVanKampen(cone.result.restrictTo(coneOverTr));
    const Parity vBase = trMapVanKampen(cfg.prefix(d + 2));
    out.invariants["vCone"] = vCone.value();
    out.invariants["vBase"] = vBase.value();
    bool pass = vCone == vBase;

    if (d % 2 == 0) {
        const Parity cCone = cgsNumber(cone.result);
        const Parity vSkeleton = vanKampenNumber(cfg, skeleton(d + 2, d / 2));
        out.invariants["cCone"] = cCone.value();
        out.invariants["vSkeleton"] = vSkeleton.value();
        pass = pass && cCone == vSkeleton;
    } else {
        const Parity vConeSkeleton =
            vanKampenNumber(cone.result, skeleton(d + 3, (d + 1) / 2));
        const Parity cBase = cgsNumber(cfg);
        out.invariants["vConeSkeleton"] = vConeSkeleton.value();
        out.invariants["cBase"] = cBase.value();
        pass = pass && vConeSkeleton == cBase;
    }
    out.pass = pass;
    return out;
}

StatementOutcome checkLemmaRecLink(const VertexConfiguration& cfg, int d) {
    StatementOutcome out;
    bool pass = true;
    Json perVertex = Json::array();
    if (d % 2 == 1) {
        const Parity c = cgsNumber(cfg);
        out.invariants["c"] = c.value();
        const Complex K = skeleton(d + 1, (d + 1) / 2);
        for (int a = 0; a < cfg.vertexCount(); ++a) {
            const auto link = linkConfiguration(cfg, a);
            const Parity v = sphericalVanKampen(link.result, K);
            perVertex.push_back(v.value());
            pass = pass && v == c;
        }
        out.invariants["sphericalVPerVertex"] = std::move(perVertex);
    } else {
        const Parity v = vanKampenNumber(cfg, skeleton(d + 2, d / 2));
        out.invariants["vSkeleton"] = v.value();
        Parity sum;
        for (int a = 0; a < cfg.vertexCount(); ++a) {
            const auto link = linkConfiguration(cfg, a);
            const Parity c = sphericalCgs(link.result);
            perVertex.push_back(c.value());
            sum += c;
        }
        out.invariants["sphericalCgsPerVertex"] = std::move(perVertex);
        out.invariants["sphericalCgsSum"] = sum.value();
        pass = sum == v;
    }
    out.pass = pass;
    return out;
}

StatementOutcome checkProofIdentity(const VertexConfiguration& cfg, int d) {
    StatementOutcome out;
    const int apex = d + 2;  // the vertex of Delta_{d+2} outside Delta_{d+1}
    const int maxDim = (d - 1) / 2;
    AffineDependenceCache cache(cfg);

    bool exchangeOk = true;
    bool telescopeOk = true;
    for (int k = 0; k <= maxDim; ++k) {
        Parity lhsSum;
        for (const auto& sigma : enumerateFaces(d + 1, k)) {
            const Face bar = complement(sigma, d + 1);
            const auto boundaryBar = boundaryFacets(bar);
            const Parity coneWedge =
                subcomplexWedge(cache, {sigma.joined(apex)}, boundaryBar);
            const Parity direct = subcomplexWedge(cache, {sigma}, {bar});
            // Boundary exchange: the ends of the arcs f(*sigma) ^ f(bar)
            // split between the two sides with even total parity, so
            // *sigma ^ boundary(bar) = boundary(*sigma) ^ bar. The facets of
            // the cone cell are sigma, the cones over the facets of sigma,
            // and (for a vertex sigma) the bare apex.
            const Parity coneBoundaryWedge =
                subcomplexWedge(cache, boundaryFacets(sigma.joined(apex)), {bar});
            exchangeOk = exchangeOk && coneWedge == coneBoundaryWedge;
            lhsSum += direct + coneWedge;
        }
        Parity rhsSum;
        if (k > 0) {
            for (const auto& tau : enumerateFaces(d + 1, k - 1)) {
                const Face bar = complement(tau, d + 1);
                rhsSum += subcomplexWedge(cache, {tau.joined(apex)}, boundaryFacets(bar));
            }
        }
        telescopeOk = telescopeOk && lhsSum == rhsSum;
    }
    out.invariants["boundaryExchange"] = exchangeOk;
    out.invariants["telescoping"] = telescopeOk;
    out.pass = exchangeOk && telescopeOk;
    return out;
}

StatementOutcome checkRadonUnique(const VertexConfiguration& cfg, int d) {
    StatementOutcome out;
    const auto v = vanKampenDetailed(cfg, fullSimplex(d + 1));
    out.invariants["intersectingPartitions"] = v.count;
    out.witnesses = v.positives;
    out.pass = v.count == 1;
    return out;
}

StatementOutcome checkFootnoteEven(const VertexConfiguration& cfg) {
    StatementOutcome out;
    const auto mixed = mixedPairParity(cfg);
    out.invariants["mixedParity"] = mixed.parity.value();
    out.invariants["mixedCount"] = mixed.count;
    out.witnesses = mixed.positives;
    out.pass = mixed.parity == Parity(0) && mixed.count >= 1;
    return out;
}

StatementOutcome checkLkSymmetry(const VertexConfiguration& cfg, int d) {
    StatementOutcome out;
    AffineDependenceCache cache(cfg);
    bool pass = true;
    long pairsChecked = 0;
    // Complementary pairs of Delta_{d+2} with both sides of dimension >= 1.
    const int N = d + 2;
    for (int size = 2; size <= N + 1 - 2; ++size) {
        for (const auto& sigma : enumerateFaces(N, size - 1)) {
            if (!sigma.contains(0)) continue;  // each unordered pair once
            const Face tau = complement(sigma, N);
            const Parity ab = linkingNumberMod2(cache, sigma, tau);
            const Parity ba = linkingNumberMod2(cache, tau, sigma);
            pass = pass && ab == ba;
            ++pairsChecked;
            if (ab == Parity(1)) {
                out.witnesses.emplace_back(sigma, tau);
            }
        }
    }
    out.invariants["pairsChecked"] = pairsChecked;
    out.pass = pass;
    return out;
}

StatementOutcome runStatement(const RunConfig& rc, const VertexConfiguration& cfg,
                              SplitMix64& gen) {
    switch (rc.statement) {
        case Statement::TrPlus:
            return checkTrPlus(cfg);
        case Statement::VkfPlus:
            return checkVkfPlus(cfg, rc.d);
        case Statement::LemmaPai:
            return checkLemmaPai(cfg, rc.d);
        case Statement::LemmaRecCone:
            return checkLemmaRecCone(cfg, rc.d, gen.next(), rc.epsilonExponent);
        case Statement::LemmaRecLink:
            return checkLemmaRecLink(cfg, rc.d);
        case Statement::ProofIdentity:
            return checkProofIdentity(cfg, rc.d);
        case Statement::RadonUnique:
            return checkRadonUnique(cfg, rc.d);
        case Statement::FootnoteEven:
            return checkFootnoteEven(cfg);
        case Statement::LkSymmetry:
            return checkLkSymmetry(cfg, rc.d);
    }
    throw std::logic_error("unreachable statement");
}

TrialReport runSingleTrial(const RunConfig& rc, int trialIndex) {
    TrialReport trial;
    trial.trialIndex = trialIndex;
    trial.derivedSeed = deriveTrialSeed(rc.seed, static_cast<std::uint64_t>(trialIndex));
    SplitMix64 gen(trial.derivedSeed);
    const int pointCount = statementPointCount(rc.statement, rc.d);

    for (int attempt = 0; attempt < kSampleRetryCap; ++attempt) {
        VertexConfiguration cfg;
        try {
            cfg = sampleFromStream(gen, rc.d, pointCount, rc.bound,
                                   &trial.degenerateResamples);
        } catch (const RetryCapExceeded&) {
            trial.retryCapExceeded = true;
            trial.pass = false;
            return trial;
        }
        try {
            StatementOutcome outcome = runStatement(rc, cfg, gen);
            trial.configuration = std::move(cfg);
            trial.invariants = std::move(outcome.invariants);
            trial.witnesses = std::move(outcome.witnesses);
            trial.extra = std::move(outcome.extra);
            trial.pass = outcome.pass;
            return trial;
        } catch (const DegenerateConfiguration&) {
            // Off general position after all; resample the whole trial.
            ++trial.degenerateResamples;
        } catch (const RetryCapExceeded&) {
            trial.configuration = std::move(cfg);
            trial.retryCapExceeded = true;
            trial.pass = false;
            return trial;
        }
    }
    trial.retryCapExceeded = true;
    trial.pass = false;
    return trial;
}

}  // namespace

Statement parseStatement(const std::string& name) {
    if (name == "tr-plus") return Statement::TrPlus;
    if (name == "vkf-plus") return Statement::VkfPlus;
    if (name == "lemma-pai") return Statement::LemmaPai;
    if (name == "lemma-rec-cone") return Statement::LemmaRecCone;
    if (name == "lemma-rec-link") return Statement::LemmaRecLink;
    if (name == "proof-identity") return Statement::ProofIdentity;
    if (name == "radon-unique") return Statement::RadonUnique;
    if (name == "footnote-even") return Statement::FootnoteEven;
    if (name == "lk-symmetry") return Statement::LkSymmetry;
    throw std::invalid_argument("unknown statement: '" + name + "'");
}

std::string statementName(Statement s) {
    switch (s) {
        case Statement::TrPlus: return "tr-plus";
        case Statement::VkfPlus: return "vkf-plus";
        case Statement::LemmaPai: return "lemma-pai";
        case Statement::LemmaRecCone: return "lemma-rec-cone";
        case Statement::LemmaRecLink: return "lemma-rec-link";
        case Statement::ProofIdentity: return "proof-identity";
        case Statement::RadonUnique: return "radon-unique";
        case Statement::FootnoteEven: return "footnote-even";
        case Statement::LkSymmetry: return "lk-symmetry";
    }
    throw std::logic_error("unreachable statement");
}

int statementPointCount(Statement s, int d) {
    switch (s) {
        case Statement::TrPlus:
        case Statement::RadonUnique:
            return d + 2;
        default:
            return d + 3;
    }
}

VertexConfiguration sampleConfiguration(int d, int pointCount, long bound,
                                        std::uint64_t seed, int* resamples) {
    if (d < 1) {
        throw std::invalid_argument("dimension must be at least 1");
    }
    if (pointCount < 1) {
        throw std::invalid_argument("pointCount must be at least 1");
    }
    if (bound < pointCount) {
        throw std::invalid_argument("bound must be at least pointCount");
    }
    SplitMix64 gen(seed);
    return sampleFromStream(gen, d, pointCount, bound, resamples);
}

VertexConfiguration momentCurveConfiguration(int d, int pointCount) {
    if (d < 1 || pointCount < 1) {
        throw std::invalid_argument("momentCurveConfiguration needs d >= 1, points >= 1");
    }
    VertexConfiguration cfg;
    cfg.d = d;
    cfg.points.reserve(static_cast<std::size_t>(pointCount));
    for (int t = 1; t <= pointCount; ++t) {
        Point p;
        p.reserve(static_cast<std::size_t>(d));
        BigInt power = 1;
        for (int c = 0; c < d; ++c) {
            power *= t;
            p.emplace_back(power);
        }
        cfg.points.push_back(std::move(p));
    }
    return cfg;
}

RunReport runVerification(const RunConfig& rc) {
    if (rc.d < 1) {
        throw UnsupportedStatementDimension("dimension must be at least 1");
    }
    if (rc.statement == Statement::FootnoteEven && rc.d % 2 == 0) {
        throw UnsupportedStatementDimension(
            "footnote-even is a statement about odd dimensions");
    }
    if (rc.trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (rc.bound < statementPointCount(rc.statement, rc.d)) {
        throw std::invalid_argument("bound must be at least the sampled point count");
    }

    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.config = rc;
    report.trials.resize(static_cast<std::size_t>(rc.trials));

    unsigned workers = rc.workers > 0 ? static_cast<unsigned>(rc.workers)
                                      : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(rc.trials));

    if (workers <= 1) {
        for (int i = 0; i < rc.trials; ++i) {
            report.trials[static_cast<std::size_t>(i)] = runSingleTrial(rc, i);
        }
    } else {
        // Trials are pure functions of (rc, index); any schedule produces
        // the same report.
        std::atomic<int> nextIndex{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&]() {
                for (;;) {
                    const int i = nextIndex.fetch_add(1);
                    if (i >= rc.trials) return;
                    report.trials[static_cast<std::size_t>(i)] = runSingleTrial(rc, i);
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    report.aggregatePass = true;
    for (const auto& trial : report.trials) {
        report.aggregatePass = report.aggregatePass && trial.pass;
        report.retryCapExceeded = report.retryCapExceeded || trial.retryCapExceeded;
        report.trialsPassed += trial.pass ? 1 : 0;
        report.degenerateResamplesTotal += trial.degenerateResamples;
    }
    report.wallSeconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Json trialToJson(const TrialReport& trial) {
    Json j;
    j["trialIndex"] = trial.trialIndex;
    j["derivedSeed"] = trial.derivedSeed;
    j["configuration"] = configurationToJson(trial.configuration);
    j["invariants"] = trial.invariants;
    j["witnesses"] = facePairsToJson(trial.witnesses);
    j["pass"] = trial.pass;
    j["degenerateResamples"] = trial.degenerateResamples;
    if (trial.retryCapExceeded) {
        j["retryCapExceeded"] = true;
    }
    if (!trial.extra.is_null()) {
        for (const auto& [key, value] : trial.extra.items()) {
            j[key] = value;
        }
    }
    return j;
}

Json reportToJson(const RunReport& report) {
    Json j;
    j["statement"] = statementName(report.config.statement);
    j["dim"] = report.config.d;
    j["trials"] = report.config.trials;
    j["seed"] = report.config.seed;
    j["bound"] = report.config.bound;
    j["aggregatePass"] = report.aggregatePass;
    Json failures = Json::array();
    for (const auto& trial : report.trials) {
        if (!trial.pass) {
            failures.push_back(trialToJson(trial));
        }
    }
    j["failures"] = std::move(failures);
    j["summary"] = Json{{"trialsPassed", report.trialsPassed},
                        {"degenerateResamplesTotal", report.degenerateResamplesTotal}};
    if (report.config.verbose) {
        Json all = Json::array();
        for (const auto& trial : report.trials) {
            all.push_back(trialToJson(trial));
        }
        j["trialReports"] = std::move(all);
    }
    return j;
}

}  // namespace vkcgs
