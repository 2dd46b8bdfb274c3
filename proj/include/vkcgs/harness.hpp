#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vkcgs/config_io.hpp"
#include "vkcgs/constructions.hpp"

namespace vkcgs {

/// The verification suites. Each one samples random exact-rational
/// general-position configurations and checks a parity statement or an
/// equality between invariants computed along independent code paths.
enum class Statement {
    TrPlus,         // v = 1 on the full Delta_{d+1}
    VkfPlus,        // skeleton v = 1 (d even) / cgs = 1 (d odd)
    LemmaPai,       // v of the restriction equals skeleton v / cgs
    LemmaRecCone,   // cone equalities (one dimension up)
    LemmaRecLink,   // link equalities (to the sphere)
    ProofIdentity,  // boundary-exchange and telescoping identities
    RadonUnique,    // exactly one intersecting complementary partition
    FootnoteEven,   // mixed pair count even and nonzero (d odd)
    LkSymmetry,     // lk2(sigma, tau) = lk2(tau, sigma)
};

/// Parses the CLI identifier (e.g. "tr-plus"); throws std::invalid_argument
/// on unknown names.
Statement parseStatement(const std::string& name);
std::string statementName(Statement s);

/// Number of points a statement samples per trial.
int statementPointCount(Statement s, int d);

struct RunConfig {
    Statement statement = Statement::TrPlus;
    int d = 1;
    int trials = 1;
    std::uint64_t seed = 0;
    long bound = 1000;
    int epsilonExponent = 20;
    int workers = 0;  // 0 = pick automatically
    bool verbose = false;
};

struct TrialReport {
    int trialIndex = 0;
    std::uint64_t derivedSeed = 0;
    VertexConfiguration configuration;
    Json invariants;  // statement-specific computed values
    std::vector<FacePair> witnesses;
    bool pass = false;
    int degenerateResamples = 0;
    bool retryCapExceeded = false;
    Json extra;  // auxiliary payload (e.g. the cone configuration)
};

struct RunReport {
    RunConfig config;
    std::vector<TrialReport> trials;
    bool aggregatePass = false;
    bool retryCapExceeded = false;
    long trialsPassed = 0;
    long degenerateResamplesTotal = 0;
    double wallSeconds = 0.0;  // console-only; never serialized
};

/// Uniform integer coordinates in [-bound, bound], resampling the whole
/// configuration until it is in general position (cap 1000). Deterministic
/// in (d, pointCount, bound, seed).
VertexConfiguration sampleConfiguration(int d, int pointCount, long bound,
                                        std::uint64_t seed, int* resamples = nullptr);

/// Points (t, t^2, ..., t^d) for t = 1..pointCount; always general position.
VertexConfiguration momentCurveConfiguration(int d, int pointCount);

/// Runs rc.trials independent trials (possibly concurrently; the report is
/// identical to sequential execution). Throws UnsupportedStatementDimension
/// for statement/dimension combinations that are undefined.
RunReport runVerification(const RunConfig& rc);

/// Report document: {"statement", "dim", "trials", "seed", "bound",
/// "aggregatePass", "failures": [...], "summary": {...}}; verbose adds
/// "trialReports". Deterministic byte-for-byte for a fixed RunConfig.
Json reportToJson(const RunReport& report);
Json trialToJson(const TrialReport& trial);

}  // namespace vkcgs
