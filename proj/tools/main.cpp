// vkcgs: exact mod-2 invariants of simplexwise-linear maps of simplices,
// plus a seeded randomized verification harness for the parity statements
// they satisfy. Subcommands: verify, compute, sample, fixture.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "vkcgs/harness.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRetryCap = 3;

vkcgs::Face parseFaceList(const std::string& text) {
    std::vector<int> verts;
    std::string token;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!token.empty()) {
                verts.push_back(std::stoi(token));
                token.clear();
            }
        } else if (ch == ' ') {
            continue;
        } else {
            token.push_back(ch);
        }
    }
    return vkcgs::Face(std::move(verts));
}

void emit(const vkcgs::Json& j) { std::cout << j.dump(2) << "\n"; }

int runVerify(const vkcgs::RunConfig& rc, const std::string& outPath) {
    const vkcgs::RunReport report = vkcgs::runVerification(rc);
    const vkcgs::Json doc = vkcgs::reportToJson(report);
    if (!outPath.empty()) {
        std::ofstream out(outPath);
        if (!out) {
            std::cerr << "cannot write '" << outPath << "'\n";
            return kExitUsage;
        }
        out << doc.dump(2) << "\n";
    } else {
        emit(doc);
    }
    std::cerr << "statement=" << vkcgs::statementName(rc.statement) << " dim=" << rc.d
              << " trials=" << rc.trials << " passed=" << report.trialsPassed << "/"
              << rc.trials << " aggregate=" << (report.aggregatePass ? "PASS" : "FAIL")
              << " (" << report.wallSeconds << "s)\n";
    if (report.retryCapExceeded) {
        return kExitRetryCap;
    }
    return report.aggregatePass ? kExitPass : kExitPropertyFailed;
}

int runCompute(const std::string& inputPath, const std::string& invariant,
               const std::string& sigmaText, const std::string& tauText, bool verbose) {
    const vkcgs::VertexConfiguration cfg = vkcgs::loadConfiguration(inputPath);
    vkcgs::Json out;

    if (invariant == "lk") {
        if (sigmaText.empty() || tauText.empty()) {
            throw std::invalid_argument("lk needs --sigma and --tau");
        }
        const vkcgs::Face sigma = parseFaceList(sigmaText);
        const vkcgs::Face tau = parseFaceList(tauText);
        out["lk"] = vkcgs::linkingNumberMod2(cfg, sigma, tau).value();
        emit(out);
        return kExitPass;
    }

    // The remaining invariants read the whole configuration; report the
    // offending subset up front if it is degenerate.
    if (const auto bad = vkcgs::findDegenerateSubset(cfg)) {
        vkcgs::Json err;
        err["error"] = "degenerate configuration";
        err["violatingPointSubset"] = *bad;
        std::cerr << err.dump(2) << "\n";
        return kExitUsage;
    }

    if (invariant == "v") {
        const auto v = vkcgs::vanKampenDetailed(cfg, vkcgs::fullSimplex(cfg.vertexCount() - 1));
        out["v"] = v.parity.value();
        out["intersectingPairs"] = vkcgs::facePairsToJson(v.positives);
    } else if (invariant == "v-skeleton") {
        if (cfg.d % 2 != 0) {
            throw std::invalid_argument("v-skeleton is the d/2-skeleton invariant; d must be even");
        }
        const auto v =
            vkcgs::vanKampenDetailed(cfg, vkcgs::skeleton(cfg.vertexCount() - 1, cfg.d / 2));
        out["v"] = v.parity.value();
        out["crossingPairs"] = vkcgs::facePairsToJson(v.positives);
    } else if (invariant == "c") {
        const auto c = vkcgs::cgsDetailed(cfg);
        out["c"] = c.parity.value();
        out["linkedPairs"] = vkcgs::facePairsToJson(c.positives);
    } else if (invariant == "mixed") {
        const auto mixed = vkcgs::mixedPairParity(cfg);
        out["parity"] = mixed.parity.value();
        out["count"] = mixed.count;
        if (verbose) {
            out["pairs"] = vkcgs::facePairsToJson(mixed.positives);
        }
    } else {
        throw std::invalid_argument("unknown invariant '" + invariant +
                                    "' (expected v, v-skeleton, c, mixed, lk)");
    }
    emit(out);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact van Kampen / Conway-Gordon-Sachs mod-2 invariants and a "
                 "randomized verification harness over exact rational configurations"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "Run one verification suite");
    std::string statementName;
    vkcgs::RunConfig rc;
    std::string outPath;
    verify->add_option("--statement", statementName,
                       "tr-plus | vkf-plus | lemma-pai | lemma-rec-cone | lemma-rec-link "
                       "| proof-identity | radon-unique | footnote-even | lk-symmetry")
        ->required();
    verify->add_option("--dim", rc.d, "ambient dimension d")->required();
    verify->add_option("--trials", rc.trials, "number of sampled trials")->required();
    verify->add_option("--seed", rc.seed, "64-bit master seed")->required();
    verify->add_option("--bound", rc.bound, "coordinate bound (default 1000)");
    verify->add_option("--epsilon-exponent", rc.epsilonExponent,
                       "cone perturbation exponent (default 20)");
    verify->add_option("--workers", rc.workers, "worker threads (0 = auto)");
    verify->add_option("--out", outPath, "write the JSON report to this file");
    verify->add_flag("--verbose", rc.verbose, "include every trial in the report");

    // compute
    auto* compute = app.add_subcommand("compute", "Compute one invariant of a configuration file");
    std::string inputPath;
    std::string invariant;
    std::string sigmaText;
    std::string tauText;
    bool computeVerbose = false;
    compute->add_option("--input", inputPath, "configuration JSON file")->required();
    compute->add_option("--invariant", invariant, "v | v-skeleton | c | mixed | lk")->required();
    compute->add_option("--sigma", sigmaText, "comma-separated vertex list (for lk)");
    compute->add_option("--tau", tauText, "comma-separated vertex list (for lk)");
    compute->add_flag("--verbose", computeVerbose, "include witness pairs");

    // sample
    auto* sample = app.add_subcommand("sample", "Sample a general-position configuration");
    int sampleDim = 0;
    int samplePoints = 0;
    std::uint64_t sampleSeed = 0;
    long sampleBound = 1000;
    sample->add_option("--dim", sampleDim)->required();
    sample->add_option("--points", samplePoints)->required();
    sample->add_option("--seed", sampleSeed)->required();
    sample->add_option("--bound", sampleBound);

    // fixture
    auto* fixture = app.add_subcommand("fixture", "Print a deterministic fixture");
    std::string fixtureName;
    int fixtureDim = 0;
    int fixturePoints = 0;
    fixture->add_option("--name", fixtureName, "moment-curve")->required();
    fixture->add_option("--dim", fixtureDim)->required();
    fixture->add_option("--points", fixturePoints)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            rc.statement = vkcgs::parseStatement(statementName);
            return runVerify(rc, outPath);
        }
        if (compute->parsed()) {
            return runCompute(inputPath, invariant, sigmaText, tauText, computeVerbose);
        }
        if (sample->parsed()) {
            emit(vkcgs::configurationToJson(
                vkcgs::sampleConfiguration(sampleDim, samplePoints, sampleBound, sampleSeed)));
            return kExitPass;
        }
        if (fixture->parsed()) {
            if (fixtureName != "moment-curve") {
                throw std::invalid_argument("unknown fixture '" + fixtureName + "'");
            }
            emit(vkcgs::configurationToJson(
                vkcgs::momentCurveConfiguration(fixtureDim, fixturePoints)));
            return kExitPass;
        }
    } catch (const vkcgs::RetryCapExceeded& e) {
        std::cerr << "retry cap exceeded: " << e.what() << "\n";
        return kExitRetryCap;
    } catch (const vkcgs::DegenerateConfiguration& e) {
        vkcgs::Json err;
        err["error"] = "degenerate configuration";
        err["what"] = e.what();
        err["violatingPointSubset"] = e.indices();
        std::cerr << err.dump(2) << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
