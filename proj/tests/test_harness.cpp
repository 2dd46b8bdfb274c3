#include "doctest.h"

#include "vkcgs/harness.hpp"

using namespace vkcgs;

TEST_CASE("splitmix64 reference values") {
    // first outputs of the stream seeded with 0 (standard test vector)
    SplitMix64 gen(0);
    CHECK(gen.next() == 0xE220A8397B1DCDAFULL);
    CHECK(gen.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(gen.next() == 0x06C45D188009454FULL);
    CHECK(deriveTrialSeed(0, 0) == 0xE220A8397B1DCDAFULL);
}

TEST_CASE("sampleConfiguration determinism and postcondition") {
    const VertexConfiguration a = sampleConfiguration(2, 5, 1000, 42);
    const VertexConfiguration b = sampleConfiguration(2, 5, 1000, 42);
    CHECK(a.points == b.points);
    CHECK(isGeneralPosition(a));

    const VertexConfiguration c = sampleConfiguration(2, 5, 1000, 43);
    CHECK(a.points != c.points);

    CHECK_THROWS_AS(sampleConfiguration(2, 5, 3, 42), std::invalid_argument);
    CHECK_THROWS_AS(sampleConfiguration(2, 0, 10, 42), std::invalid_argument);
}

TEST_CASE("moment curve fixtures") {
    const VertexConfiguration k5 = momentCurveConfiguration(2, 5);
    REQUIRE(k5.vertexCount() == 5);
    CHECK(k5.points[4][0] == 5);
    CHECK(k5.points[4][1] == 25);
    CHECK(isGeneralPosition(k5));

    const VertexConfiguration k6 = momentCurveConfiguration(3, 6);
    CHECK(k6.points[5][2] == 216);
    CHECK(isGeneralPosition(k6));

    const VertexConfiguration line = momentCurveConfiguration(1, 4);
    CHECK(line.points[2][0] == 3);
}

TEST_CASE("statement parsing") {
    CHECK(parseStatement("tr-plus") == Statement::TrPlus);
    CHECK(parseStatement("proof-identity") == Statement::ProofIdentity);
    CHECK(statementName(Statement::LemmaRecCone) == "lemma-rec-cone");
    CHECK_THROWS_AS(parseStatement("nope"), std::invalid_argument);
    CHECK(statementPointCount(Statement::TrPlus, 3) == 5);
    CHECK(statementPointCount(Statement::RadonUnique, 3) == 5);
    CHECK(statementPointCount(Statement::LemmaPai, 3) == 6);
}

TEST_CASE("runVerification rejects incompatible dimensions at parse time") {
    RunConfig rc;
    rc.statement = Statement::FootnoteEven;
    rc.d = 2;
    rc.trials = 1;
    rc.seed = 1;
    CHECK_THROWS_AS(runVerification(rc), UnsupportedStatementDimension);
    rc.d = 0;
    CHECK_THROWS_AS(runVerification(rc), UnsupportedStatementDimension);
}

TEST_CASE("report schema and reproducibility across worker counts") {
    RunConfig rc;
    rc.statement = Statement::VkfPlus;
    rc.d = 3;
    rc.trials = 24;
    rc.seed = 20240229;
    rc.workers = 1;
    const RunReport sequential = runVerification(rc);
    CHECK(sequential.aggregatePass);
    CHECK(sequential.trialsPassed == 24);

    rc.workers = 4;
    const RunReport threaded = runVerification(rc);
    CHECK(reportToJson(sequential).dump(2) == reportToJson(threaded).dump(2));

    const Json doc = reportToJson(sequential);
    CHECK(doc["statement"] == "vkf-plus");
    CHECK(doc["dim"] == 3);
    CHECK(doc["trials"] == 24);
    CHECK(doc["seed"] == 20240229);
    CHECK(doc["bound"] == 1000);
    CHECK(doc["aggregatePass"] == true);
    CHECK(doc["failures"].is_array());
    CHECK(doc["failures"].empty());
    CHECK(doc["summary"]["trialsPassed"] == 24);
    CHECK(doc["summary"].contains("degenerateResamplesTotal"));
    CHECK_FALSE(doc.contains("trialReports"));  // only with verbose

    rc.verbose = true;
    rc.workers = 2;
    const Json verboseDoc = reportToJson(runVerification(rc));
    REQUIRE(verboseDoc.contains("trialReports"));
    CHECK(verboseDoc["trialReports"].size() == 24);
    const Json& first = verboseDoc["trialReports"][0];
    CHECK(first.contains("trialIndex"));
    CHECK(first.contains("derivedSeed"));
    CHECK(first.contains("configuration"));
    CHECK(first.contains("invariants"));
    CHECK(first.contains("witnesses"));
    CHECK(first.contains("pass"));
    CHECK_FALSE(first["witnesses"].empty());  // vkf-plus asserts existence
}

TEST_CASE("trial reports echo a replayable configuration") {
    RunConfig rc;
    rc.statement = Statement::TrPlus;
    rc.d = 2;
    rc.trials = 3;
    rc.seed = 5;
    rc.verbose = true;
    const RunReport report = runVerification(rc);
    const Json doc = reportToJson(report);
    for (const auto& trial : doc["trialReports"]) {
        const VertexConfiguration echoed = configurationFromJson(trial["configuration"]);
        CHECK(isGeneralPosition(echoed));
        CHECK(vanKampenNumber(echoed, fullSimplex(echoed.vertexCount() - 1)) == Parity(1));
    }
}

TEST_CASE("configuration JSON round trip") {
    VertexConfiguration cfg;
    cfg.d = 2;
    cfg.points = {{Rational(1, 3), Rational(-2)}, {Rational(0), Rational(7, 2)},
                  {Rational(5), Rational(5)}};
    const Json j = configurationToJson(cfg);
    CHECK(j["points"][0][0] == "1/3");
    CHECK(j["points"][0][1] == "-2");
    const VertexConfiguration back = configurationFromJson(j);
    CHECK(back.d == 2);
    CHECK(back.points == cfg.points);

    // integer shorthand and bare integers both parse
    const Json shorthand = Json::parse(R"({"dim": 1, "points": [["5"], [7], ["-9/3"]]})");
    const VertexConfiguration sh = configurationFromJson(shorthand);
    CHECK(sh.points[0][0] == 5);
    CHECK(sh.points[1][0] == 7);
    CHECK(sh.points[2][0] == -3);

    CHECK_THROWS_AS(configurationFromJson(Json::parse(R"({"dim": 2, "points": [[1]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(configurationFromJson(Json::parse(R"({"points": [[1]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(configurationFromJson(Json::parse(R"({"dim": 1, "points": [[1.5]]})")),
                    std::invalid_argument);

    SphericalConfiguration s;
    s.d = 2;
    s.vectors = {{Rational(1), Rational(0)}, {Rational(-1, 2), Rational(3)}};
    const Json sj = sphericalToJson(s);
    CHECK(sj.contains("vectors"));
    const SphericalConfiguration sBack = sphericalFromJson(sj);
    CHECK(sBack.vectors == s.vectors);
    CHECK_THROWS_AS(
        sphericalFromJson(Json::parse(R"({"dim": 2, "vectors": [["0", "0"]]})")),
        std::invalid_argument);
}

TEST_CASE("failures echo the full offending configuration") {
    // Build a synthetic failing report by checking a statement that is
    // false for this sample size: tr-plus demands witnesses, so a doctored
    // bound small enough to go degenerate would exit via resampling instead.
    // Use the real mechanism: serialize a failing trial by hand.
    TrialReport trial;
    trial.trialIndex = 3;
    trial.derivedSeed = 17;
    trial.configuration = momentCurveConfiguration(1, 3);
    trial.invariants["v"] = 0;
    trial.pass = false;
    RunReport report;
    report.config.statement = Statement::TrPlus;
    report.config.d = 1;
    report.config.trials = 1;
    report.config.seed = 17;
    report.trials.push_back(trial);
    report.aggregatePass = false;
    const Json doc = reportToJson(report);
    REQUIRE(doc["failures"].size() == 1);
    CHECK(doc["failures"][0]["configuration"]["points"].size() == 3);
    CHECK(doc["aggregatePass"] == false);
}
