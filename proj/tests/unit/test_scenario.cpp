#include "wlp/errors.hpp"
#include "wlp/scenario.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace wlp;

namespace {

std::string salas_criteria() {
    return R"({
  "group": "Z",
  "weight": {"id": "salas", "alpha": "1"},
  "subset": {"kind": "naturals"},
  "p": 1,
  "analysis": "criteria",
  "horizon": 64,
  "criteria": {"inf": {"thresholds_exp2": [-1, -9]}, "series": {"N": 3}}
})";
}

Json certified(Json report) {
    report.erase("advisory");
    return report;
}

void expect_validation_error(const std::string& text, const std::string& fragment) {
    try {
        parse_scenario(text);
        FAIL() << "expected a validation error mentioning " << fragment;
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
}

}  // namespace

TEST(Scenario, SyntaxErrorsCarryLineAndColumn) {
    expect_validation_error("{\n  \"group\": \"Z\",\n  oops\n}", "line 3");
}

TEST(Scenario, SemanticErrorsCarryThePath) {
    expect_validation_error(R"({"group": "Z", "weight": {"id": "salsa"}, "analysis": "criteria"})", "/weight/id");
    expect_validation_error(R"({"group": "Z", "weight": {"id": "z2"}, "analysis": "criteria"})", "Z^2");
    expect_validation_error(R"({"group": "Z", "weight": {"id": "unit"}, "p": 0.5, "analysis": "criteria"})", "/p");
    expect_validation_error(R"({"group": "F_2", "weight": {"id": "unit"}, "subset": {"kind": "naturals"},
                                "analysis": "criteria"})", "/subset/kind");
    expect_validation_error(R"({"group": "Z", "weight": {"id": "unit"}, "analysis": "strip"})", "/group");
    expect_validation_error(R"({"group": "Z", "weight": {"id": "unit"}, "analysis": "plot"})", "/analysis");
    expect_validation_error(R"({"group": "Z", "weight": {"id": "existence", "points": [[10], [12]]},
                                "analysis": "norms"})", "/weight");
}

TEST(Scenario, CriteriaReportOnSalas) {
    Report r = run_scenario(parse_scenario(salas_criteria()));
    const Json& inf = r.json.at("results").at("inf");
    ASSERT_EQ(inf.size(), 2U);
    EXPECT_EQ(inf[0].at("verdict"), "witness");
    EXPECT_EQ(inf[0].at("witness").at("element"), Json::parse("[2]"));
    EXPECT_EQ(inf[1].at("witness").at("element"), Json::parse("[10]"));
    EXPECT_EQ(r.json.at("results").at("series").at("verdict"), "certificate");
    EXPECT_TRUE(r.json.at("seed").is_null());
    EXPECT_FALSE(r.csv.empty());
}

TEST(Scenario, RunsAreDeterministic) {
    Report a = run_scenario(parse_scenario(salas_criteria()));
    Report b = run_scenario(parse_scenario(salas_criteria()));
    EXPECT_EQ(certified(a.json), certified(b.json));
    EXPECT_EQ(a.csv, b.csv);
}

TEST(Scenario, HorizonOverride) {
    Scenario sc = parse_scenario(salas_criteria(), ScenarioOverrides{std::nullopt, 5});
    EXPECT_EQ(sc.horizon, 5U);
    Report r = run_scenario(sc);
    EXPECT_EQ(r.json.at("results").at("inf")[1].at("verdict"), "horizon-exhausted");
}

TEST(Scenario, ConstructWithUnitWeightFindsNoCertificate) {
    const char* text = R"({"group": "Z", "weight": {"id": "unit"}, "subset": {"kind": "naturals"}, "p": 1,
        "analysis": "construct", "construct": {"targets": [[[[0], "1"]]], "N": 3, "stage_horizon": 32}})";
    Report r = run_scenario(parse_scenario(text));
    EXPECT_EQ(r.json.at("results").at("verdict"), "no certificate found");
    EXPECT_EQ(r.json.at("results").at("failure").at("reason"), "budget");
}

TEST(Scenario, ConstructRejectsOverlappingWitnesses) {
    const char* text = R"({"group": "Z", "weight": {"id": "salas"}, "p": 1, "analysis": "construct",
        "construct": {"targets": [[[[0], "1"], [[1], "1"]]], "N": 2, "witnesses": [[5], [6]]}})";
    Report r = run_scenario(parse_scenario(text));
    EXPECT_EQ(r.json.at("results").at("verdict"), "witnesses rejected");
}

TEST(Scenario, StripAnalysis) {
    const char* text = R"({"group": "R^2", "analysis": "strip",
        "strip": {"t": "1/2", "bands": 20, "criterion4": {"n": [2], "delta_exp2": [-3]}, "integral_columns": 3}})";
    Report r = run_scenario(parse_scenario(text));
    EXPECT_EQ(r.json.at("results").at("ratio").at("max_ratio").at("exp2"), 2);
    EXPECT_EQ(r.json.at("results").at("criterion4")[0].at("t"), 8);
}

TEST(Scenario, Reproduce) {
    Report r = reproduce("r2-sector-strip");
    EXPECT_TRUE(r.json.at("all_hold").get<bool>());
    EXPECT_NE(r.summary.find("all checks hold"), std::string::npos);
    EXPECT_THROW(reproduce("no-such-example"), UsageError);
    EXPECT_EQ(example_ids().size(), 5U);
}

TEST(Scenario, ShippedSamplesRun) {
    const std::filesystem::path dir = std::filesystem::path(WLP_SOURCE_DIR) / "scenarios";
    std::size_t seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".json") continue;
        ++seen;
        Report r = run_scenario(load_scenario(entry.path().string()));
        EXPECT_FALSE(r.summary.empty()) << entry.path();
        if (r.json.contains("all_hold")) EXPECT_TRUE(r.json.at("all_hold").get<bool>()) << entry.path();
    }
    EXPECT_GE(seen, 5U);
}

TEST(Scenario, VersionIsSemantic) {
    const std::string v = version();
    EXPECT_EQ(std::count(v.begin(), v.end(), '.'), 2);
}
