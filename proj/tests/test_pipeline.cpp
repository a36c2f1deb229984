#include <doctest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "fullerene/pipeline.hpp"

using namespace fullerene;
using namespace fullerene::testing;

namespace {

// Brute-force values, pinned after cross-checking against enumeration.
constexpr long kC20Matchings = 36;
constexpr long kC60Matchings = 12500;

}  // namespace

TEST_CASE("C20 and C60 runs have no witnesses")
{
    auto r20 = analyze(c20().graph());
    CHECK(r20.certified);
    CHECK(r20.invariants_ok());
    CHECK(r20.witness_count == 0);
    CHECK(r20.switch_count == 1);
    REQUIRE(r20.exact_count);
    CHECK(*r20.exact_count == kC20Matchings);
    CHECK(r20.faces == 12);

    auto r60 = analyze(c60().graph());
    CHECK(r60.certified);
    CHECK(r60.invariants_ok());
    CHECK(r60.witness_count == 0);
    CHECK(*r60.exact_count == kC60Matchings);
    CHECK(r60.faces == 32);
}

TEST_CASE("C540 run")
{
    auto run = run_pipeline(c540());
    const auto& r = run.report;
    INFO(report_text(r));
    CHECK(r.certified);
    CHECK(r.invariants_ok());
    CHECK(r.faces == 272);
    CHECK(r.witness_count >= 2);
    CHECK(r.disjoint_resonant_count >= 2 * r.witness_count);
    CHECK(r.switch_count >= 7);
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, 2 * r.witness_count);
    CHECK(r.switch_count >= pow2);
    REQUIRE(r.exact_count);
    CHECK(*r.exact_count >= r.switch_count);
    CHECK(r.class_resonant_counts[0] + r.class_resonant_counts[1] + r.class_resonant_counts[2] ==
          6 * r.witness_count);
    CHECK(run.switches.matchings.size() == r.switch_count.get_ui());
}

TEST_CASE("reports are byte-identical across runs")
{
    const auto a = report_json(analyze(c180().graph()));
    const auto b = report_json(analyze(c180().graph()));
    CHECK(a == b);
    AnalyzeOptions seeded;
    seeded.seed = 17;
    CHECK(report_json(analyze(c180().graph(), seeded)) == report_json(analyze(c180().graph(), seeded)));
}

TEST_CASE("report document keys")
{
    AnalyzeOptions opt;
    opt.exact_count = false;
    auto j = nlohmann::json::parse(report_json(analyze(c60().graph(), opt)));
    CHECK(j["schema"] == 1);
    CHECK(j["p"] == 60);
    CHECK(j["faces"] == 32);
    CHECK(j["witness_count"] == 0);
    CHECK(j["switch_count"] == "1");
    CHECK(j["exact_count"].is_null());
    CHECK(j["bounds"]["zz"] == "47");
    CHECK(j["bounds"]["theorem1"]["exponent"] == "-320/61");
    CHECK(j["bounds"]["km"]["exponent"] == "5/2");
    CHECK(j["certified"] == true);
    CHECK(j["warnings"].is_array());
    for (const char* key : {"class_resonant_counts", "best_class", "disjoint_resonant_count"})
        CHECK(j.contains(key));
}

TEST_CASE("dropped patches make the run uncertified")
{
    auto r = analyze(nanotube(6).graph());
    CHECK_FALSE(r.certified);
    CHECK_FALSE(r.warnings.empty());
    CHECK(r.invariants_ok());
}

TEST_CASE("errors carry the stage name")
{
    try {
        analyze(k4());
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("stage validate") != std::string::npos);
    }
    try {
        AnalyzeOptions tiny;
        tiny.node_budget = 1;
        analyze(c540().graph(), tiny);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SearchBudgetExceeded);
        CHECK(std::string(e.what()).find("stage four_color") != std::string::npos);
    }
}
