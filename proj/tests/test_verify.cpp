#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hermlab/verify.hpp"

using namespace hermlab;

TEST_CASE("quick suites pass and report deterministically") {
    VerifyConfig cfg;
    cfg.quick = 1;
    for (const char* name : {"basis", "propagators"}) {
        auto rows = run_suite(name, cfg);
        REQUIRE(!rows.empty());
        for (const auto& r : rows) {
            INFO(r.experiment, " (", r.params, "): measured=", r.measured,
                 " tol=", r.tolerance);
            CHECK(r.pass);
        }
        auto again = run_suite(name, cfg);
        CHECK(report_csv(rows, cfg) == report_csv(again, cfg));
        CHECK(report_json(rows, cfg) == report_json(again, cfg));
    }
}

TEST_CASE("csv layout") {
    VerifyConfig cfg;
    cfg.quick = 1;
    auto rows = run_suite("basis", cfg);
    const std::string csv = report_csv(rows, cfg);
    CHECK(csv.rfind("experiment,params,measured,reference,tolerance,pass\n", 0) == 0);
    CHECK(csv.find("seed=20240817") != std::string::npos);
    CHECK(all_pass(rows));
}

TEST_CASE("unknown suites are rejected") {
    VerifyConfig cfg;
    CHECK_THROWS(run_suite("nope", cfg));
}
