#include "squeeze/harness.hpp"
#include "squeeze/point.hpp"

#include <doctest.h>

using namespace squeeze;

TEST_CASE("suite list is fixed and ordered") {
    const auto& names = suite_names();
    REQUIRE(names.size() == 11);
    CHECK(names.front() == "gauge_homogeneity");
    CHECK(names.back() == "prop_collapse_d1");
}

TEST_CASE("unknown suite names are rejected") {
    CHECK_THROWS_AS(run_suite("foo", {}), ValidationError);
}

TEST_CASE("every suite passes at a small sample budget") {
    HarnessConfig cfg;
    cfg.samples = 60;
    cfg.seed = 42;
    for (const auto& name : suite_names()) {
        VerificationReport r = run_suite(name, cfg);
        INFO(name, " max_violation=", r.max_violation, " cases=", r.cases_run);
        CHECK(r.passed());
        CHECK(r.cases_run > 0);
        CHECK(r.failures.empty());
        CHECK(r.max_violation <= r.tolerance);
    }
}

TEST_CASE("zero samples are vacuous and never pass") {
    HarnessConfig cfg;
    cfg.samples = 0;
    for (const auto& r : run_all(cfg)) {
        CHECK(r.vacuous());
        CHECK_FALSE(r.passed());
        CHECK(r.cases_run == 0);
    }
}

TEST_CASE("reports are reproducible for a fixed seed") {
    HarnessConfig cfg;
    cfg.samples = 40;
    cfg.seed = 7;
    for (const auto& name : {"gauge_homogeneity", "constants_oracle", "interval_sanity"}) {
        VerificationReport a = run_suite(name, cfg);
        VerificationReport b = run_suite(name, cfg);
        CHECK(report_to_json(a, false) == report_to_json(b, false));
    }
}

TEST_CASE("different seeds change the sampled content") {
    HarnessConfig a;
    a.samples = 40;
    a.seed = 1;
    HarnessConfig b = a;
    b.seed = 2;
    VerificationReport ra = run_suite("gauge_homogeneity", a);
    VerificationReport rb = run_suite("gauge_homogeneity", b);
    CHECK(ra.seed != rb.seed);
    CHECK(report_to_json(ra, false) != report_to_json(rb, false));
}

TEST_CASE("run_all covers every suite once") {
    HarnessConfig cfg;
    cfg.samples = 8;
    auto reports = run_all(cfg);
    REQUIRE(reports.size() == suite_names().size());
    for (size_t i = 0; i < reports.size(); ++i) CHECK(reports[i].suite == suite_names()[i]);
}

TEST_CASE("tolerance overrides force failures to surface") {
    HarnessConfig cfg;
    cfg.samples = 30;
    cfg.tolerance = -1.0;  // impossible threshold: every case with any violation fails
    VerificationReport r = run_suite("gauge_homogeneity", cfg);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.failures.empty());
    // failure records carry replayable inputs
    CHECK_FALSE(r.failures.front().inputs.empty());
    CHECK(r.failures.front().tolerance == -1.0);
}

TEST_CASE("report serialization is valid JSON-looking output") {
    HarnessConfig cfg;
    cfg.samples = 8;
    VerificationReport r = run_suite("interval_sanity", cfg);
    std::string j = report_to_json(r);
    CHECK(j.find("\"suite\":\"interval_sanity\"") != std::string::npos);
    CHECK(j.find("\"wall_time\":") != std::string::npos);
    CHECK(report_to_json(r, false).find("\"wall_time\":") == std::string::npos);
}
