#include "fsop/verify.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace fsop;

namespace {

std::string failures(const std::vector<CheckRow>& rows) {
    std::string s;
    for (const auto& r : rows)
        if (r.gating && !r.passed) s += r.suite + "/" + r.name + " " + std::to_string(r.measured) + "; ";
    return s;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("every suite passes with default masses") {
    for (const auto& suite : suite_names()) {
        CAPTURE(suite);
        const auto rows = verify_suite(suite, testing::table());
        CHECK(!rows.empty());
        CHECK_MESSAGE(all_passed(rows), failures(rows));
    }
}

TEST_CASE("the unperturbed configuration is green") {
    VerifyConfig cfg;
    cfg.params = {{0, 0}};
    const auto rows = verify_suite("all", testing::table(), cfg);
    CHECK_MESSAGE(all_passed(rows), failures(rows));
}

TEST_CASE("holonomic suite restricted to one degree") {
    VerifyConfig cfg;
    cfg.params = {{0, 1}};
    cfg.n = 7;
    const auto rows = verify_suite("holonomic", testing::table(), cfg);
    const auto ode = std::find_if(rows.begin(), rows.end(), [](const CheckRow& r) { return r.name == "ode_residual"; });
    REQUIRE(ode != rows.end());
    CHECK(ode->passed);
    CHECK(ode->measured <= 1e-7);
}

TEST_CASE("tolerance overrides and informational rows") {
    VerifyConfig cfg;
    cfg.tolerance_overrides["a1_certificate"] = 1e-60;
    const CheckRow r = checks::a1_certificate(testing::table(), cfg);
    CHECK(r.tolerance == 1e-60);
    CheckRow info;
    info.gating = false;
    CHECK(all_passed({info}));
    CHECK_THROWS_AS(verify_suite("nope", testing::table()), ConfigError);
}

}
