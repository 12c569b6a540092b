#include <doctest.h>

#include "sphsum/verify.hpp"

using namespace sphsum;

TEST_CASE("self-check battery passes") {
    VerifyOptions opts;
    opts.level = VerifyLevel::Quick;
    const std::vector<VerifyCheck> checks = run_verify(opts);
    CHECK(checks.size() >= 10);
    for (const auto& c : checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.passed);
    }
}

TEST_CASE("corrupted potential table is caught by the identity check") {
    VerifyOptions opts;
    opts.level = VerifyLevel::Quick;
    opts.corrupt_lambda_table = true;
    const std::vector<VerifyCheck> checks = run_verify(opts);
    bool found = false;
    for (const auto& c : checks) {
        if (c.name == "binary-identity") {
            found = true;
            CHECK_FALSE(c.passed);
        } else {
            INFO(c.name, ": ", c.detail);
            CHECK(c.passed);
        }
    }
    CHECK(found);
}

TEST_CASE("reference tables are loaded") {
    CHECK(decaen_reference().size() == 5);
    CHECK(decaen_reference().front().r == 3);
    CHECK(decaen_reference().back().N == 268435456);
    CHECK(sidelnikov_reference().size() == 5);
    CHECK(sidelnikov_reference().front().upper == 345.4941208);
}
