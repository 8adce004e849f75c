#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defect2/verify.hpp"

using namespace defect2;

static const char* all_checks[] = {"self-dual",    "graduated-projection",
                                   "cartan",       "radical-square",
                                   "loewy-5",      "cycle-trace",
                                   "amalgamation"};

TEST_CASE("all seven checks pass on the golden block")
{
    block_analysis an = analyze_block(block_from_core(3, partition{1}));
    check_report rep = verify_suite(an);
    REQUIRE(rep.checks.size() == 7);
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        CHECK(rep.checks[i].id == all_checks[i]);
        INFO(rep.checks[i].id, ": ", rep.checks[i].detail);
        CHECK(rep.checks[i].pass);
    }
}

TEST_CASE("check filtering")
{
    block_analysis an = analyze_block(block_from_core(3, partition{1}));
    check_report rep = verify_suite(an, mutation_kind::none, 0, {"cartan"});
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.checks[0].id == "cartan");
    CHECK(rep.checks[0].pass);
}

TEST_CASE("negative control: raising one exponent fails the projection check")
{
    block_analysis an = analyze_block(block_from_core(3, partition{1}));
    check_report rep = verify_suite(an, mutation_kind::exponent_bump, 0);
    CHECK_FALSE(rep.all_pass());
    for (const auto& c : rep.checks)
        if (c.id == "graduated-projection")
            CHECK_FALSE(c.pass);
}

TEST_CASE("negative control: dropping a generator fails cartan or radical-square")
{
    block_analysis an = analyze_block(block_from_core(3, partition{1}));
    check_report rep = verify_suite(an, mutation_kind::drop_generator, 0);
    CHECK_FALSE(rep.all_pass());
    bool cartan_or_radical = false;
    for (const auto& c : rep.checks)
        if ((c.id == "cartan" || c.id == "radical-square") && !c.pass)
            cartan_or_radical = true;
    CHECK(cartan_or_radical);
}

TEST_CASE("negative control: a p-scaled generator is detected")
{
    block_analysis an = analyze_block(block_from_core(3, partition{1}));
    check_report rep = verify_suite(an, mutation_kind::scale_p, 0);
    CHECK_FALSE(rep.all_pass());
}

TEST_CASE("the suite passes on a block with a non-self-conjugate core")
{
    block_analysis an = analyze_block(block_from_core(3, partition{2}));
    check_report rep = verify_suite(an);
    for (const auto& c : rep.checks) {
        INFO(c.id, ": ", c.detail);
        CHECK(c.pass);
    }
}
