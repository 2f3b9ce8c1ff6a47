#include "doctest.h"

#include "chord3/io.hpp"
#include "chord3/oracle.hpp"
#include "chord3/solver.hpp"
#include "test_util.hpp"

using namespace chord3;
using namespace chord3::testutil;

TEST_CASE("oracle on canonical instances") {
    CHECK(oracle_solve(make_test_instance(0, {}, {})).yes());

    Instance clash = make_test_instance(4, {{0, 2}, {1, 3}},
                                        {ColorSet::of(Color::Red), ColorSet::of(Color::Red)});
    CHECK(oracle_solve(clash).status == OracleStatus::No);

    OracleResult c5 = oracle_solve(c5_instance());
    REQUIRE(c5.yes());
    CHECK(validate_coloring(c5_instance(), c5.coloring));
}

TEST_CASE("oracle agrees with brute force at and below the base size") {
    for (int n = 1; n <= 8; ++n) {
        for (std::uint64_t i = 0; i < 60; ++i) {
            Instance inst = gen_random(n, 1234 + 97 * n + i, static_cast<ListDensity>(i % 3));
            OracleResult o = oracle_solve(inst);
            SolveResult b = brute_force_small(inst);
            REQUIRE(o.status != OracleStatus::BudgetExceeded);
            CHECK(o.yes() == b.yes);
            if (o.yes()) CHECK(validate_coloring(inst, o.coloring));
        }
    }
}

TEST_CASE("oracle no-verdicts confirmed by full enumeration at n <= 6") {
    int no_count = 0;
    for (int n = 2; n <= 6; ++n) {
        for (std::uint64_t i = 0; i < 80; ++i) {
            Instance inst = gen_random(n, 4321 + 11 * n + i, static_cast<ListDensity>(i % 3));
            OracleResult o = oracle_solve(inst);
            CHECK(o.yes() == enum3_colorable(inst));
            no_count += !o.yes();
        }
    }
    CHECK(no_count > 30);
}

TEST_CASE("a starved budget reports BudgetExceeded, not a verdict") {
    Instance inst = gen_random(18, 5, ListDensity::DropOne);
    OracleResult o = oracle_solve(inst, 0);  // no decisions allowed
    CHECK(o.status == OracleStatus::BudgetExceeded);
    CHECK(o.nodes == 1);

    OracleResult generous = oracle_solve(inst);
    CHECK(generous.status != OracleStatus::BudgetExceeded);
}
