// test_formula.cpp — closed-form exponents against pinned values and the
// walk oracle, plus the exponent-set formulas.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "primexp/formula.hpp"
#include "primexp/oracle.hpp"

using namespace primexp;

TEST_CASE("pinned exponents across all four classes") {
    // Order 3, loop class: both matrices have exponent 4.
    ExponentResult r = exponent_formula(fixtures::make(3, 0, 1, ""));
    CHECK(r.value == 4);
    CHECK(r.rule == Rule::T32_2);

    r = exponent_formula(fixtures::fan(8));
    CHECK(r.value == 2);
    CHECK(r.rule == Rule::T42_3);

    r = exponent_formula(fixtures::make(7, 1, 0, "0011"));
    CHECK(r.value == 4);  // m = 2 even, no odd run
    CHECK(r.rule == Rule::T42_3);

    r = exponent_formula(fixtures::branched_runs_12());
    CHECK(r.value == 6);  // mo + se + 3 with a sharing associate
    CHECK(r.rule == Rule::T42_2b);

    r = exponent_formula(fixtures::isolated_run_10());
    CHECK(r.value == 6);  // m + se + 5, disjoint associate
    CHECK(r.rule == Rule::T42_1a);

    r = exponent_formula(fixtures::two_block_11());
    CHECK(r.value == 6);
    CHECK(r.rule == Rule::NOTE51);
}

TEST_CASE("path with a loop attains the symmetric upper bound 2n-2") {
    for (int n = 4; n <= 12; ++n) {
        ExponentResult r = exponent_formula(fixtures::path_with_loop(n));
        CHECK(r.value == 2 * n - 2);
        CHECK(r.rule == Rule::T32_2);
    }
}

TEST_CASE("prefix-zero rows in the loop-free class hit every 2(t+1)") {
    // Last row [0, 0^{t-1}, 1^{n-3-(t-1)}, heavy, 0] has exponent 2(t+1).
    int n = 9;
    for (int t = 1; t <= n - 3; ++t) {
        std::string y(static_cast<std::size_t>(n - 3), '1');
        for (int i = 0; i < t - 1; ++i) y[static_cast<std::size_t>(i)] = '0';
        ExponentResult r = exponent_formula(fixtures::make(n, 0, 0, y));
        CHECK(r.value == 2 * (t + 1));
    }
}

TEST_CASE("exponent of an imprimitive graph is an error") {
    CHECK_THROWS_AS(exponent_formula(fixtures::alternating_odd_v2(10)),
                    imprimitive_error);
}

TEST_CASE("loop classes dispatch through the loop rules only") {
    for (int n = 3; n <= 9; ++n)
        for (ClassTag tag : {ClassTag{true, true}, ClassTag{false, true}})
            for (const auto& [g, mult] : enumerate_class(n, tag)) {
                (void)mult;
                Rule rule = exponent_formula(g).rule;
                CHECK((rule == Rule::T32_1 || rule == Rule::T32_2));
            }
}

TEST_CASE("formula equals both oracles exhaustively up to order 10") {
    for (int n = 3; n <= 10; ++n)
        for (ClassTag tag : all_class_tags())
            for (const auto& [g, mult] : enumerate_class(n, tag)) {
                (void)mult;
                if (!is_primitive(g)) continue;
                int value = exponent_formula(g).value;
                CHECK(value == exponent_oracle_bfs(g));
                CHECK(value == exponent_oracle_power(g));
                CHECK(value % 2 == 0);
                CHECK(value >= 2);
                CHECK(value <= 2 * n - 2);
                if (n >= 4) CHECK(exponent_set_formula(n, tag).count(value) == 1);
            }
}

TEST_CASE("per-class exponent sets") {
    CHECK(exponent_set_formula(6, ClassTag{true, false}) == std::set<int>{2, 4});
    CHECK(exponent_set_formula(4, ClassTag{false, false}) == std::set<int>{4});
    CHECK(exponent_set_formula(4, ClassTag{true, true}) == std::set<int>{2, 4});
    std::set<int> expected;
    for (int b = 4; b <= 18; b += 2) expected.insert(b);
    CHECK(exponent_set_formula(10, ClassTag{false, true}) == expected);
    CHECK_THROWS_AS(exponent_set_formula(3, ClassTag{true, true}), invalid_order_error);
}

TEST_CASE("k-stratified sets for the loop-free alpha class") {
    CHECK(exponent_set_10_by_k(9, 0).exponents == std::set<int>{2});
    CHECK(exponent_set_10_by_k(9, 0).clause == "T43-0");

    // Odd order far above k: the full band [k+2, 2k+4].
    KStratifiedSet s = exponent_set_10_by_k(13, 2);
    CHECK(s.clause == "T43-1");
    CHECK(s.exponents == std::set<int>{4, 6, 8});

    s = exponent_set_10_by_k(12, 3);
    CHECK(s.clause == "T43-4");
    CHECK(s.exponents == std::set<int>{6, 8});

    s = exponent_set_10_by_k(7, 2);
    CHECK(s.clause == "T43-3");
    CHECK(s.exponents == std::set<int>{4, 6});

    s = exponent_set_10_by_k(5, 2);
    CHECK(s.exponents == std::set<int>{4});

    s = exponent_set_10_by_k(8, 4);
    CHECK(s.clause == "T43-5");
    CHECK(s.exponents == std::set<int>{6});
    CHECK(!s.note.empty());  // the n-k <= k+2 carve-out overrides the band

    s = exponent_set_10_by_k(16, 4);  // n = 3k+4
    CHECK(s.exponents == std::set<int>{6, 8, 10});

    // Even order with the all-zero word: no primitive member, no clause.
    s = exponent_set_10_by_k(8, 5);
    CHECK(!s.covered);

    CHECK_THROWS_AS(exponent_set_10_by_k(4, 1), invalid_order_error);
    CHECK_THROWS_AS(exponent_set_10_by_k(9, 7), std::invalid_argument);
}

TEST_CASE("rule names are stable") {
    CHECK(std::string(rule_name(Rule::T32_1)) == "T32-1");
    CHECK(std::string(rule_name(Rule::T42_2b)) == "T42-2b");
    CHECK(std::string(rule_name(Rule::NOTE51)) == "NOTE51");
}
