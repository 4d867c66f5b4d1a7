#include "doctest.h"

#include "grundy/verify.hpp"

using namespace grundy;
using verify::run_suite;

TEST_CASE("registry lists every suite with stable ordering") {
    auto suites = verify::list_suites();
    CHECK(suites.size() >= 10);
    auto has = [&](const char* name) {
        return std::any_of(suites.begin(), suites.end(),
                           [&](const verify::SuiteInfo& s) { return s.name == name; });
    };
    CHECK(has("psi-vs-brute"));
    CHECK(has("pprime-subdiagram"));
    CHECK(has("carry-lemma"));
    CHECK(has("sg-classical-sum"));
    auto again = verify::list_suites();
    for (std::size_t i = 0; i < suites.size(); ++i) CHECK(suites[i].name == again[i].name);
    // no duplicate names
    std::set<std::string> names;
    for (const auto& s : suites) CHECK(names.insert(s.name).second);
}

TEST_CASE("saturated-nim-table reproduces the reference grid") {
    verify::Verdict v = run_suite("saturated-nim-table");
    CHECK(v.pass);
    CHECK(v.positions_checked == 16);
    CHECK(v.suite == "saturated-nim-table");
}

TEST_CASE("sg-classical-sum at defaults") {
    verify::Verdict v = run_suite("sg-classical-sum");
    CHECK(v.pass);
    CHECK(v.positions_checked == 64);
}

TEST_CASE("calm-counterexample reports the expected witness") {
    verify::Verdict v = run_suite("calm-counterexample", {{"p", 3}});
    CHECK(v.pass);
    REQUIRE(v.witness.has_value());
    CHECK((*v.witness)["A"] == verify::json::array({3}));
    CHECK((*v.witness)["B"] == verify::json::array({0}));
}

TEST_CASE("pn-counterexample witness replays") {
    verify::Verdict v = run_suite("pn-counterexample", {{"p", 2}});
    CHECK(v.pass);
    REQUIRE(v.witness.has_value());
    // Replay: rebuild the game pair and re-run the check at the same bound.
    GameSpec gamma = explicit_game(1, {{0}, {2}}, {{1}, {2}});
    PnReport report = check_pn(gamma, nim_game(1), 2, 4);
    CHECK_FALSE(report.holds);
    verify::json pos = (*v.witness)["position"];
    CHECK(pos[0].get<Nat>() == report.witness->a[0]);
    CHECK(pos[1].get<Nat>() == report.witness->a[1]);
}

TEST_CASE("unknown suites and parameters are rejected") {
    CHECK_THROWS_AS(run_suite("no-such-suite"), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("carry-lemma", {{"bound", 3}}), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("base-p-nim", {{"bound2", 5000}}), std::invalid_argument);
}

TEST_CASE("suites pass at every bound below a passing bound") {
    for (Nat bound : {3u, 4u, 5u}) {
        verify::Verdict v = run_suite("base-p-nim", {{"bound2", bound}, {"bound3", bound}});
        CHECK(v.pass);
    }
}

TEST_CASE("verdict parameter echo includes overrides") {
    verify::Verdict v = run_suite("carry-lemma", {{"instances", 50}, {"p", 5}});
    CHECK(v.pass);
    CHECK(v.params.at("instances") == 50);
    CHECK(v.params.at("p") == 5);
    CHECK(v.positions_checked == 50);
}

TEST_CASE("cheap suites all pass") {
    for (const char* name : {"saturation-criterion", "diagram-bijection", "hook-correspondence",
                             "psi-hook-form", "hook-formula", "fcount-recurrence"}) {
        verify::Verdict v = run_suite(name);
        CHECK(v.pass);
        CHECK(v.positions_checked > 0);
        CHECK(!v.witness.has_value());
    }
}
