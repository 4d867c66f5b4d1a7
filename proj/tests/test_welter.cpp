#include "doctest.h"

#include "grundy/welter.hpp"

using namespace grundy;

namespace {

GameSpec two_heap_game(Nat p) {
    return explicit_game(1, {{0}, {p}}, {{1}, {p}});
}

} // namespace

TEST_CASE("psi known values") {
    CHECK(psi(2, Position{7, 5, 3}) == 6);
    CHECK(psi(5, Position{7, 5, 3}) == 12);
    CHECK(psi(2, Position{6, 4, 2}) == 7);
    CHECK(psi(2, Position{5, 3, 2}) == 7);
    CHECK(psi(2, Position{4, 3, 1}) == 5);
    CHECK(psi(2, Position{3, 1}) == 1);
    for (Nat a = 0; a <= 9; ++a) CHECK(psi(3, Position{a}) == a);
    CHECK_THROWS_AS(psi(2, Position{3, 3}), std::invalid_argument);
}

TEST_CASE("psi is symmetric in the coordinates") {
    Position a{7, 5, 3};
    do {
        CHECK(psi(5, a) == 12);
    } while (std::next_permutation(a.begin(), a.end()));
}

TEST_CASE("psi_sum known values") {
    CHECK(psi_sum(5, {{7, 5, 3}, {3}}) == 10);
    CHECK(psi_sum(2, {{6, 5, 2}, {3, 1}}) == 7);
    for (Nat a : {0u, 3u, 9u}) CHECK(psi_sum(7, {{a}}) == a);
}

TEST_CASE("psi equals brute sg of the saturated game") {
    for (Nat p : {2u, 3u, 5u})
        for (std::size_t m : {1u, 2u, 3u}) {
            Nat bound = m <= 2 ? 7 : 5;
            EvalTable table(saturate(welter_game(m), p), bound);
            for_each_position(PositionSet::distinct_coords(m), bound, [&](const Position& a) {
                CHECK(table.sg(a) == psi(p, a));
            });
        }
}

TEST_CASE("at p=2 psi equals the sg of Welter's game itself") {
    for (std::size_t m : {2u, 3u}) {
        Nat bound = m == 2 ? 8 : 6;
        EvalTable table(welter_game(m), bound);
        for_each_position(PositionSet::distinct_coords(m), bound, [&](const Position& a) {
            CHECK(table.sg(a) == psi(2, a));
        });
    }
}

TEST_CASE("sum formula: saturated sum sg is the carry-free sum of part values") {
    for (Nat p : {2u, 3u, 5u}) {
        GameSpec sum = disjunctive_sum({welter_game(2), welter_game(1)});
        Nat bound = 5;
        EvalTable table(saturate(sum, p), bound);
        for_each_position(sum.positions, bound, [&](const Position& a) {
            SumPosition parts{{a[0], a[1]}, {a[2]}};
            CHECK(table.sg(a) == psi_sum(p, parts));
        });
    }
}

TEST_CASE("welter_lg matches the closed form") {
    EvalTable table(welter_game(3), 6);
    for_each_position(PositionSet::distinct_coords(3), 6, [&](const Position& a) {
        CHECK(table.lg(a) == welter_lg(a));
    });
}

TEST_CASE("check_calm passes for Nim and Welter") {
    for (Nat p : {2u, 3u, 5u}) {
        CHECK(check_calm(nim_game(1), p, 9).calm);
        CHECK(check_calm(nim_game(2), p, 6).calm);
        CHECK(check_calm(welter_game(2), p, 6).calm);
        CHECK(check_calm(welter_game(3), p, 5).calm);
    }
    CHECK(check_calm(welter_game(3), 2, 8).calm);
}

TEST_CASE("check_calm rejects the restricted {0,p} heap") {
    for (Nat p : {2u, 3u, 5u}) {
        CalmReport report = check_calm(two_heap_game(p), p, p);
        REQUIRE_FALSE(report.calm);
        REQUIRE(report.witness.has_value());
        CHECK(report.witness->a == Position{p});
        CHECK(report.witness->b == Position{0});
        CHECK(report.witness->level == 1);
        CHECK(report.witness->sg_difference == 1);
        CHECK(report.witness->coordinate_difference == static_cast<std::int64_t>(p));
        CHECK(report.witness->modulus == p * p);
    }
}

TEST_CASE("check_pn verdicts") {
    CHECK(check_pn(nim_game(1), nim_game(1), 3, 9).holds);
    CHECK(check_pn(welter_game(3), nim_game(1), 3, 6).holds);
    for (Nat p : {2u, 3u}) {
        PnReport report = check_pn(two_heap_game(p), nim_game(1), p, p + 2);
        CHECK_FALSE(report.holds);
        REQUIRE(report.witness.has_value());
        // Replay the witness: the recorded values must disagree as reported.
        CHECK(report.witness->sum_sg !=
              nim_sum(p, {report.witness->left_sg, report.witness->right_sg}));
    }
}

TEST_CASE("target_full_value") {
    CHECK(target_full_value(2, {6, 1}) == 7);
    CHECK(target_full_value(3, {2, 2}) == 2);
    CHECK(target_full_value(2, std::initializer_list<Nat>{}) == 0);
    for (Nat p : {2u, 3u, 5u})
        for (Nat alpha = 0; alpha <= 20; ++alpha) {
            // single value: digit sums never reach p
            CHECK(target_full_value(p, {alpha}) == alpha);
        }
}

TEST_CASE("target_full_value matches brute full-descendant search in saturated Nim") {
    // The value is the largest lg among full descendants of the alpha vector
    // viewed as a position in the p-saturation of Nim.
    for (Nat p : {2u, 3u}) {
        std::vector<std::vector<Nat>> samples = {{2, 2}, {1, 2}, {3, 1}, {2, 2, 2}, {5, 3}};
        for (const auto& alphas : samples) {
            Nat bound = *std::max_element(alphas.begin(), alphas.end());
            EvalTable table(saturate(nim_game(alphas.size()), p), bound);
            Nat best = 0;
            bool found = false;
            for_each_position(PositionSet::full_grid(alphas.size()), bound,
                              [&](const Position& b) {
                                  for (std::size_t i = 0; i < alphas.size(); ++i)
                                      if (b[i] > alphas[i]) return;
                                  if (table.sg(b) == table.lg(b)) {
                                      best = std::max(best, table.lg(b));
                                      found = true;
                                  }
                              });
            REQUIRE(found);
            CHECK(target_full_value(p, alphas) == best);
        }
    }
}

TEST_CASE("split_target") {
    std::vector<Nat> a1{6, 1};
    CHECK(split_target(2, a1, 7) == std::vector<Nat>{6, 1});
    std::vector<Nat> a2{2, 2};
    CHECK(split_target(3, a2, 2) == std::vector<Nat>{2, 0});
    CHECK_THROWS_AS(split_target(3, a2, 5), std::invalid_argument);
    // postconditions across random-ish inputs (asserted internally on every call)
    for (Nat p : {2u, 3u, 5u})
        for (Nat x = 0; x <= 9; ++x)
            for (Nat y = 0; y <= 9; ++y) {
                std::vector<Nat> alphas{x, y};
                Nat beta = target_full_value(p, alphas);
                std::vector<Nat> parts = split_target(p, alphas, beta);
                Nat plain = 0;
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    plain += parts[i];
                    CHECK(parts[i] <= alphas[i]);
                }
                CHECK(plain == beta);
                CHECK(nim_sum(p, parts) == beta);
            }
}

TEST_CASE("full_descendant reproduces the reference witnesses") {
    CHECK(full_descendant(2, Position{6, 4, 2}, Nat{7}) == Position{5, 3, 2});
    SumPosition b = full_descendant(2, SumPosition{{6, 5, 2}, {3, 1}}, Nat{7});
    CHECK(b == SumPosition{{4, 3, 1}, {3, 0}});
    CHECK(welter_lg(b[0]) + welter_lg(b[1]) == 7);
    CHECK(psi_sum(2, b) == 7);
}

TEST_CASE("full_descendant of a full position is the position itself") {
    CHECK(full_descendant(2, Position{5, 3, 2}) == Position{5, 3, 2});
    CHECK(full_descendant(3, Position{0, 1, 2}) == Position{0, 1, 2});
}

TEST_CASE("full_descendant handles unsorted coordinates") {
    Position b = full_descendant(2, Position{2, 4, 6}, Nat{7});
    CHECK(std::is_sorted(b.begin(), b.end())); // rank-matched to the input order
    CHECK(psi(2, b) == 7);
    CHECK(welter_lg(b) == 7);
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(b[i] <= Position{2, 4, 6}[i]);
}

TEST_CASE("full_descendant rejects targets above the position value") {
    CHECK_THROWS_AS(full_descendant(2, Position{6, 4, 2}, Nat{8}), std::invalid_argument);
}

TEST_CASE("full_descendant sweeps against brute tables") {
    for (Nat p : {2u, 3u}) {
        Nat bound = 5;
        EvalTable table(saturate(welter_game(2), p), bound);
        for_each_position(PositionSet::distinct_coords(2), bound, [&](const Position& a) {
            Position b = full_descendant(p, a);
            CHECK(table.sg(b) == table.sg(a));
            CHECK(table.lg(b) == table.sg(a));
            for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i] <= a[i]);
        });
    }
}

TEST_CASE("full_descendant of sums against brute tables") {
    for (Nat p : {2u, 3u, 5u}) {
        Nat bound = 4;
        GameSpec sum = disjunctive_sum({welter_game(2), welter_game(1)});
        EvalTable table(saturate(sum, p), bound);
        for_each_position(sum.positions, bound, [&](const Position& a) {
            SumPosition parts{{a[0], a[1]}, {a[2]}};
            SumPosition b = full_descendant(p, parts);
            Position flat{b[0][0], b[0][1], b[1][0]};
            CHECK(table.sg(flat) == table.sg(a));
            CHECK(table.lg(flat) == table.sg(a));
            for (std::size_t i = 0; i < 3; ++i) CHECK(flat[i] <= a[i]);
        });
    }
}

TEST_CASE("full positions admit a full option one step down") {
    for (Nat p : {2u, 3u}) {
        GameSpec sat = saturate(welter_game(3), p);
        EvalTable table(sat, 5);
        for_each_position(PositionSet::distinct_coords(3), 5, [&](const Position& a) {
            if (!table.is_full(a) || table.lg(a) == 0) return;
            bool found = false;
            for (const Position& b : options(sat, a))
                if (table.is_full(b) && table.lg(b) + 1 == table.lg(a)) found = true;
            CHECK(found);
        });
    }
}

TEST_CASE("full_descendant reaches every target below the value") {
    Position a{6, 4, 2};
    for (Nat target = 0; target <= psi(2, a); ++target) {
        Position b = full_descendant(2, a, target);
        CHECK(psi(2, b) == target);
        CHECK(welter_lg(b) == target);
    }
}
