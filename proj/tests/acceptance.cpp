// Acceptance suite: one test case per release criterion, each printing a
// single pass/fail line with its runtime and budget. Every sweep is
// exhaustive at the stated bounds; every frozen value is asserted exactly.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grundy/cli.hpp"

#include <chrono>
#include <cstdio>

using namespace grundy;

namespace {

class Criterion {
public:
    Criterion(int number, const char* name, double budget_seconds)
        : number_(number), name_(name), budget_(budget_seconds),
          start_(std::chrono::steady_clock::now()) {}

    void expect(bool condition, const char* what) {
        CHECK_MESSAGE(condition, what);
        ok_ = ok_ && condition;
    }

    void expect_suite(const char* suite, verify::Params overrides = {}) {
        verify::Verdict v = verify::run_suite(suite, overrides);
        std::string message = std::string("suite ") + suite;
        if (!v.pass && v.witness) message += " witness " + v.witness->dump();
        CHECK_MESSAGE(v.pass, message);
        ok_ = ok_ && v.pass;
        checked_ += v.positions_checked;
    }

    ~Criterion() {
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        bool in_budget = elapsed < budget_;
        CHECK_MESSAGE(in_budget, "over time budget");
        std::printf("criterion %2d %-28s %s  (%llu checks, %.2fs of %.0fs)\n", number_, name_,
                    ok_ && in_budget ? "PASS" : "FAIL",
                    static_cast<unsigned long long>(checked_), elapsed, budget_);
        std::fflush(stdout);
    }

private:
    int number_;
    const char* name_;
    double budget_;
    bool ok_ = true;
    Nat checked_ = 0;
    std::chrono::steady_clock::time_point start_;
};

std::string run_cli_text(std::vector<std::string> args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

} // namespace

TEST_CASE("criterion 1: saturated nim table") {
    Criterion c(1, "saturated nim table", 1.0);
    int code = 0;
    std::string out = run_cli_text({"table", "--saturate", "--p", "3", "nim:2", "--bound", "3"}, code);
    c.expect(code == 0, "table command succeeds");
    c.expect(out ==
                 "\t0\t1\t2\t3\n"
                 "0\t0\t1\t2\t3\n"
                 "1\t1\t2\t0\t4\n"
                 "2\t2\t0\t1\t5\n"
                 "3\t3\t4\t5\t6\n",
             "all 16 grid entries match");
}

TEST_CASE("criterion 2: base-p nim formula") {
    Criterion c(2, "base-p nim formula", 30.0);
    c.expect_suite("base-p-nim"); // p in {2,3,5}, coords <= 9 (m=2), <= 6 (m=3)
}

TEST_CASE("criterion 3: closed form for saturated Welter") {
    Criterion c(3, "saturated Welter closed form", 60.0);
    c.expect_suite("psi-vs-brute");
    c.expect(psi(2, Position{7, 5, 3}) == 6, "psi_2(7,5,3) = 6");
    c.expect(psi(5, Position{7, 5, 3}) == 12, "psi_5(7,5,3) = 12");
    c.expect(psi(2, Position{6, 4, 2}) == 7, "psi_2(6,4,2) = 7");
}

TEST_CASE("criterion 4: sums of Welter games") {
    Criterion c(4, "sums of Welter games", 120.0);
    c.expect_suite("welter-sum-formula"); // m^i <= 2, coords <= 6, p in {2,3,5}
    GameSpec sum = disjunctive_sum({welter_game(3), welter_game(1)});
    EvalTable table(saturate(sum, 5), 7);
    c.expect(table.sg({7, 5, 3, 3}) == 10, "sg((7,5,3),(3)) = 10 at p = 5");
    c.expect(psi_sum(5, {{7, 5, 3}, {3}}) == 10, "psi_5 sum value 10");
}

TEST_CASE("criterion 5: calmness verdicts") {
    Criterion c(5, "calmness verdicts", 60.0);
    c.expect_suite("calm-games"); // Nim:1, Nim:2, Welter:2, Welter:3; p in {2,3,5}
    for (Nat p : {2u, 3u, 5u}) {
        GameSpec restricted = explicit_game(1, {{0}, {p}}, {{1}, {p}});
        CalmReport report = check_calm(restricted, p, p);
        c.expect(!report.calm && report.witness && report.witness->a == Position{p} &&
                     report.witness->b == Position{0},
                 "restricted heap fails with witness (p, 0)");
        c.expect(!check_pn(restricted, nim_game(1), p, p + 2).holds,
                 "carry-free sum rule fails next to Nim");
    }
}

TEST_CASE("criterion 6: full descendants") {
    Criterion c(6, "full descendants", 120.0);
    c.expect_suite("full-descendants"); // sweeps saturated W3 and W3+W2, coords <= 6
    c.expect(full_descendant(2, Position{6, 4, 2}, Nat{7}) == Position{5, 3, 2},
             "(6,4,2) descends to (5,3,2)");
    c.expect(full_descendant(2, SumPosition{{6, 5, 2}, {3, 1}}, Nat{7}) ==
                 SumPosition{{4, 3, 1}, {3, 0}},
             "((6,5,2),(3,1)) descends to ((4,3,1),(3,0))");
}

TEST_CASE("criterion 7: hook formula") {
    Criterion c(7, "hook formula", 30.0);
    c.expect_suite("hook-formula"); // oracle agreement, all shapes <= 8 cells
    c.expect(tableau_count(YoungDiagram({2, 1})) == 2, "f(2,1) = 2");
    c.expect(tableau_count(YoungDiagram({4, 3, 2})) == 168, "f(4,3,2) = 168");
    c.expect(tableau_count(YoungDiagram({3, 2, 2})) == 21, "f(3,2,2) = 21");
    c.expect(tableau_count(DiagramTuple{YoungDiagram({4, 4, 2}), YoungDiagram({2, 1})}) == 144144,
             "f((4,4,2),(2,1)) = 144144");
    c.expect(tableau_count(DiagramTuple{YoungDiagram({2, 2, 1}), YoungDiagram({2})}) == 105,
             "f((2,2,1),(2)) = 105");
}

TEST_CASE("criterion 8: coprimality criterion") {
    Criterion c(8, "coprimality criterion", 120.0);
    // diagrams <= 14 cells for p in {2,3,5}; tuples <= 10 cells, k in {2,3}, p in {2,3}
    c.expect_suite("macdonald-criterion");
}

TEST_CASE("criterion 9: p'-component theorems") {
    Criterion c(9, "p'-component theorems", 180.0);
    c.expect_suite("pprime-subdiagram");       // diagrams <= 12 cells, p in {2,3,5}
    c.expect_suite("pprime-subdiagram-pairs"); // pairs <= 10 cells, p in {2,3}
    c.expect(find_pprime_subdiagram(2, YoungDiagram({4, 3, 2})) == YoungDiagram({3, 2, 2}),
             "(4,3,2) -> (3,2,2)");
    c.expect(find_pprime_subdiagram(
                 2, DiagramTuple{YoungDiagram({4, 4, 2}), YoungDiagram({2, 1})}) ==
                 DiagramTuple{YoungDiagram({2, 2, 1}), YoungDiagram({2})},
             "((4,4,2),(2,1)) -> ((2,2,1),(2))");
}

TEST_CASE("criterion 10: carry-lemma property test") {
    Criterion c(10, "carry-lemma property test", 10.0);
    c.expect_suite("carry-lemma"); // 10^4 random instances per p in {2,3,5}
}
