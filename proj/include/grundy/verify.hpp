#pragma once

// Named verification suites, one per closed-form claim the library
// implements, each pitting the formula against brute-force evaluation (or an
// independent second route) over an exhaustive in-bound sweep. Suites report
// structured verdicts with first-counterexample semantics and deterministic
// lexicographic iteration order, so a failure can be replayed from its
// witness alone.

#include "grundy/young.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <random>

namespace grundy::verify {

using Params = std::map<std::string, Nat>;
using nlohmann::json;

struct Verdict {
    std::string suite;
    Params params;
    bool pass = true;
    // Counterexample of a failing sweep, or the observed violation of an
    // expected-failure suite (those pass exactly when the violation shows up).
    std::optional<json> witness;
    Nat positions_checked = 0;
    double elapsed_seconds = 0.0;
};

struct SuiteInfo {
    std::string name;
    std::string claim;
    Params defaults; // a "p" of 0 means: each of 2, 3, 5
};

namespace detail {

struct Suite {
    SuiteInfo info;
    std::function<void(const Params&, Verdict&)> run;
};

inline json position_json(const Position& a) {
    json out = json::array();
    for (Nat x : a) out.push_back(x);
    return out;
}

inline json parts_json(const DiagramTuple& shapes) {
    json out = json::array();
    for (const YoungDiagram& y : shapes) {
        json one = json::array();
        for (Nat part : y.parts()) one.push_back(part);
        out.push_back(one);
    }
    return out;
}

inline std::vector<Nat> base_list(const Params& params, std::vector<Nat> all = {2, 3, 5}) {
    Nat p = params.at("p");
    if (p == 0) return all;
    require_base(p);
    return {p};
}

inline Nat capped(const Params& params, const std::string& key, Nat cap) {
    Nat value = params.at(key);
    if (value > cap)
        throw std::invalid_argument("parameter '" + key + "' exceeds the desk-scale cap of " +
                                    std::to_string(cap));
    return value;
}

inline std::vector<DiagramTuple> tuples_up_to(std::size_t k, Nat total) {
    std::vector<DiagramTuple> result;
    DiagramTuple current;
    auto build = [&](auto&& self, std::size_t slot, Nat remaining) -> void {
        if (slot == k) {
            result.push_back(current);
            return;
        }
        for (Nat n = 0; n <= remaining; ++n)
            for (const YoungDiagram& y : partitions_of(n)) {
                current.push_back(y);
                self(self, slot + 1, remaining - n);
                current.pop_back();
            }
    };
    build(build, 0, total);
    return result;
}

inline const std::vector<Suite>& registry();

} // namespace detail

inline std::vector<SuiteInfo> list_suites() {
    std::vector<SuiteInfo> result;
    for (const detail::Suite& suite : detail::registry()) result.push_back(suite.info);
    return result;
}

inline Verdict run_suite(const std::string& name, const Params& overrides = {}) {
    for (const detail::Suite& suite : detail::registry()) {
        if (suite.info.name != name) continue;
        Params params = suite.info.defaults;
        for (const auto& [key, value] : overrides) {
            if (params.find(key) == params.end())
                throw std::invalid_argument("suite '" + name + "' has no parameter '" + key + "'");
            params[key] = value;
        }
        Verdict verdict;
        verdict.suite = name;
        verdict.params = params;
        auto start = std::chrono::steady_clock::now();
        suite.run(params, verdict);
        verdict.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return verdict;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

namespace detail {

inline GameSpec restricted_heap_game(Nat p) {
    // Single heap restricted to {0, p}: the canonical non-calm game.
    return explicit_game(1, {{0}, {p}}, {{1}, {p}});
}

inline const std::vector<Suite>& registry() {
    static const std::vector<Suite> suites = [] {
        std::vector<Suite> r;

        r.push_back({{"sg-classical-sum",
                      "sg of a disjunctive sum is the base-2 carry-free sum of the parts' sg",
                      {{"m1", 1}, {"m2", 1}, {"bound", 7}}},
                     [](const Params& P, Verdict& v) {
                         std::size_t m1 = capped(P, "m1", 2);
                         std::size_t m2 = capped(P, "m2", 2);
                         Nat bound = capped(P, "bound", 9);
                         GameSpec left = nim_game(m1);
                         GameSpec right = welter_game(m2);
                         GameSpec sum = disjunctive_sum({left, right});
                         EvalTable ts(sum, bound), tl(left, bound), tr(right, bound);
                         for_each_position(sum.positions, bound, [&](const Position& a) {
                             if (!v.pass) return;
                             ++v.positions_checked;
                             Position al(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(m1));
                             Position ar(a.begin() + static_cast<std::ptrdiff_t>(m1), a.end());
                             Nat expect = nim_sum(2, {tl.sg(al), tr.sg(ar)});
                             if (ts.sg(a) != expect) {
                                 v.pass = false;
                                 v.witness = json{{"position", position_json(a)},
                                                  {"sum_sg", ts.sg(a)},
                                                  {"expected", expect}};
                             }
                         });
                     }});

        r.push_back({{"saturation-criterion",
                      "digit test for saturation moves equals the order-of-sum definition",
                      {{"p", 0}, {"bound", 9}, {"m", 3}}},
                     [](const Params& P, Verdict& v) {
                         Nat bound = capped(P, "bound", 12);
                         std::size_t m = capped(P, "m", 4);
                         for (Nat p : base_list(P)) {
                             for_each_position(PositionSet::full_grid(m), bound,
                                               [&](const Position& c) {
                                 if (!v.pass) return;
                                 ++v.positions_checked;
                                 bool zero = std::all_of(c.begin(), c.end(),
                                                         [](Nat x) { return x == 0; });
                                 if (zero) return;
                                 Nat total = std::accumulate(c.begin(), c.end(), Nat{0});
                                 std::vector<std::int64_t> sc(c.begin(), c.end());
                                 bool direct = ord(p, total) == mord(p, sc);
                                 if (is_saturation_move(p, c) != direct) {
                                     v.pass = false;
                                     v.witness = json{{"p", p}, {"vector", position_json(c)}};
                                 }
                             });
                         }
                     }});

        r.push_back({{"saturated-nim-table",
                      "sg table of saturated two-heap Nim matches the carry-free heap sum",
                      {{"p", 3}, {"bound", 3}}},
                     [](const Params& P, Verdict& v) {
                         Nat bound = capped(P, "bound", 12);
                         for (Nat p : base_list(P)) {
                             EvalTable table(saturate(nim_game(2), p), bound);
                             static const Nat reference[4][4] = {
                                 {0, 1, 2, 3}, {1, 2, 0, 4}, {2, 0, 1, 5}, {3, 4, 5, 6}};
                             for_each_position(PositionSet::full_grid(2), bound,
                                               [&](const Position& a) {
                                 if (!v.pass) return;
                                 ++v.positions_checked;
                                 Nat got = table.sg(a);
                                 Nat expect = nim_sum(p, a);
                                 bool in_reference = p == 3 && a[0] <= 3 && a[1] <= 3;
                                 if (got != expect ||
                                     (in_reference && got != reference[a[0]][a[1]])) {
                                     v.pass = false;
                                     v.witness = json{{"p", p},
                                                      {"position", position_json(a)},
                                                      {"sg", got},
                                                      {"expected", expect}};
                                 }
                             });
                         }
                     }});

        r.push_back({{"base-p-nim",
                      "sg of saturated Nim equals the carry-free sum of the heaps",
                      {{"p", 0}, {"bound2", 9}, {"bound3", 6}}},
                     [](const Params& P, Verdict& v) {
                         Nat bound2 = capped(P, "bound2", 12);
                         Nat bound3 = capped(P, "bound3", 9);
                         for (Nat p : base_list(P))
                             for (std::size_t m : {1u, 2u, 3u}) {
                                 Nat bound = m <= 2 ? bound2 : bound3;
                                 EvalTable table(saturate(nim_game(m), p), bound);
                                 for_each_position(PositionSet::full_grid(m), bound,
                                                   [&](const Position& a) {
                                     if (!v.pass) return;
                                     ++v.positions_checked;
                                     if (table.sg(a) != nim_sum(p, a)) {
                                         v.pass = false;
                                         v.witness = json{{"p", p},
                                                          {"position", position_json(a)},
                                                          {"sg", table.sg(a)},
                                                          {"expected", nim_sum(p, a)}};
                                     }
                                 });
                             }
                     }});

        r.push_back({{"psi-vs-brute",
                      "sg of saturated Welter equals the closed-form value psi",
                      {{"p", 0}, {"bound2", 9}, {"bound3", 6}}},
                     [](const Params& P, Verdict& v) {
                         Nat bound2 = capped(P, "bound2", 12);
                         Nat bound3 = capped(P, "bound3", 9);
                         for (Nat p : base_list(P))
                             for (std::size_t m : {1u, 2u, 3u}) {
                                 Nat bound = m <= 2 ? bound2 : bound3;
                                 EvalTable table(saturate(welter_game(m), p), bound);
                                 for_each_position(PositionSet::distinct_coords(m), bound,
                                                   [&](const Position& a) {
                                     if (!v.pass) return;
                                     ++v.positions_checked;
                                     if (table.sg(a) != psi(p, a)) {
                                         v.pass = false;
                                         v.witness = json{{"p", p},
                                                          {"position", position_json(a)},
                                                          {"sg", table.sg(a)},
                                                          {"psi", psi(p, a)}};
                                     }
                                 });
                             }
                     }});

        r.push_back({{"welter-self-2sat",
                      "adding base-2 saturation moves leaves Welter's sg unchanged",
                      {{"bound2", 8}, {"bound3", 6}}},
                     [](const Params& P, Verdict& v) {
                         Nat bound2 = capped(P, "bound2", 12);
                         Nat bound3 = capped(P, "bound3", 9);
                         for (std::size_t m : {2u, 3u}) {
                             Nat bound = m == 2 ? bound2 : bound3;
                             EvalTable plain(welter_game(m), bound);
                             EvalTable sat(saturate(welter_game(m), 2), bound);
                             for_each_position(PositionSet::distinct_coords(m), bound,
                                               [&](const Position& a) {
                                 if (!v.pass) return;
                                 ++v.positions_checked;
                                 if (plain.sg(a) != sat.sg(a) || plain.sg(a) != psi(2, a)) {
                                     v.pass = false;
                                     v.witness = json{{"position", position_json(a)},
                                                      {"plain_sg", plain.sg(a)},
                                                      {"saturated_sg", sat.sg(a)},
                                                      {"psi", psi(2, a)}};
                                 }
                             });
                         }
                     }});

        r.push_back({{"welter-sum-formula",
                      "sg of a saturated sum of Welter games is the carry-free sum of psi values",
                      {{"p", 0}, {"bound", 6}}},
                     [](const Params& P, Verdict& v) {
                         Nat bound = capped(P, "bound", 8);
                         for (Nat p : base_list(P))
                             for (std::size_t m1 : {1u, 2u})
                                 for (std::size_t m2 : {1u, 2u}) {
                                     GameSpec sum =
                                         disjunctive_sum({welter_game(m1), welter_game(m2)});
                                     EvalTable table(saturate(sum, p), bound);
                                     for_each_position(sum.positions, bound,
                                                       [&](const Position& a) {
                                         if (!v.pass) return;
                                         ++v.positions_checked;
                                         SumPosition parts{
                                             Position(a.begin(),
                                                      a.begin() + static_cast<std::ptrdiff_t>(m1)),
                                             Position(a.begin() + static_cast<std::ptrdiff_t>(m1),
                                                      a.end())};
                                         if (table.sg(a) != psi_sum(p, parts)) {
                                             v.pass = false;
                                             v.witness =
                                                 json{{"p", p},
                                                      {"position", position_json(a)},
                                                      {"sg", table.sg(a)},
                                                      {"psi_sum", psi_sum(p, parts)}};
                                         }
                                     });
                                 }
                     }});

        r.push_back({{"calm-games",
                      "Nim and Welter pass the calmness congruence on every descendant pair",
                      {{"p", 0}, {"bound2", 9}, {"bound3", 6}}},
                     [](const Params& P, Verdict& v) {
                         Nat bound2 = capped(P, "bound2", 12);
                         Nat bound3 = capped(P, "bound3", 9);
                         for (Nat p : base_list(P)) {
                             struct Case {
                                 GameSpec spec;
                                 Nat bound;
                                 const char* name;
                             };
                             std::vector<Case> cases;
                             cases.push_back({nim_game(1), bound2, "nim:1"});
                             cases.push_back({nim_game(2), bound2, "nim:2"});
                             cases.push_back({welter_game(2), bound2, "welter:2"});
                             cases.push_back({welter_game(3), bound3, "welter:3"});
                             for (const Case& c : cases) {
                                 CalmReport report = check_calm(c.spec, p, c.bound);
                                 v.positions_checked += report.pairs_checked;
                                 if (!report.calm) {
                                     v.pass = false;
                                     v.witness = json{{"p", p},
                                                      {"game", c.name},
                                                      {"A", position_json(report.witness->a)},
                                                      {"B", position_json(report.witness->b)},
                                                      {"level", report.witness->level}};
                                     return;
                                 }
                             }
                         }
                     }});

        r.push_back({{"calm-counterexample",
                      "the single heap restricted to {0,p} violates calmness at (p, 0)",
                      {{"p", 0}}},
                     [](const Params& P, Verdict& v) {
                         for (Nat p : base_list(P)) {
                             CalmReport report = check_calm(restricted_heap_game(p), p, p);
                             ++v.positions_checked;
                             bool expected = !report.calm && report.witness &&
                                             report.witness->a == Position{p} &&
                                             report.witness->b == Position{0};
                             if (!expected) {
                                 v.pass = false;
                                 v.witness = json{{"p", p}, {"observed", "calm"}};
                                 return;
                             }
                             v.witness = json{{"p", p},
                                              {"A", position_json(report.witness->a)},
                                              {"B", position_json(report.witness->b)},
                                              {"sg_difference", report.witness->sg_difference},
                                              {"coordinate_difference",
                                               report.witness->coordinate_difference},
                                              {"modulus", report.witness->modulus}};
                         }
                     }});

        r.push_back({{"pn-welter-nim",
                      "saturated Welter+Nim sums split as carry-free sums of saturated sg",
                      {{"p", 0}, {"bound", 6}}},
                     [](const Params& P, Verdict& v) {
                         Nat bound = capped(P, "bound", 8);
                         for (Nat p : base_list(P)) {
                             PnReport report = check_pn(welter_game(3), nim_game(1), p, bound);
                             v.positions_checked += report.positions_checked;
                             if (!report.holds) {
                                 v.pass = false;
                                 v.witness = json{{"p", p},
                                                  {"position", position_json(report.witness->a)},
                                                  {"sum_sg", report.witness->sum_sg},
                                                  {"left_sg", report.witness->left_sg},
                                                  {"right_sg", report.witness->right_sg}};
                                 return;
                             }
                         }
                     }});

        r.push_back({{"pn-counterexample",
                      "the non-calm {0,p} heap breaks the carry-free sum rule next to Nim",
                      {{"p", 0}}},
                     [](const Params& P, Verdict& v) {
                         for (Nat p : base_list(P)) {
                             PnReport report =
                                 check_pn(restricted_heap_game(p), nim_game(1), p, p + 2);
                             v.positions_checked += report.positions_checked;
                             if (report.holds) {
                                 v.pass = false;
                                 v.witness = json{{"p", p}, {"observed", "holds"}};
                                 return;
                             }
                             v.witness = json{{"p", p},
                                              {"position", position_json(report.witness->a)},
                                              {"sum_sg", report.witness->sum_sg},
                                              {"left_sg", report.witness->left_sg},
                                              {"right_sg", report.witness->right_sg}};
                         }
                     }});

        r.push_back({{"full-descendants",
                      "every position of a saturated Welter sum has a full descendant of equal sg",
                      {{"p", 2}, {"bound", 6}}},
                     [](const Params& P, Verdict& v) {
                         Nat p = P.at("p") == 0 ? 2 : P.at("p");
                         require_base(p);
                         Nat bound = capped(P, "bound", 6);
                         // Single Welter game, verified against the brute table.
                         {
                             EvalTable table(saturate(welter_game(3), p), bound);
                             for_each_position(PositionSet::distinct_coords(3), bound,
                                               [&](const Position& a) {
                                 if (!v.pass) return;
                                 ++v.positions_checked;
                                 Position b = full_descendant(p, a);
                                 bool ok = table.sg(b) == table.sg(a) &&
                                           table.lg(b) == table.sg(a);
                                 for (std::size_t i = 0; i < a.size(); ++i)
                                     ok = ok && b[i] <= a[i];
                                 if (!ok) {
                                     v.pass = false;
                                     v.witness = json{{"p", p},
                                                      {"position", position_json(a)},
                                                      {"descendant", position_json(b)}};
                                 }
                             });
                         }
                         if (!v.pass) return;
                         // Sum of two Welter games.
                         {
                             GameSpec sum = disjunctive_sum({welter_game(3), welter_game(2)});
                             EvalTable table(saturate(sum, p), bound);
                             for_each_position(sum.positions, bound, [&](const Position& a) {
                                 if (!v.pass) return;
                                 ++v.positions_checked;
                                 SumPosition parts{Position(a.begin(), a.begin() + 3),
                                                   Position(a.begin() + 3, a.end())};
                                 SumPosition b = full_descendant(p, parts);
                                 Position flat;
                                 for (const Position& part : b)
                                     flat.insert(flat.end(), part.begin(), part.end());
                                 bool ok = table.sg(flat) == table.sg(a) &&
                                           table.lg(flat) == table.sg(a);
                                 for (std::size_t i = 0; i < a.size(); ++i)
                                     ok = ok && flat[i] <= a[i];
                                 if (!ok) {
                                     v.pass = false;
                                     v.witness = json{{"p", p},
                                                      {"position", position_json(a)},
                                                      {"descendant", position_json(flat)}};
                                 }
                             });
                         }
                     }});

        r.push_back({{"diagram-bijection",
                      "positions and diagrams correspond; cell count equals the longest walk",
                      {{"m", 4}, {"bound", 6}}},
                     [](const Params& P, Verdict& v) {
                         std::size_t max_m = capped(P, "m", 4);
                         Nat bound = capped(P, "bound", 9);
                         for (std::size_t m = 1; m <= max_m; ++m) {
                             EvalTable table(welter_game(m), bound);
                             for_each_position(PositionSet::distinct_coords(m), bound,
                                               [&](const Position& a) {
                                 if (!v.pass) return;
                                 ++v.positions_checked;
                                 YoungDiagram y = position_to_diagram(a);
                                 Position sorted(a);
                                 std::sort(sorted.begin(), sorted.end(), std::greater<>());
                                 bool ok = diagram_to_position(y, m) == sorted &&
                                           y.cells() == table.lg(a);
                                 if (!ok) {
                                     v.pass = false;
                                     v.witness = json{{"position", position_json(a)}};
                                 }
                             });
                         }
                     }});

        r.push_back({{"hook-correspondence",
                      "playing a Welter move removes exactly the matched hook",
                      {{"bound", 6}}},
                     [](const Params& P, Verdict& v) {
                         Nat bound = capped(P, "bound", 8);
                         GameSpec w3 = welter_game(3);
                         for_each_position(PositionSet::distinct_coords(3), bound,
                                           [&](const Position& a) {
                             if (!v.pass) return;
                             for (const Position& b : options(w3, a)) {
                                 ++v.positions_checked;
                                 auto [i, j] = move_matches_hook(a, b);
                                 if (remove_hook(position_to_diagram(a), i, j) !=
                                     position_to_diagram(b)) {
                                     v.pass = false;
                                     v.witness = json{{"from", position_json(a)},
                                                      {"to", position_json(b)},
                                                      {"row", i},
                                                      {"column", j}};
                                     return;
                                 }
                             }
                         });
                     }});

        r.push_back({{"psi-hook-form",
                      "the pairwise repdigit form and the hook pnorm form of psi agree",
                      {{"p", 0}, {"bound", 6}}},
                     [](const Params& P, Verdict& v) {
                         Nat bound = capped(P, "bound", 9);
                         for (Nat p : base_list(P))
                             for_each_position(PositionSet::distinct_coords(3), bound,
                                               [&](const Position& a) {
                                 if (!v.pass) return;
                                 ++v.positions_checked;
                                 if (psi(p, a) != psi_diagram(p, position_to_diagram(a))) {
                                     v.pass = false;
                                     v.witness = json{{"p", p}, {"position", position_json(a)}};
                                 }
                             });
                     }});

        r.push_back({{"hook-formula",
                      "standard tableau counts by hook formula match literal enumeration",
                      {{"cells", 8}}},
                     [](const Params& P, Verdict& v) {
                         Nat max_cells = capped(P, "cells", kOracleCap);
                         auto check = [&](const DiagramTuple& t) {
                             if (!v.pass) return;
                             ++v.positions_checked;
                             if (tableau_count(t) != tableau_count_oracle(t)) {
                                 v.pass = false;
                                 v.witness = json{{"shape", parts_json(t)}};
                             }
                         };
                         for (Nat n = 0; n <= max_cells; ++n)
                             for (const YoungDiagram& y : partitions_of(n)) check({y});
                         for (const DiagramTuple& t : tuples_up_to(2, max_cells)) check(t);
                     }});

        r.push_back({{"fcount-recurrence",
                      "tableau counts satisfy the corner-removal recurrence",
                      {{"cells", 10}}},
                     [](const Params& P, Verdict& v) {
                         Nat max_cells = capped(P, "cells", 16);
                         for (Nat n = 1; n <= max_cells; ++n)
                             for (const YoungDiagram& y : partitions_of(n)) {
                                 if (!v.pass) return;
                                 ++v.positions_checked;
                                 BigCount total = 0;
                                 for (const YoungDiagram& r2 : corner_removals(y))
                                     total += tableau_count(r2);
                                 if (tableau_count(y) != total) {
                                     v.pass = false;
                                     v.witness = json{{"shape", parts_json({y})}};
                                 }
                             }
                     }});

        r.push_back({{"macdonald-criterion",
                      "the count is prime to p exactly when psi_p equals the cell count",
                      {{"p", 0}, {"cells", 14}, {"tuple_cells", 10}}},
                     [](const Params& P, Verdict& v) {
                         Nat max_cells = capped(P, "cells", 16);
                         Nat tuple_cells = capped(P, "tuple_cells", 12);
                         auto check = [&](Nat p, const DiagramTuple& t) {
                             if (!v.pass) return;
                             ++v.positions_checked;
                             bool coprime = nu_of_fcount(p, t) == 0;
                             bool full = psi_diagram(p, t) == cells(t);
                             if (coprime != full) {
                                 v.pass = false;
                                 v.witness = json{{"p", p},
                                                  {"shape", parts_json(t)},
                                                  {"valuation", nu_of_fcount(p, t)},
                                                  {"psi", psi_diagram(p, t)},
                                                  {"cells", cells(t)}};
                             }
                         };
                         for (Nat p : base_list(P))
                             for (Nat n = 0; n <= max_cells; ++n)
                                 for (const YoungDiagram& y : partitions_of(n)) check(p, {y});
                         for (Nat p : base_list(P, {2, 3}))
                             for (std::size_t k : {2u, 3u})
                                 for (const DiagramTuple& t : tuples_up_to(k, tuple_cells))
                                     check(p, t);
                     }});

        r.push_back({{"pprime-subdiagram",
                      "every diagram includes a psi_p-cell subdiagram with count prime to p",
                      {{"p", 0}, {"cells", 12}}},
                     [](const Params& P, Verdict& v) {
                         Nat max_cells = capped(P, "cells", 14);
                         for (Nat p : base_list(P))
                             for (Nat n = 0; n <= max_cells; ++n)
                                 for (const YoungDiagram& y : partitions_of(n)) {
                                     if (!v.pass) return;
                                     ++v.positions_checked;
                                     YoungDiagram z = find_pprime_subdiagram(p, y);
                                     bool ok = y.includes(z) && z.cells() == psi_diagram(p, y) &&
                                               nu_of_fcount(p, z) == 0;
                                     if (!ok) {
                                         v.pass = false;
                                         v.witness = json{{"p", p}, {"shape", parts_json({y})}};
                                     }
                                 }
                     }});

        r.push_back({{"pprime-subdiagram-pairs",
                      "every pair of diagrams includes a componentwise such pair",
                      {{"p", 0}, {"cells", 10}}},
                     [](const Params& P, Verdict& v) {
                         Nat max_cells = capped(P, "cells", 12);
                         for (Nat p : base_list(P, {2, 3}))
                             for (const DiagramTuple& t : tuples_up_to(2, max_cells)) {
                                 if (!v.pass) return;
                                 ++v.positions_checked;
                                 DiagramTuple z = find_pprime_subdiagram(p, t);
                                 bool ok = includes(t, z) && cells(z) == psi_diagram(p, t) &&
                                           nu_of_fcount(p, z) == 0;
                                 if (!ok) {
                                     v.pass = false;
                                     v.witness = json{{"p", p}, {"shape", parts_json(t)}};
                                 }
                             }
                     }});

        r.push_back({{"carry-lemma",
                      "congruent vectors: plain sums, carry-free sums and the top digit agree",
                      {{"p", 0}, {"instances", 10000}}},
                     [](const Params& P, Verdict& v) {
                         Nat instances = capped(P, "instances", 1000000);
                         std::mt19937_64 rng(0x5eed);
                         for (Nat p : base_list(P))
                             for (Nat iter = 0; iter < instances; ++iter) {
                                 if (!v.pass) return;
                                 ++v.positions_checked;
                                 Nat m = 1 + rng() % 4;
                                 Nat n = rng() % 4;
                                 Nat pn = pow_nat(p, n);
                                 Nat modulus = pn * p;
                                 std::vector<Nat> a(m), b(m);
                                 for (Nat i = 0; i < m; ++i) {
                                     b[i] = rng() % (p * p * p);
                                     a[i] = b[i] + (rng() % (p * p)) * pn;
                                 }
                                 Nat plain = 0, top = 0;
                                 std::vector<Nat> diffs(m);
                                 for (Nat i = 0; i < m; ++i) {
                                     plain += a[i] - b[i];
                                     diffs[i] = nim_diff(p, a[i], b[i]);
                                     top += (digit(p, a[i], n) + p - digit(p, b[i], n)) % p;
                                 }
                                 Nat lhs = plain % modulus;
                                 Nat mid = nim_sum(p, diffs) % modulus;
                                 Nat rhs = (top % p) * pn;
                                 if (lhs != mid || mid != rhs) {
                                     v.pass = false;
                                     v.witness = json{{"p", p},
                                                      {"A", position_json(a)},
                                                      {"B", position_json(b)},
                                                      {"level", n}};
                                 }
                             }
                     }});

        return r;
    }();
    return suites;
}

} // namespace detail

} // namespace grundy::verify
