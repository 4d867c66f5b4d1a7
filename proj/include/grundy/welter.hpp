#pragma once

// Closed forms and verification machinery for Welter's game and disjunctive
// sums of Welter's games: the carry-free Sprague-Grundy formula of their
// p-saturations, calmness checks against brute-force tables, and the
// constructive search for full descendants.

#include "grundy/gamecore.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace grundy {

/// A position in a disjunctive sum of Welter's games, one coordinate block
/// per summand.
using SumPosition = std::vector<Position>;

inline void require_distinct(std::span<const Nat> coords) {
    if (coords.empty()) throw std::invalid_argument("empty position");
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t j = i + 1; j < coords.size(); ++j)
            if (coords[i] == coords[j])
                throw std::invalid_argument("coordinates must be pairwise distinct");
}

/// Sprague-Grundy value of a p-saturation of Welter's game: the carry-free
/// sum of the coordinates and, for every coordinate pair, the all-(p-1)s
/// repdigit of length ord_p(difference) + 1. At p = 2 this is Welter's
/// classical closed form.
inline Nat psi(Nat p, std::span<const Nat> coords) {
    require_base(p);
    require_distinct(coords);
    std::vector<Nat> terms(coords.begin(), coords.end());
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t j = i + 1; j < coords.size(); ++j) {
            Nat diff = coords[i] > coords[j] ? coords[i] - coords[j] : coords[j] - coords[i];
            terms.push_back(repdigit_allnines(p, diff));
        }
    return nim_sum(p, terms);
}

inline Nat psi(Nat p, const Position& coords) {
    return psi(p, std::span<const Nat>(coords));
}

/// Value of a sum position: carry-free sum of the per-part values.
inline Nat psi_sum(Nat p, const SumPosition& parts) {
    if (parts.empty()) throw std::invalid_argument("empty sum position");
    std::vector<Nat> values;
    values.reserve(parts.size());
    for (const Position& part : parts) values.push_back(psi(p, part));
    return nim_sum(p, values);
}

inline Nat staircase_offset(std::size_t m) {
    return m < 2 ? 0 : static_cast<Nat>(m) * (m - 1) / 2;
}

/// Longest walk from a Welter position: coordinate sum minus (m choose 2).
inline Nat welter_lg(std::span<const Nat> coords) {
    Nat total = std::accumulate(coords.begin(), coords.end(), Nat{0});
    return total - staircase_offset(coords.size());
}

// ---------------------------------------------------------------------------
// Calmness
// ---------------------------------------------------------------------------

struct CalmWitness {
    Position a;
    Position b;
    Nat level;                          // N = mord_p(A - B)
    std::int64_t sg_difference;         // sg(A) - sg(B) in the saturation
    std::int64_t coordinate_difference; // sum of (a_i - b_i)
    Nat modulus;                        // p^(N+1)
};

struct CalmReport {
    bool calm = true;
    std::optional<CalmWitness> witness;
    Nat pairs_checked = 0;
};

/// Exhaustive calmness check on the in-bound box: for every position A and
/// every proper descendant B of A (reachability in the original game, values
/// from its canonical p-saturation), the sg difference must be congruent to
/// the coordinate-sum difference mod p^(N+1), N = mord_p(A - B). Returns the
/// first violation in lexicographic sweep order.
inline CalmReport check_calm(const GameSpec& spec, Nat p, Nat bound) {
    GameSpec sat = saturate(spec, p);
    EvalTable table(sat, bound);
    DescendantIndex reachable(spec);
    CalmReport report;
    bool done = false;
    for_each_position(spec.positions, bound, [&](const Position& a) {
        if (done) return;
        for (const Position& b : reachable.descendants(a)) {
            ++report.pairs_checked;
            std::vector<std::int64_t> diff(a.size());
            std::int64_t coord_diff = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                diff[i] = static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]);
                coord_diff += diff[i];
            }
            Nat level = mord(p, diff).value(); // B != A, so finite
            Nat modulus = pow_nat(p, level + 1);
            std::int64_t sg_diff = static_cast<std::int64_t>(table.sg(a)) -
                                   static_cast<std::int64_t>(table.sg(b));
            std::int64_t residue = (sg_diff - coord_diff) % static_cast<std::int64_t>(modulus);
            if (residue != 0) {
                report.calm = false;
                report.witness = CalmWitness{a, b, level, sg_diff, coord_diff, modulus};
                done = true;
                return;
            }
        }
    });
    return report;
}

struct PnWitness {
    Position a;
    Nat sum_sg;
    Nat left_sg;
    Nat right_sg;
};

struct PnReport {
    bool holds = true;
    std::optional<PnWitness> witness;
    Nat positions_checked = 0;
};

/// Checks, on the in-bound box, that the sg of the canonical p-saturation of
/// the disjunctive sum equals the carry-free sum of the sg values of the
/// summands' canonical p-saturations. First counterexample semantics.
inline PnReport check_pn(const GameSpec& left, const GameSpec& right, Nat p, Nat bound) {
    GameSpec sum = disjunctive_sum({left, right});
    EvalTable sum_table(saturate(sum, p), bound);
    EvalTable left_table(saturate(left, p), bound);
    EvalTable right_table(saturate(right, p), bound);
    PnReport report;
    bool done = false;
    for_each_position(sum.positions, bound, [&](const Position& a) {
        if (done) return;
        ++report.positions_checked;
        Position al(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(left.arity));
        Position ar(a.begin() + static_cast<std::ptrdiff_t>(left.arity), a.end());
        Nat ls = left_table.sg(al);
        Nat rs = right_table.sg(ar);
        Nat ss = sum_table.sg(a);
        if (ss != nim_sum(p, {ls, rs})) {
            report.holds = false;
            report.witness = PnWitness{a, ss, ls, rs};
            done = true;
        }
    });
    return report;
}

// ---------------------------------------------------------------------------
// Full descendants
// ---------------------------------------------------------------------------

/// The largest value beta >= (carry-free sum of the alphas) such that a full
/// position with per-part values summing to beta exists: all digits below
/// M+1 are p-1 and the digits above M are those of the carry-free sum, where
/// M is the highest level at which the plain digit sums of the alphas reach p
/// (M = -1 when they never do, giving beta = the carry-free sum itself).
inline Nat target_full_value(Nat p, std::span<const Nat> alphas) {
    require_base(p);
    Nat alpha = nim_sum(p, alphas);
    std::ptrdiff_t m_level = -1;
    Nat level = 0;
    for (Nat scale = 1;; scale *= p, ++level) {
        Nat digit_total = 0;
        bool any = false;
        for (Nat a : alphas) {
            Nat rest = a / scale;
            digit_total += rest % p;
            any = any || rest > 0;
        }
        if (digit_total >= p) m_level = static_cast<std::ptrdiff_t>(level);
        if (!any) break;
    }
    if (m_level < 0) return alpha;
    Nat block = pow_nat(p, static_cast<Nat>(m_level) + 1);
    return (block - 1) + (alpha / block) * block;
}

inline Nat target_full_value(Nat p, std::initializer_list<Nat> alphas) {
    return target_full_value(p, std::span<const Nat>(alphas.begin(), alphas.size()));
}

/// Splits beta = target_full_value(p, alphas) into per-part values beta_i
/// with beta_i <= alpha_i whose plain sum and carry-free sum both equal
/// beta. Digits above M copy the alphas; the level-M digits are filled
/// greedily to total p-1; the first part left slack at level M receives the
/// all-(p-1) tail below M.
inline std::vector<Nat> split_target(Nat p, std::span<const Nat> alphas, Nat beta) {
    require_base(p);
    if (beta != target_full_value(p, alphas))
        throw std::invalid_argument("beta was not produced by target_full_value");
    std::vector<Nat> result(alphas.begin(), alphas.end());
    Nat alpha = nim_sum(p, alphas);
    if (beta == alpha) {
        // Still verify the postconditions; with no carrying level they hold
        // with beta_i = alpha_i.
        Nat plain = std::accumulate(result.begin(), result.end(), Nat{0});
        if (plain != beta || nim_sum(p, result) != beta)
            throw std::logic_error("split_target postcondition failed");
        return result;
    }
    // Recompute the carrying level M, the highest level where the plain
    // digit sums of the alphas reach p.
    Nat m_level = 0;
    {
        Nat level = 0;
        for (Nat scale = 1; scale <= beta; scale *= p, ++level) {
            Nat digit_total = 0;
            for (Nat a : alphas) digit_total += (a / scale) % p;
            if (digit_total >= p) m_level = level;
        }
    }
    Nat block = pow_nat(p, m_level + 1);
    Nat at_m = pow_nat(p, m_level);
    for (std::size_t i = 0; i < result.size(); ++i) result[i] = (alphas[i] / block) * block;
    Nat remaining = p - 1;
    std::vector<Nat> m_digit(alphas.size(), 0);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        Nat available = (alphas[i] / at_m) % p;
        m_digit[i] = std::min(available, remaining);
        remaining -= m_digit[i];
        result[i] += m_digit[i] * at_m;
    }
    if (remaining != 0) throw std::logic_error("split_target digit assignment failed");
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (m_digit[i] < (alphas[i] / at_m) % p) {
            result[i] += at_m - 1; // all-(p-1) tail below level M
            break;
        }
    }
    Nat plain = std::accumulate(result.begin(), result.end(), Nat{0});
    if (plain != beta || nim_sum(p, result) != beta)
        throw std::logic_error("split_target postcondition failed");
    for (std::size_t i = 0; i < alphas.size(); ++i)
        if (result[i] > alphas[i]) throw std::logic_error("split_target exceeded a component");
    return result;
}

namespace detail {

struct PartCandidate {
    Nat value;       // common sg = lg value in the p-saturation
    Position coords; // strictly decreasing
};

/// All full positions (value = longest walk) among the sorted descendants of
/// a strictly decreasing Welter position, the position itself included.
/// Enumeration is lexicographically ascending.
inline std::vector<PartCandidate> full_part_candidates(Nat p, const Position& sorted_desc) {
    std::size_t m = sorted_desc.size();
    std::vector<PartCandidate> result;
    Position current(m);
    auto dfs = [&](auto&& self, std::size_t r) -> void {
        if (r == m) {
            Nat walk = welter_lg(current);
            if (psi(p, current) == walk) result.push_back({walk, current});
            return;
        }
        Nat floor = static_cast<Nat>(m - 1 - r);
        Nat ceiling = sorted_desc[r];
        if (r > 0 && current[r - 1] - 1 < ceiling) ceiling = current[r - 1] - 1;
        for (Nat v = floor; v <= ceiling; ++v) {
            current[r] = v;
            self(self, r + 1);
        }
    };
    dfs(dfs, 0);
    return result;
}

inline std::vector<std::size_t> descending_rank(const Position& coords) {
    std::vector<std::size_t> index(coords.size());
    std::iota(index.begin(), index.end(), std::size_t{0});
    std::sort(index.begin(), index.end(),
              [&](std::size_t i, std::size_t j) { return coords[i] > coords[j]; });
    return index;
}

} // namespace detail

/// Finds a full position reachable from the sum position whose common
/// sg = lg value equals target (default: the value of the position itself).
///
/// The search assigns each summand a full descendant of its own block so
/// that the plain sum and the carry-free sum of the assigned values both
/// equal the target; such an assignment always exists for targets up to the
/// position's value. Tie-break, fixed so the result is deterministic: the
/// first summand takes the lexicographically smallest realization admitting
/// a completion, every later summand the lexicographically largest.
inline SumPosition full_descendant(Nat p, const SumPosition& a,
                                   std::optional<Nat> target_opt = {}) {
    require_base(p);
    if (a.empty()) throw std::invalid_argument("empty sum position");
    Nat total = psi_sum(p, a);
    Nat target = target_opt.value_or(total);
    if (target > total) throw std::invalid_argument("target exceeds the position's value");

    std::size_t k = a.size();
    std::vector<std::vector<std::size_t>> ranks(k);
    std::vector<std::vector<detail::PartCandidate>> candidates(k);
    for (std::size_t i = 0; i < k; ++i) {
        require_distinct(a[i]);
        ranks[i] = detail::descending_rank(a[i]);
        Position sorted(a[i].size());
        for (std::size_t r = 0; r < a[i].size(); ++r) sorted[r] = a[i][ranks[i][r]];
        candidates[i] = detail::full_part_candidates(p, sorted);
    }

    std::vector<const detail::PartCandidate*> chosen(k, nullptr);
    auto assign = [&](auto&& self, std::size_t i, Nat sum_rest, Nat xor_rest) -> bool {
        if (i == k) return sum_rest == 0 && xor_rest == 0;
        const auto& list = candidates[i];
        auto try_one = [&](const detail::PartCandidate& cand) -> bool {
            if (cand.value > sum_rest) return false;
            if (!self(self, i + 1, sum_rest - cand.value, nim_diff(p, xor_rest, cand.value)))
                return false;
            chosen[i] = &cand;
            return true;
        };
        if (i == 0) {
            for (const auto& cand : list)
                if (try_one(cand)) return true;
        } else {
            for (auto it = list.rbegin(); it != list.rend(); ++it)
                if (try_one(*it)) return true;
        }
        return false;
    };
    if (!assign(assign, 0, target, target))
        throw std::logic_error("full descendant search exhausted"); // verification failure

    SumPosition result(k);
    for (std::size_t i = 0; i < k; ++i) {
        result[i].resize(a[i].size());
        for (std::size_t r = 0; r < a[i].size(); ++r)
            result[i][ranks[i][r]] = chosen[i]->coords[r];
    }

    // Postconditions: reachable, full, and at the requested value.
    Nat walk_total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (result[i][j] > a[i][j]) throw std::logic_error("full descendant not reachable");
        walk_total += welter_lg(result[i]);
    }
    if (walk_total != target || psi_sum(p, result) != target)
        throw std::logic_error("full descendant postcondition failed");
    return result;
}

/// Convenience for a single Welter game.
inline Position full_descendant(Nat p, const Position& a, std::optional<Nat> target_opt = {}) {
    return full_descendant(p, SumPosition{a}, target_opt).front();
}

} // namespace grundy
