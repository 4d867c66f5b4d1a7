#pragma once

// Young-diagram calculus: the bijection between Welter positions and
// diagrams, hooks and hook removal (on beta-sets, with a direct cell-level
// route kept as a cross-check), standard-tableau counts by hook formula and
// by literal enumeration, p-adic valuations of those counts, and the
// constructive search for a subdiagram whose tableau count is prime to p.

#include "grundy/welter.hpp"

#include <string>

namespace grundy {

using BigCount = unsigned __int128;

inline std::string to_decimal(BigCount v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

inline bool is_prime(Nat p) {
    if (p < 2) return false;
    for (Nat d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline void require_prime(Nat p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime here");
}

/// A partition with weakly decreasing positive parts; the empty diagram is
/// valid. Trailing zeros are dropped on construction. Cells are addressed
/// 1-based: (i, j) with 1 <= j <= parts()[i-1].
class YoungDiagram {
public:
    YoungDiagram() = default;

    explicit YoungDiagram(std::vector<Nat> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i] < parts_[i + 1])
                throw std::invalid_argument("parts must be weakly decreasing");
    }

    YoungDiagram(std::initializer_list<Nat> parts) : YoungDiagram(std::vector<Nat>(parts)) {}

    [[nodiscard]] const std::vector<Nat>& parts() const { return parts_; }
    [[nodiscard]] std::size_t rows() const { return parts_.size(); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }

    [[nodiscard]] Nat cells() const {
        Nat total = 0;
        for (Nat part : parts_) total += part;
        return total;
    }

    [[nodiscard]] bool contains_cell(std::size_t i, std::size_t j) const {
        return i >= 1 && j >= 1 && i <= parts_.size() && j <= parts_[i - 1];
    }

    /// Height of column j (1-based): number of rows with at least j cells.
    [[nodiscard]] std::size_t column_height(std::size_t j) const {
        std::size_t height = 0;
        while (height < parts_.size() && parts_[height] >= j) ++height;
        return height;
    }

    [[nodiscard]] bool includes(const YoungDiagram& z) const {
        if (z.rows() > rows()) return false;
        for (std::size_t i = 0; i < z.rows(); ++i)
            if (z.parts_[i] > parts_[i]) return false;
        return true;
    }

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
    friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<Nat> parts_;
};

using DiagramTuple = std::vector<YoungDiagram>;

inline Nat cells(const DiagramTuple& shapes) {
    Nat total = 0;
    for (const YoungDiagram& y : shapes) total += y.cells();
    return total;
}

inline bool includes(const DiagramTuple& outer, const DiagramTuple& inner) {
    if (outer.size() != inner.size()) return false;
    for (std::size_t l = 0; l < outer.size(); ++l)
        if (!outer[l].includes(inner[l])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Position <-> diagram bijection
// ---------------------------------------------------------------------------

/// Diagram of a Welter position: sort descending, subtract the staircase
/// (m-1, m-2, ..., 0), drop zeros.
inline YoungDiagram position_to_diagram(std::span<const Nat> coords) {
    require_distinct(coords);
    Position sorted(coords.begin(), coords.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::size_t m = sorted.size();
    std::vector<Nat> parts(m);
    for (std::size_t i = 0; i < m; ++i) parts[i] = sorted[i] - static_cast<Nat>(m - 1 - i);
    return YoungDiagram(std::move(parts));
}

inline YoungDiagram position_to_diagram(const Position& coords) {
    return position_to_diagram(std::span<const Nat>(coords));
}

/// The strictly decreasing position whose diagram is Y, padded to m
/// coordinates (the beta-set of Y at length m).
inline Position diagram_to_position(const YoungDiagram& y, std::size_t m) {
    if (m < y.rows() || m < 1)
        throw std::invalid_argument("m must cover every row of the diagram");
    Position coords(m);
    for (std::size_t i = 0; i < m; ++i) {
        Nat part = i < y.rows() ? y.parts()[i] : 0;
        coords[i] = part + static_cast<Nat>(m - 1 - i);
    }
    return coords;
}

// ---------------------------------------------------------------------------
// Hooks
// ---------------------------------------------------------------------------

inline Nat hook_length_at(const YoungDiagram& y, std::size_t i, std::size_t j) {
    if (!y.contains_cell(i, j)) throw std::invalid_argument("cell outside diagram");
    Nat arm = y.parts()[i - 1] - static_cast<Nat>(j);
    Nat leg = static_cast<Nat>(y.column_height(j) - i);
    return arm + leg + 1;
}

/// Multiset of all hook lengths, sorted ascending.
inline std::vector<Nat> hook_lengths(const YoungDiagram& y) {
    std::vector<Nat> hooks;
    hooks.reserve(y.cells());
    for (std::size_t i = 1; i <= y.rows(); ++i)
        for (std::size_t j = 1; j <= y.parts()[i - 1]; ++j)
            hooks.push_back(hook_length_at(y, i, j));
    std::sort(hooks.begin(), hooks.end());
    return hooks;
}

/// Multiset addition of the components' hook multisets.
inline std::vector<Nat> hook_lengths(const DiagramTuple& shapes) {
    std::vector<Nat> hooks;
    for (const YoungDiagram& y : shapes) {
        std::vector<Nat> part = hook_lengths(y);
        hooks.insert(hooks.end(), part.begin(), part.end());
    }
    std::sort(hooks.begin(), hooks.end());
    return hooks;
}

/// Removes the (i,j)-hook via the beta-set move: subtract the hook length
/// from the i-th beta number. This is the same move the position-to-diagram
/// correspondence assigns to playing in Welter's game.
inline YoungDiagram remove_hook(const YoungDiagram& y, std::size_t i, std::size_t j) {
    Nat h = hook_length_at(y, i, j); // validates the cell
    std::size_t m = y.rows();
    Position beta = diagram_to_position(y, m);
    Nat lowered = beta[i - 1] - h; // hook length never exceeds the beta number
    for (std::size_t r = 0; r < m; ++r)
        if (r != i - 1 && beta[r] == lowered)
            throw std::logic_error("beta-set hook removal collided");
    beta[i - 1] = lowered;
    return position_to_diagram(beta);
}

/// Direct cell-level hook removal: delete the hook's cells and push the two
/// remaining pieces together. Kept as an independent route against the
/// beta-set implementation.
inline YoungDiagram remove_hook_by_cells(const YoungDiagram& y, std::size_t i, std::size_t j) {
    if (!y.contains_cell(i, j)) throw std::invalid_argument("cell outside diagram");
    std::size_t q = y.column_height(j); // bottom row of column j
    std::vector<Nat> parts(y.parts());
    for (std::size_t r = i; r + 1 <= q; ++r) parts[r - 1] = y.parts()[r] - 1;
    parts[q - 1] = static_cast<Nat>(j - 1);
    return YoungDiagram(std::move(parts));
}

/// The hook whose removal realizes the Welter move from A to its option B:
/// i is the rank of the changed coordinate among A descending, j the rank of
/// its new value among the naturals missing from A, both 1-based.
inline std::pair<std::size_t, std::size_t> move_matches_hook(const Position& a,
                                                             const Position& b) {
    require_distinct(a);
    require_distinct(b);
    if (a.size() != b.size()) throw std::invalid_argument("arity mismatch");
    std::size_t changed = a.size();
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (a[t] == b[t]) continue;
        if (b[t] > a[t] || changed != a.size())
            throw std::invalid_argument("not a Welter move");
        changed = t;
    }
    if (changed == a.size()) throw std::invalid_argument("not a Welter move");
    std::size_t i = 1;
    for (Nat x : a) i += x > a[changed];
    std::size_t in_a = 0;
    for (Nat x : a) in_a += x <= b[changed];
    std::size_t j = static_cast<std::size_t>(b[changed]) + 1 - in_a;
    return {i, j};
}

// ---------------------------------------------------------------------------
// Standard tableau counts
// ---------------------------------------------------------------------------

inline constexpr Nat kCountCap = 34; // 34! is the largest factorial fitting in 128 bits

/// Number of standard tableaux by the hook formula: n! divided by the
/// product of all hook lengths. Exact 128-bit arithmetic; shapes above
/// kCountCap cells are rejected.
inline BigCount tableau_count(const DiagramTuple& shapes) {
    Nat n = cells(shapes);
    if (n > kCountCap) throw std::invalid_argument("shape too large for exact 128-bit count");
    BigCount factorial = 1;
    for (Nat i = 2; i <= n; ++i) factorial *= i;
    BigCount denominator = 1;
    for (Nat h : hook_lengths(shapes)) denominator *= h;
    if (factorial % denominator != 0) throw std::logic_error("hook product does not divide n!");
    return factorial / denominator;
}

inline BigCount tableau_count(const YoungDiagram& y) { return tableau_count(DiagramTuple{y}); }

inline constexpr Nat kOracleCap = 10;

/// Counts standard tableaux by literally enumerating growth sequences: add
/// one cell at a time, every prefix a diagram tuple inside the target.
/// Factorial-time; capped at kOracleCap cells.
inline BigCount tableau_count_oracle(const DiagramTuple& shapes) {
    Nat n = cells(shapes);
    if (n > kOracleCap) throw std::invalid_argument("oracle cap exceeded");
    std::vector<std::vector<Nat>> current(shapes.size());
    for (std::size_t l = 0; l < shapes.size(); ++l)
        current[l].assign(shapes[l].rows(), 0);
    auto grow = [&](auto&& self, Nat placed) -> BigCount {
        if (placed == n) return 1;
        BigCount total = 0;
        for (std::size_t l = 0; l < shapes.size(); ++l) {
            for (std::size_t r = 0; r < current[l].size(); ++r) {
                bool below_target = current[l][r] < shapes[l].parts()[r];
                bool keeps_shape = r == 0 || current[l][r] < current[l][r - 1];
                if (below_target && keeps_shape) {
                    ++current[l][r];
                    total += self(self, placed + 1);
                    --current[l][r];
                }
            }
        }
        return total;
    };
    return grow(grow, 0);
}

inline BigCount tableau_count_oracle(const YoungDiagram& y) {
    return tableau_count_oracle(DiagramTuple{y});
}

/// Legendre's formula: exponent of prime p in n!.
inline Nat factorial_order(Nat p, Nat n) {
    require_prime(p);
    Nat total = 0;
    for (Nat power = p; power <= n; power *= p) {
        total += n / power;
        if (power > n / p) break; // avoid overflow on the next multiply
    }
    return total;
}

/// Exponent of prime p in the tableau count, computed without forming the
/// count itself: the factorial valuation minus the hook valuations.
inline Nat nu_of_fcount(Nat p, const DiagramTuple& shapes) {
    require_prime(p);
    Nat n = cells(shapes);
    Nat above = factorial_order(p, n);
    Nat below = 0;
    for (Nat h : hook_lengths(shapes)) below += ord(p, h).value();
    if (below > above) throw std::logic_error("negative valuation of an integer count");
    return above - below;
}

inline Nat nu_of_fcount(Nat p, const YoungDiagram& y) {
    return nu_of_fcount(p, DiagramTuple{y});
}

/// Value of the shape under the hook form of the saturated-Welter formula:
/// the carry-free sum of pnorm over the hook multiset. Defined for any base
/// p >= 2; agrees with psi of any corresponding position.
inline Nat psi_diagram(Nat p, const DiagramTuple& shapes) {
    require_base(p);
    std::vector<Nat> terms;
    for (Nat h : hook_lengths(shapes)) terms.push_back(pnorm(p, h));
    return nim_sum(p, terms);
}

inline Nat psi_diagram(Nat p, const YoungDiagram& y) {
    return psi_diagram(p, DiagramTuple{y});
}

// ---------------------------------------------------------------------------
// p'-components
// ---------------------------------------------------------------------------

/// A componentwise subtuple with psi_p(shapes) cells in total whose tableau
/// count is prime to p. Found by translating each component to a Welter
/// position, searching a full position of the disjunctive sum, and mapping
/// back; the result is re-validated from scratch before returning.
inline DiagramTuple find_pprime_subdiagram(Nat p, const DiagramTuple& shapes) {
    require_prime(p);
    if (shapes.empty()) throw std::invalid_argument("empty tuple");
    SumPosition a(shapes.size());
    for (std::size_t l = 0; l < shapes.size(); ++l)
        a[l] = diagram_to_position(shapes[l], std::max<std::size_t>(shapes[l].rows(), 1));
    Nat target = psi_diagram(p, shapes);
    SumPosition b = full_descendant(p, a, target);
    DiagramTuple result(shapes.size());
    for (std::size_t l = 0; l < shapes.size(); ++l) result[l] = position_to_diagram(b[l]);
    if (!includes(shapes, result) || cells(result) != target || nu_of_fcount(p, result) != 0)
        throw std::logic_error("p'-component search returned an invalid witness");
    return result;
}

inline YoungDiagram find_pprime_subdiagram(Nat p, const YoungDiagram& y) {
    return find_pprime_subdiagram(p, DiagramTuple{y}).front();
}

/// All partitions of exactly n, first part descending (so (n) comes first
/// and the all-ones partition last); the order is the sweep order of the
/// verification suites.
inline std::vector<YoungDiagram> partitions_of(Nat n) {
    std::vector<YoungDiagram> result;
    std::vector<Nat> current;
    auto descend = [&](auto&& self, Nat remaining, Nat cap) -> void {
        if (remaining == 0) {
            result.emplace_back(current);
            return;
        }
        for (Nat part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    descend(descend, n, n == 0 ? 1 : n);
    return result;
}

// ---------------------------------------------------------------------------
// Corners
// ---------------------------------------------------------------------------

/// Shapes obtained by deleting one corner cell (hook of length 1), in row
/// order.
inline std::vector<YoungDiagram> corner_removals(const YoungDiagram& y) {
    if (y.empty()) throw std::invalid_argument("empty shape has no corners");
    std::vector<YoungDiagram> result;
    for (std::size_t i = 0; i < y.rows(); ++i) {
        bool corner = i + 1 == y.rows() || y.parts()[i] > y.parts()[i + 1];
        if (!corner) continue;
        std::vector<Nat> parts(y.parts());
        --parts[i];
        result.emplace_back(std::move(parts));
    }
    return result;
}

/// Tuples obtained by deleting one corner cell from one component; ordered
/// by component, then by row.
inline std::vector<DiagramTuple> corner_removals(const DiagramTuple& shapes) {
    if (cells(shapes) == 0) throw std::invalid_argument("empty tuple has no corners");
    std::vector<DiagramTuple> result;
    for (std::size_t l = 0; l < shapes.size(); ++l) {
        if (shapes[l].empty()) continue;
        for (const YoungDiagram& reduced : corner_removals(shapes[l])) {
            DiagramTuple copy = shapes;
            copy[l] = reduced;
            result.push_back(std::move(copy));
        }
    }
    return result;
}

} // namespace grundy
