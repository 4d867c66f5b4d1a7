#pragma once

// Subtraction games as bounded DAGs: positions are vectors of naturals,
// moves subtract a nonzero vector from a designated move set while staying
// inside the position set. Sprague-Grundy and longest-walk values are
// evaluated by memoized recursion over an explicit componentwise bound;
// soundness of the bound follows from moves only ever subtracting.

#include "grundy/padic.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace grundy {

using Position = std::vector<Nat>;

/// True iff C is a move of the saturation move set for base p: C is nonzero
/// and the level-N digits of its components do not sum to 0 mod p, where N
/// is the minimum componentwise order. Equivalent to ord_p(sum C) = mord_p(C).
inline bool is_saturation_move(Nat p, std::span<const Nat> c) {
    require_base(p);
    if (c.empty()) throw std::invalid_argument("saturation move needs arity >= 1");
    Nat level = std::numeric_limits<Nat>::max();
    for (Nat x : c) {
        if (x == 0) continue;
        Nat o = ord(p, x).value();
        level = std::min(level, o);
    }
    if (level == std::numeric_limits<Nat>::max()) return false; // zero vector
    Nat pn = pow_nat(p, level);
    Nat digit_total = 0;
    for (Nat x : c) digit_total += (x / pn) % p;
    return digit_total % p != 0;
}

// ---------------------------------------------------------------------------
// Move sets
// ---------------------------------------------------------------------------

/// A move set over N^m. The zero vector is never a member.
class MoveSet {
public:
    enum class Kind { weight_one, saturation, explicit_set, sum };

    static MoveSet weight_one(std::size_t arity) {
        MoveSet s;
        s.kind_ = Kind::weight_one;
        s.arity_ = arity;
        return s;
    }

    static MoveSet saturation(Nat p, std::size_t arity) {
        require_base(p);
        MoveSet s;
        s.kind_ = Kind::saturation;
        s.arity_ = arity;
        s.base_ = p;
        return s;
    }

    static MoveSet explicit_set(std::size_t arity, std::vector<Position> vectors) {
        MoveSet s;
        s.kind_ = Kind::explicit_set;
        s.arity_ = arity;
        for (const Position& v : vectors) {
            if (v.size() != arity) throw std::invalid_argument("move vector has wrong arity");
            if (std::all_of(v.begin(), v.end(), [](Nat x) { return x == 0; }))
                throw std::invalid_argument("zero vector is not a move");
        }
        std::sort(vectors.begin(), vectors.end());
        vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
        s.vectors_ = std::move(vectors);
        return s;
    }

    /// Zero-padded union of the parts' move sets over the concatenated
    /// coordinates (the move set of a disjunctive sum). Flattens nested sums.
    static MoveSet sum(std::vector<MoveSet> parts) {
        if (parts.empty()) throw std::invalid_argument("sum of zero move sets");
        if (parts.size() == 1) return parts.front();
        MoveSet s;
        s.kind_ = Kind::sum;
        s.arity_ = 0;
        for (MoveSet& part : parts) {
            if (part.kind_ == Kind::sum) {
                for (MoveSet& inner : part.parts_) {
                    s.arity_ += inner.arity_;
                    s.parts_.push_back(std::move(inner));
                }
            } else {
                s.arity_ += part.arity_;
                s.parts_.push_back(std::move(part));
            }
        }
        return s;
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] std::size_t arity() const { return arity_; }
    [[nodiscard]] Nat base() const { return base_; }
    [[nodiscard]] const std::vector<MoveSet>& parts() const { return parts_; }
    [[nodiscard]] const std::vector<Position>& vectors() const { return vectors_; }

    [[nodiscard]] bool contains(std::span<const Nat> delta) const {
        if (delta.size() != arity_) throw std::invalid_argument("delta arity mismatch");
        switch (kind_) {
        case Kind::weight_one: {
            std::size_t nonzero = 0;
            for (Nat d : delta) nonzero += d != 0;
            return nonzero == 1;
        }
        case Kind::saturation:
            return is_saturation_move(base_, delta);
        case Kind::explicit_set:
            return std::binary_search(vectors_.begin(), vectors_.end(),
                                      Position(delta.begin(), delta.end()));
        case Kind::sum: {
            std::size_t offset = 0;
            const MoveSet* active = nullptr;
            std::size_t active_offset = 0;
            for (const MoveSet& part : parts_) {
                auto block = delta.subspan(offset, part.arity_);
                if (std::any_of(block.begin(), block.end(), [](Nat d) { return d != 0; })) {
                    if (active) return false; // moves touch exactly one summand
                    active = &part;
                    active_offset = offset;
                }
                offset += part.arity_;
            }
            if (!active) return false;
            return active->contains(delta.subspan(active_offset, active->arity()));
        }
        }
        return false;
    }

    /// Enumerates every move vector applicable from a position with the given
    /// coordinates (i.e. members of the set that are componentwise <= from).
    void for_each_delta(std::span<const Nat> from,
                        const std::function<void(const Position&)>& fn) const {
        if (from.size() != arity_) throw std::invalid_argument("position arity mismatch");
        switch (kind_) {
        case Kind::weight_one: {
            Position delta(arity_, 0);
            for (std::size_t i = 0; i < arity_; ++i) {
                for (Nat d = 1; d <= from[i]; ++d) {
                    delta[i] = d;
                    fn(delta);
                }
                delta[i] = 0;
            }
            break;
        }
        case Kind::saturation: {
            // Full box scan {0 <= delta <= from} filtered by the digit
            // criterion; cost is the product of (coordinate + 1).
            Position delta(arity_, 0);
            for (;;) {
                if (is_saturation_move(base_, delta)) fn(delta);
                std::size_t i = 0;
                while (i < arity_ && delta[i] == from[i]) delta[i++] = 0;
                if (i == arity_) break;
                ++delta[i];
            }
            break;
        }
        case Kind::explicit_set: {
            for (const Position& v : vectors_) {
                bool fits = true;
                for (std::size_t i = 0; i < arity_; ++i)
                    if (v[i] > from[i]) { fits = false; break; }
                if (fits) fn(v);
            }
            break;
        }
        case Kind::sum: {
            std::size_t offset = 0;
            for (const MoveSet& part : parts_) {
                part.for_each_delta(from.subspan(offset, part.arity()),
                                    [&](const Position& block) {
                                        Position padded(arity_, 0);
                                        std::copy(block.begin(), block.end(),
                                                  padded.begin() + static_cast<std::ptrdiff_t>(offset));
                                        fn(padded);
                                    });
                offset += part.arity();
            }
            break;
        }
        }
    }

    /// True iff every member is a saturation move for base p (condition on
    /// which canonical p-saturation is valid). Decidable for every kind.
    [[nodiscard]] bool within_saturation(Nat p) const {
        switch (kind_) {
        case Kind::weight_one:
            return true; // weight-one vectors always satisfy the digit criterion
        case Kind::saturation:
            return base_ == p;
        case Kind::explicit_set:
            return std::all_of(vectors_.begin(), vectors_.end(),
                               [&](const Position& v) { return is_saturation_move(p, v); });
        case Kind::sum:
            return std::all_of(parts_.begin(), parts_.end(),
                               [&](const MoveSet& part) { return part.within_saturation(p); });
        }
        return false;
    }

private:
    Kind kind_ = Kind::weight_one;
    std::size_t arity_ = 0;
    Nat base_ = 0;
    std::vector<Position> vectors_;
    std::vector<MoveSet> parts_;
};

// ---------------------------------------------------------------------------
// Position sets
// ---------------------------------------------------------------------------

class PositionSet {
public:
    enum class Kind { full_grid, distinct_coords, explicit_finite, product };

    static PositionSet full_grid(std::size_t arity) {
        PositionSet s;
        s.kind_ = Kind::full_grid;
        s.arity_ = arity;
        return s;
    }

    static PositionSet distinct_coords(std::size_t arity) {
        PositionSet s;
        s.kind_ = Kind::distinct_coords;
        s.arity_ = arity;
        return s;
    }

    static PositionSet explicit_finite(std::size_t arity, std::set<Position> members) {
        for (const Position& m : members)
            if (m.size() != arity) throw std::invalid_argument("member has wrong arity");
        PositionSet s;
        s.kind_ = Kind::explicit_finite;
        s.arity_ = arity;
        s.members_ = std::move(members);
        return s;
    }

    static PositionSet product(std::vector<PositionSet> parts) {
        if (parts.empty()) throw std::invalid_argument("product of zero position sets");
        if (parts.size() == 1) return parts.front();
        PositionSet s;
        s.kind_ = Kind::product;
        s.arity_ = 0;
        for (PositionSet& part : parts) {
            if (part.kind_ == Kind::product) {
                for (PositionSet& inner : part.parts_) {
                    s.arity_ += inner.arity_;
                    s.parts_.push_back(std::move(inner));
                }
            } else {
                s.arity_ += part.arity_;
                s.parts_.push_back(std::move(part));
            }
        }
        return s;
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] std::size_t arity() const { return arity_; }
    [[nodiscard]] const std::vector<PositionSet>& parts() const { return parts_; }
    [[nodiscard]] const std::set<Position>& members() const { return members_; }

    [[nodiscard]] bool contains(std::span<const Nat> a) const {
        if (a.size() != arity_) return false;
        switch (kind_) {
        case Kind::full_grid:
            return true;
        case Kind::distinct_coords:
            for (std::size_t i = 0; i < arity_; ++i)
                for (std::size_t j = i + 1; j < arity_; ++j)
                    if (a[i] == a[j]) return false;
            return true;
        case Kind::explicit_finite:
            return members_.count(Position(a.begin(), a.end())) > 0;
        case Kind::product: {
            std::size_t offset = 0;
            for (const PositionSet& part : parts_) {
                if (!part.contains(a.subspan(offset, part.arity()))) return false;
                offset += part.arity();
            }
            return true;
        }
        }
        return false;
    }

private:
    Kind kind_ = Kind::full_grid;
    std::size_t arity_ = 0;
    std::set<Position> members_;
    std::vector<PositionSet> parts_;
};

// ---------------------------------------------------------------------------
// Game specifications
// ---------------------------------------------------------------------------

struct GameSpec {
    std::size_t arity;
    PositionSet positions;
    MoveSet moves;

    GameSpec(PositionSet pos, MoveSet mov)
        : arity(pos.arity()), positions(std::move(pos)), moves(std::move(mov)) {
        if (arity != moves.arity())
            throw std::invalid_argument("positions and moves disagree on arity");
    }
};

/// Nim on m heaps: any position, subtract from exactly one coordinate.
inline GameSpec nim_game(std::size_t m) {
    if (m < 1) throw std::invalid_argument("arity must be >= 1");
    return GameSpec(PositionSet::full_grid(m), MoveSet::weight_one(m));
}

/// Welter's game on m coins: pairwise-distinct coordinates, Nim moves.
inline GameSpec welter_game(std::size_t m) {
    if (m < 1) throw std::invalid_argument("arity must be >= 1");
    return GameSpec(PositionSet::distinct_coords(m), MoveSet::weight_one(m));
}

inline GameSpec explicit_game(std::size_t m, std::set<Position> positions,
                              std::vector<Position> moves) {
    return GameSpec(PositionSet::explicit_finite(m, std::move(positions)),
                    MoveSet::explicit_set(m, std::move(moves)));
}

/// Disjunctive sum: product position set, zero-padded union move set.
/// Associative by construction (nested sums are flattened).
inline GameSpec disjunctive_sum(std::vector<GameSpec> specs) {
    if (specs.empty()) throw std::invalid_argument("sum of zero games");
    if (specs.size() == 1) return specs.front();
    std::vector<PositionSet> positions;
    std::vector<MoveSet> moves;
    positions.reserve(specs.size());
    moves.reserve(specs.size());
    for (GameSpec& spec : specs) {
        positions.push_back(std::move(spec.positions));
        moves.push_back(std::move(spec.moves));
    }
    return GameSpec(PositionSet::product(std::move(positions)), MoveSet::sum(std::move(moves)));
}

/// Canonical p-saturation: same positions, move set replaced by the full
/// saturation set. Requires the original moves to lie within it.
inline GameSpec saturate(const GameSpec& spec, Nat p) {
    if (!spec.moves.within_saturation(p))
        throw std::invalid_argument("move set is not contained in the saturation set for p");
    return GameSpec(spec.positions, MoveSet::saturation(p, spec.arity));
}

/// All options of A: positions B in the set with A - B in the move set.
inline std::vector<Position> options(const GameSpec& spec, const Position& a) {
    if (!spec.positions.contains(a))
        throw std::invalid_argument("position is not in the game's position set");
    std::vector<Position> result;
    spec.moves.for_each_delta(a, [&](const Position& delta) {
        Position b(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) b[i] = a[i] - delta[i];
        if (spec.positions.contains(b)) result.push_back(std::move(b));
    });
    std::sort(result.begin(), result.end());
    return result;
}

// ---------------------------------------------------------------------------
// Bounded evaluation
// ---------------------------------------------------------------------------

/// Memoized Sprague-Grundy / longest-walk table for one game under a
/// componentwise coordinate bound. Moves only subtract, so every descendant
/// of an in-bound position stays in-bound. Single-writer; do not share one
/// table across threads without external synchronization.
class EvalTable {
public:
    EvalTable(GameSpec spec, Nat bound) : spec_(std::move(spec)), bound_(bound) {}

    [[nodiscard]] const GameSpec& spec() const { return spec_; }
    [[nodiscard]] Nat bound() const { return bound_; }
    [[nodiscard]] std::size_t evaluated() const { return memo_.size(); }

    Nat sg(const Position& a) { return eval(a).sg; }
    Nat lg(const Position& a) { return eval(a).lg; }
    bool is_full(const Position& a) {
        const Entry& e = eval(a);
        return e.sg == e.lg;
    }

private:
    struct Entry {
        Nat sg;
        Nat lg;
    };

    const Entry& eval(const Position& a) {
        auto it = memo_.find(a);
        if (it != memo_.end()) return it->second;
        for (Nat x : a)
            if (x > bound_) throw std::invalid_argument("position exceeds table bound");
        std::vector<Position> opts = options(spec_, a);
        Entry e{0, 0};
        std::vector<Nat> seen;
        seen.reserve(opts.size());
        for (const Position& b : opts) {
            const Entry& child = eval(b);
            seen.push_back(child.sg);
            e.lg = std::max(e.lg, child.lg + 1);
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        Nat mex = 0;
        for (Nat v : seen) {
            if (v != mex) break;
            ++mex;
        }
        e.sg = mex;
        return memo_.emplace(a, e).first->second;
    }

    GameSpec spec_;
    Nat bound_;
    std::map<Position, Entry> memo_;
};

/// Proper descendants of every in-bound position reachable from `a`,
/// computed by DFS over the game's own edge relation (not a saturation's).
class DescendantIndex {
public:
    explicit DescendantIndex(GameSpec spec) : spec_(std::move(spec)) {}

    const std::vector<Position>& descendants(const Position& a) {
        auto it = memo_.find(a);
        if (it != memo_.end()) return it->second;
        std::set<Position> acc;
        for (const Position& b : options(spec_, a)) {
            acc.insert(b);
            const std::vector<Position>& below = descendants(b);
            acc.insert(below.begin(), below.end());
        }
        return memo_.emplace(a, std::vector<Position>(acc.begin(), acc.end())).first->second;
    }

private:
    GameSpec spec_;
    std::map<Position, std::vector<Position>> memo_;
};

/// Lexicographic enumeration of the box {0..bound}^arity filtered by set
/// membership; the iteration order is the deterministic sweep order used
/// throughout the verification suites.
inline void for_each_position(const PositionSet& set, Nat bound,
                              const std::function<void(const Position&)>& fn) {
    Position a(set.arity(), 0);
    for (;;) {
        if (set.contains(a)) fn(a);
        std::size_t i = set.arity();
        while (i > 0 && a[i - 1] == bound) a[--i] = 0;
        if (i == 0) break;
        ++a[i - 1];
    }
}

} // namespace grundy
