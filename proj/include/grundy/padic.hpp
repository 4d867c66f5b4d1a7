#pragma once

// Exact base-p digit arithmetic: carry-free addition/subtraction, p-adic
// order, and the repunit/repdigit values used by the closed-form
// Sprague-Grundy formulas. All functions are pure and overflow-checked at
// desk scale (values fit comfortably in 64 bits).

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace grundy {

using Nat = std::uint64_t;

inline void require_base(Nat p) {
    if (p < 2) throw std::invalid_argument("base p must be at least 2");
}

/// The p-adic order of an integer: either a finite exponent or infinity
/// (the order of 0). Comparisons against infinity are total.
class Order {
public:
    static constexpr Order finite(Nat v) { return Order(false, v); }
    static constexpr Order infinity() { return Order(true, 0); }

    [[nodiscard]] constexpr bool is_infinity() const { return infinite_; }

    [[nodiscard]] constexpr Nat value() const {
        if (infinite_) throw std::logic_error("Order::value on infinity");
        return value_;
    }

    friend constexpr bool operator==(Order a, Order b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr bool operator<(Order a, Order b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend constexpr bool operator<=(Order a, Order b) { return a == b || a < b; }

    friend constexpr Order min(Order a, Order b) { return a < b ? a : b; }

private:
    constexpr Order(bool inf, Nat v) : infinite_(inf), value_(v) {}
    bool infinite_;
    Nat value_;
};

/// L-th digit of a in base p (little-endian: digit 0 is the units digit).
inline Nat digit(Nat p, Nat a, Nat level) {
    require_base(p);
    for (Nat i = 0; i < level && a > 0; ++i) a /= p;
    return a % p;
}

/// Addition without carrying in base p.
inline Nat nim_sum(Nat p, std::span<const Nat> xs) {
    require_base(p);
    Nat result = 0;
    Nat scale = 1;
    std::vector<Nat> rest(xs.begin(), xs.end());
    for (;;) {
        Nat digit_total = 0;
        bool any = false;
        for (Nat& x : rest) {
            digit_total += x % p;
            x /= p;
            any = any || x > 0;
        }
        result += (digit_total % p) * scale;
        if (!any) break;
        if (scale > std::numeric_limits<Nat>::max() / p)
            throw std::overflow_error("nim_sum overflow");
        scale *= p;
    }
    return result;
}

inline Nat nim_sum(Nat p, std::initializer_list<Nat> xs) {
    return nim_sum(p, std::span<const Nat>(xs.begin(), xs.size()));
}

inline Nat nim_add(Nat p, Nat x, Nat y) { return nim_sum(p, {x, y}); }

/// Subtraction without borrowing in base p (digitwise x - y mod p).
inline Nat nim_diff(Nat p, Nat x, Nat y) {
    require_base(p);
    Nat result = 0;
    Nat scale = 1;
    while (x > 0 || y > 0) {
        Nat d = (x % p + p - y % p) % p;
        result += d * scale;
        x /= p;
        y /= p;
        if ((x > 0 || y > 0) && scale > std::numeric_limits<Nat>::max() / p)
            throw std::overflow_error("nim_diff overflow");
        scale *= p;
    }
    return result;
}

/// p-adic order: the largest L with p^L dividing a, infinity at 0.
inline Order ord(Nat p, Nat a) {
    require_base(p);
    if (a == 0) return Order::infinity();
    Nat level = 0;
    while (a % p == 0) {
        a /= p;
        ++level;
    }
    return Order::finite(level);
}

/// Minimum componentwise p-adic order of a vector. Components are taken by
/// absolute value; the empty vector has no minimum and is rejected.
inline Order mord(Nat p, std::span<const std::int64_t> components) {
    require_base(p);
    if (components.empty()) throw std::invalid_argument("mord of empty vector");
    Order result = Order::infinity();
    for (std::int64_t c : components) {
        Nat magnitude = c < 0 ? static_cast<Nat>(-c) : static_cast<Nat>(c);
        result = min(result, ord(p, magnitude));
    }
    return result;
}

inline Order mord(Nat p, std::initializer_list<std::int64_t> components) {
    return mord(p, std::span<const std::int64_t>(components.begin(), components.size()));
}

inline Nat pow_nat(Nat p, Nat e) {
    Nat result = 1;
    for (Nat i = 0; i < e; ++i) {
        if (result > std::numeric_limits<Nat>::max() / p)
            throw std::overflow_error("pow_nat overflow");
        result *= p;
    }
    return result;
}

/// p^(ord_p(h)+1) - 1: base-p digits are all p-1 up to index ord_p(h).
inline Nat repdigit_allnines(Nat p, Nat h) {
    require_base(p);
    if (h == 0) throw std::invalid_argument("repdigit_allnines of 0 would be infinite");
    return pow_nat(p, ord(p, h).value() + 1) - 1;
}

/// Repunit with ord_p(h)+1 ones in base p, i.e. sum of p^L for L up to
/// ord_p(h). Coincides with repdigit_allnines exactly when p = 2.
inline Nat pnorm(Nat p, Nat h) {
    require_base(p);
    if (h == 0) throw std::invalid_argument("pnorm of 0 would be infinite");
    Nat top = ord(p, h).value();
    Nat result = 0;
    Nat scale = 1;
    for (Nat level = 0; level <= top; ++level) {
        result += scale;
        if (level < top) scale *= p;
    }
    return result;
}

} // namespace grundy
