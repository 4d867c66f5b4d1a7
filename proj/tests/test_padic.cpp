#include "doctest.h"

#include "grundy/padic.hpp"

#include <random>

using namespace grundy;

namespace {

// Independent order oracle: count divisions directly.
Nat ord_by_division_count(Nat p, Nat a) {
    REQUIRE(a > 0);
    Nat count = 0;
    while (a % p == 0) {
        a /= p;
        ++count;
    }
    return count;
}

} // namespace

TEST_CASE("nim_sum known values") {
    CHECK(nim_sum(2, {3, 7, 4}) == 0);
    CHECK(nim_sum(3, {3, 7, 4}) == 5);
    CHECK(nim_sum(5, {7, 5, 3}) == 10); // 7+5+3 digitwise mod 5
    for (Nat p : {2u, 3u, 5u, 7u})
        for (Nat a : {0u, 1u, 9u, 144u}) CHECK(nim_sum(p, {a, 0}) == a);
}

TEST_CASE("nim_sum is associative and commutative on samples") {
    for (Nat p : {2u, 3u, 5u}) {
        for (Nat x = 0; x < 12; ++x)
            for (Nat y = 0; y < 12; ++y) {
                CHECK(nim_add(p, x, y) == nim_add(p, y, x));
                for (Nat z : {0u, 5u, 11u})
                    CHECK(nim_add(p, nim_add(p, x, y), z) == nim_add(p, x, nim_add(p, y, z)));
            }
    }
}

TEST_CASE("nim_diff known values") {
    CHECK(nim_diff(5, 2, 4) == 3);
    CHECK(nim_diff(5, 13, 16) == 22);
    for (Nat p : {2u, 3u, 5u})
        for (Nat x = 0; x < 40; ++x) CHECK(nim_diff(p, x, x) == 0);
}

TEST_CASE("nim_diff inverts nim_sum digitwise") {
    for (Nat p : {2u, 3u, 5u})
        for (Nat x = 0; x < 30; ++x)
            for (Nat y = 0; y < 30; ++y) {
                CHECK(nim_diff(p, nim_sum(p, {x, y}), y) == x);
                CHECK(nim_sum(p, {nim_diff(p, x, y), y}) == x);
            }
}

TEST_CASE("nim_sum bound") {
    for (Nat p : {2u, 3u, 5u})
        for (Nat x = 0; x < 25; ++x)
            for (Nat y = 0; y < 25; ++y) {
                Nat m = x > y ? x : y;
                if (m == 0) m = 1;
                CHECK(nim_sum(p, {x, y}) < p * m);
            }
}

TEST_CASE("ord known values") {
    CHECK(ord(2, 12) == Order::finite(2));
    CHECK(ord(3, 12) == Order::finite(1));
    CHECK(ord(2, 0).is_infinity());
    CHECK(ord(7, 0) == Order::infinity());
    for (Nat p : {2u, 3u, 5u})
        for (Nat a = 1; a < 200; ++a) {
            CHECK(ord(p, a).value() == ord_by_division_count(p, a));
            CHECK(ord(p, a * p).value() == ord(p, a).value() + 1);
        }
}

TEST_CASE("Order comparisons are total") {
    CHECK(Order::finite(3) < Order::infinity());
    CHECK(!(Order::infinity() < Order::finite(1000)));
    CHECK(Order::infinity() == Order::infinity());
    CHECK(min(Order::infinity(), Order::finite(0)) == Order::finite(0));
    CHECK(Order::finite(2) < Order::finite(5));
}

TEST_CASE("mord known values") {
    CHECK(mord(3, {1, 0}) == Order::finite(0));
    CHECK(mord(3, {1, 2}) == Order::finite(0));
    CHECK(mord(3, {0, 0, 0}).is_infinity());
    CHECK(mord(2, {-4, 12}) == Order::finite(2)); // components by absolute value
    CHECK_THROWS_AS(mord(3, std::span<const std::int64_t>()), std::invalid_argument);
}

TEST_CASE("repdigit_allnines known values") {
    CHECK(repdigit_allnines(2, 2) == 3);
    CHECK(repdigit_allnines(5, 2) == 4);
    // ord_5(5) = 1 by direct divisibility count, so the value is 5^2 - 1.
    CHECK(ord_by_division_count(5, 5) == 1);
    CHECK(repdigit_allnines(5, 5) == 24);
    CHECK_THROWS_AS(repdigit_allnines(3, 0), std::invalid_argument);
}

TEST_CASE("pnorm known values") {
    CHECK(pnorm(5, 5) == 6);
    CHECK(pnorm(5, 3) == 1);
    CHECK(pnorm(3, 9) == 13); // 1 + 3 + 9
    for (Nat h = 1; h < 100; ++h) CHECK(pnorm(2, h) == repdigit_allnines(2, h));
    CHECK_THROWS_AS(pnorm(5, 0), std::invalid_argument);
    // pnorm == (p^(ord+1) - 1) / (p - 1)
    for (Nat p : {3u, 5u, 7u})
        for (Nat h = 1; h < 60; ++h)
            CHECK(pnorm(p, h) == (repdigit_allnines(p, h)) / (p - 1));
}

TEST_CASE("carry lemma: congruent components sum without interaction below level N") {
    // For vectors with a^i = b^i (mod p^N), the ordinary sum of differences,
    // the carry-free sum of carry-free differences, and the single digit
    // <0,...,0, sum of level-N digit differences> all agree mod p^(N+1).
    std::mt19937_64 rng(0x5eed);
    for (Nat p : {2u, 3u, 5u}) {
        for (int iter = 0; iter < 10000; ++iter) {
            Nat m = 1 + rng() % 4;
            Nat n = rng() % 4;
            Nat pn = pow_nat(p, n);
            Nat modulus = pn * p;
            std::vector<Nat> a(m), b(m);
            for (Nat i = 0; i < m; ++i) {
                b[i] = rng() % (p * p * p);
                a[i] = b[i] + (rng() % (p * p)) * pn; // a^i >= b^i, congruent mod p^N
            }
            Nat plain_sum = 0;
            std::vector<Nat> carry_free_diffs(m);
            Nat top_digit_sum = 0;
            for (Nat i = 0; i < m; ++i) {
                plain_sum += a[i] - b[i];
                carry_free_diffs[i] = nim_diff(p, a[i], b[i]);
                top_digit_sum += (digit(p, a[i], n) + p - digit(p, b[i], n)) % p;
            }
            Nat lhs = plain_sum % modulus;
            Nat mid = nim_sum(p, carry_free_diffs) % modulus;
            Nat rhs = (top_digit_sum % p) * pn;
            CHECK(lhs == mid);
            CHECK(mid == rhs);
            if (lhs != mid || mid != rhs) return; // first counterexample is enough
        }
    }
}
