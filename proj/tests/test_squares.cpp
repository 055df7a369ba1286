#include "binpart/squares.hpp"

#include "binpart/modarith.hpp"

#include <doctest.h>

#include <vector>

using namespace binpart;

namespace {

std::vector<std::uint8_t> three_square_sieve(u64 N) {
    std::vector<std::uint8_t> rep(N + 1, 0);
    for (u64 x = 0; x * x <= N; ++x)
        for (u64 y = x; x * x + y * y <= N; ++y)
            for (u64 z = y; x * x + y * y + z * z <= N; ++z) rep[x * x + y * y + z * z] = 1;
    return rep;
}

std::vector<std::uint8_t> two_square_sieve(u64 N) {
    std::vector<std::uint8_t> rep(N + 1, 0);
    for (u64 x = 0; x * x <= N; ++x)
        for (u64 y = x; x * x + y * y <= N; ++y) rep[x * x + y * y] = 1;
    return rep;
}

}  // namespace

TEST_CASE("strip4") {
    auto s = strip4(7);
    CHECK(s.r == 0);
    CHECK(s.core == 7);
    s = strip4(112);
    CHECK(s.r == 2);
    CHECK(s.core == 7);
    s = strip4(60);
    CHECK(s.r == 1);
    CHECK(s.core == 15);
    CHECK_THROWS_AS(strip4(0), std::domain_error);
}

TEST_CASE("three-square criterion vs exhaustive search") {
    CHECK_FALSE(is_three_squares(7));
    CHECK_FALSE(is_three_squares(60));
    CHECK(is_three_squares(6));
    CHECK(is_three_squares(0));
    auto sieve = three_square_sieve(2000);
    for (u64 n = 0; n <= 2000; ++n) {
        CAPTURE(n);
        CHECK(is_three_squares(BigNat(n)) == bool(sieve[n]));
        CHECK(is_three_squares_u128(n) == bool(sieve[n]));
    }
}

TEST_CASE("two-square criterion vs exhaustive search") {
    CHECK(is_two_squares(2));
    CHECK_FALSE(is_two_squares(3));
    CHECK_FALSE(is_two_squares(12));
    CHECK(is_two_squares(0));
    CHECK(is_two_squares(1));
    auto sieve = two_square_sieve(2000);
    for (u64 n = 0; n <= 2000; ++n) {
        CAPTURE(n);
        CHECK(is_two_squares(BigNat(n)) == bool(sieve[n]));
        CHECK(is_two_squares_u128(n) == bool(sieve[n]));
    }
}

TEST_CASE("r2 equals the lattice point count") {
    CHECK(r2(1) == 4);
    CHECK(r2(5) == 8);
    CHECK(r2(3) == 0);
    const u64 N = 500;
    std::vector<u64> counts(N + 1, 0);
    for (i64 x = -30; x <= 30; ++x)
        for (i64 y = -30; y <= 30; ++y) {
            u64 s = u64(x * x + y * y);
            if (s <= N) counts[s] += 1;
        }
    for (u64 n = 1; n <= N; ++n) {
        CAPTURE(n);
        CHECK(r2(BigNat(n)) == counts[n]);
    }
    CHECK_THROWS_AS(r2(0), std::domain_error);
}

TEST_CASE("two-square decomposition reassembles") {
    auto z = two_square_decompose(0);
    REQUIRE(z);
    CHECK(z->first == 0);
    CHECK(z->second == 0);
    CHECK_FALSE(two_square_decompose(3));
    SplitMix64 rng(17);
    for (int i = 0; i < 200; ++i) {
        u64 n = rng.next() % 100000 + 1;
        auto d = two_square_decompose(BigNat(n));
        if (is_two_squares(BigNat(n))) {
            REQUIRE(d);
            CHECK(d->first * d->first + d->second * d->second == n);
            CHECK(d->first <= d->second);
        } else {
            CHECK_FALSE(d);
        }
    }
    // A larger structured input: twice the square of a 1 (mod 4) prime.
    u64 p = 1000001;
    while (!is_probable_prime(p) || p % 4 != 1) p += 2;
    BigNat n = BigNat(p) * p * 2;
    auto d = two_square_decompose(n);
    REQUIRE(d);
    CHECK(d->first * d->first + d->second * d->second == n);
}

TEST_CASE("three-square representation search") {
    auto r = find_three_square_rep(6);
    REQUIRE(r.status == RepStatus::Found);
    CHECK(r.rep->x == 1);
    CHECK(r.rep->y == 1);
    CHECK(r.rep->z == 2);
    r = find_three_square_rep(7);
    CHECK(r.status == RepStatus::NotRepresentable);
    r = find_three_square_rep(59);
    REQUIRE(r.status == RepStatus::Found);
    CHECK(r.rep->x * r.rep->x + r.rep->y * r.rep->y + r.rep->z * r.rep->z == 59);
    CHECK(r.rep->x <= r.rep->y);
    CHECK(r.rep->y <= r.rep->z);
    r = find_three_square_rep(0);
    REQUIRE(r.status == RepStatus::Found);
    CHECK(r.rep->z == 0);
    SplitMix64 rng(23);
    for (int i = 0; i < 100; ++i) {
        u64 n = rng.next() % 1000000;
        auto rr = find_three_square_rep(BigNat(n));
        if (is_three_squares(BigNat(n))) {
            REQUIRE(rr.status == RepStatus::Found);
            CHECK(rr.rep->x * rr.rep->x + rr.rep->y * rr.rep->y + rr.rep->z * rr.rep->z == n);
        } else {
            CHECK(rr.status == RepStatus::NotRepresentable);
        }
    }
}

namespace {

bool special_oracle(u64 N, SpecialShape shape) {
    for (u64 z = 0; z * z * z * z <= N; ++z) {
        u64 z4 = z * z * z * z;
        if (shape == SpecialShape::x2y2z4) {
            for (u64 y = 0; y * y + z4 <= N; ++y) {
                u64 rest = N - z4 - y * y;
                u64 r = isqrt_u64(rest);
                if (r * r == rest) return true;
            }
        } else {
            for (u64 y = 0; y <= z && y * y * y * y + z4 <= N; ++y) {
                u64 rest = N - z4 - y * y * y * y;
                u64 r = isqrt_u64(rest);
                if (r * r == rest) return true;
            }
        }
    }
    return false;
}

}  // namespace

TEST_CASE("special representation shapes vs brute force") {
    CHECK(count_special_reps(2, SpecialShape::x2y2z4));
    CHECK(count_special_reps(4, SpecialShape::x2y2z4));
    CHECK_FALSE(count_special_reps(7, SpecialShape::x2y2z4));
    for (u64 n = 0; n <= 300; ++n) {
        CAPTURE(n);
        CHECK(count_special_reps(BigNat(n), SpecialShape::x2y2z4) ==
              special_oracle(n, SpecialShape::x2y2z4));
        CHECK(count_special_reps(BigNat(n), SpecialShape::x2y4z4) ==
              special_oracle(n, SpecialShape::x2y4z4));
    }
}

TEST_CASE("integer square root helpers") {
    CHECK(isqrt_u64(0) == 0);
    CHECK(isqrt_u64(15) == 3);
    CHECK(isqrt_u64(16) == 4);
    CHECK(isqrt_u128((u128(1) << 100) - 1) == (u128(1) << 50) - 1);
    CHECK(is_square_u128(u128(12345678901234567ULL) * 12345678901234567ULL));
    CHECK_FALSE(is_square_u128((u128(12345678901234567ULL) * 12345678901234567ULL) + 1));
    CHECK(iroot4_u128(u128(81)) == 3);
    CHECK(iroot4_u128((u128(1) << 64)) == (u64(1) << 16));
}
