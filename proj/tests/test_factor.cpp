#include "binpart/factor.hpp"

#include "binpart/modarith.hpp"
#include "binpart/partition.hpp"

#include <doctest.h>

#include <set>

using namespace binpart;

TEST_CASE("montgomery arithmetic matches the reference") {
    SplitMix64 rng(99);
    for (int i = 0; i < 500; ++i) {
        u64 n = (rng.next() | 1) & ((u64(1) << 62) - 1);
        if (n < 3) continue;
        Mont64 M(n);
        u64 a = rng.next() % n, b = rng.next() % n;
        CHECK(M.from(M.mul(M.to(a), M.to(b))) == mulmod_u64(a, b, n));
    }
    for (int i = 0; i < 300; ++i) {
        u128 n = (((u128(rng.next()) << 64) | rng.next()) | 1) & ((u128(1) << 127) - 1);
        if (n < 3) continue;
        Mont128 M(n);
        u128 a = ((u128(rng.next()) << 64) | rng.next()) % n;
        u128 b = ((u128(rng.next()) << 64) | rng.next()) % n;
        CHECK(M.from(M.mul(M.to(a), M.to(b))) == mulmod_u128(a, b, n));
    }
    // Moduli at and above 2^127 go through the plain path.
    for (int i = 0; i < 50; ++i) {
        u128 n = ((u128(1) << 127) | (u128(rng.next()) << 32) | rng.next()) | 1;
        SlowMod128 M(n);
        u128 a = ((u128(rng.next()) << 64) | rng.next()) % n;
        u128 b = ((u128(rng.next()) << 64) | rng.next()) % n;
        CHECK(M.mul(a, b) == mulmod_u128(a, b, n));
        CHECK(M.add(a, b) == (a + b >= n || a + b < a ? a + b - n : a + b));
    }
}

TEST_CASE("primality testing against a sieve") {
    std::vector<bool> composite(20000, false);
    for (u64 i = 2; i < 20000; ++i)
        if (!composite[i])
            for (u64 j = i * i; j < 20000; j += i) composite[j] = true;
    for (u64 n = 0; n < 20000; ++n) {
        CAPTURE(n);
        CHECK(is_probable_prime(n) == (n >= 2 && !composite[n]));
    }
    // Carmichael numbers and a Mersenne prime.
    CHECK_FALSE(is_probable_prime(u64(561)));
    CHECK_FALSE(is_probable_prime(u64(1105)));
    CHECK_FALSE(is_probable_prime(u64(6601)));
    CHECK(is_probable_prime((u64(1) << 61) - 1));
    CHECK(is_probable_prime((u128(1) << 127) - 1));       // Mersenne, Montgomery path
    CHECK_FALSE(is_probable_prime((u128(1) << 127) + 1));  // divisible by 3, plain path
    CHECK(is_probable_prime(BigNat("170141183460469231731687303715884105727")));  // 2^127 - 1
}

TEST_CASE("factorize small inputs and edge cases") {
    FactorMap f60 = factorize(60);
    CHECK(f60 == FactorMap{{2, 2}, {3, 1}, {5, 1}});
    CHECK(factorize(1).empty());
    CHECK_THROWS_AS(factorize(0), std::domain_error);
    FactorMap fp = factorize(BigNat("170141183460469231731687303715884105727"));
    CHECK(fp.size() == 1);
    CHECK(fp.begin()->second == 1);
}

namespace {

u64 next_prime_from(u64 start) {
    u64 p = start | 1;
    while (!is_probable_prime(p)) p += 2;
    return p;
}

}  // namespace

TEST_CASE("factorize reassembles random and structured inputs") {
    SplitMix64 rng(3);
    FactorConfig cfg;
    for (int i = 0; i < 40; ++i) {
        BigNat n = BigNat(rng.next() % 1000000000 + 1);
        CHECK(factor_product(factorize(n, cfg)) == n);
    }
    // A semiprime with ~2^35 factors exercises Brent rho.
    u64 p = next_prime_from(u64(1) << 35);
    u64 q = next_prime_from((u64(1) << 35) + 1000);
    BigNat n = BigNat(p) * q;
    FactorMap f = factorize(n, cfg);
    CHECK(f == FactorMap{{p, 1}, {q, 1}});
    // Perfect squares take the shortcut.
    FactorMap fsq = factorize(BigNat(p) * p);
    CHECK(fsq == FactorMap{{p, 2}});
    // A value of the partition stream reassembles.
    BigNat b200 = b_value(200);
    CHECK(factor_product(factorize(b200, cfg)) == b200);
}

TEST_CASE("factorize beyond 2^127 goes through the plain path") {
    // 100003 times a 124-bit prime: product has 141 bits.
    BigNat big = (BigNat(1) << 124) + 1;
    while (!is_probable_prime(big)) big += 2;
    BigNat n = big * 100003;
    FactorMap f = factorize(n);
    CHECK(factor_product(f) == n);
    CHECK(f.count(100003) == 1);
    CHECK(f.count(big) == 1);
}

TEST_CASE("budget exhaustion raises a distinct error with the cofactor") {
    u64 p = next_prime_from(u64(1) << 41);
    u64 q = next_prime_from((u64(1) << 41) + 5000);
    BigNat n = BigNat(p) * q;
    FactorConfig cfg;
    cfg.rho_budget = 16;  // far too small to split a ~2^82 semiprime
    try {
        factorize(n, cfg);
        FAIL("expected FactorizationError");
    } catch (const FactorizationError& e) {
        CHECK(e.cofactor() == n);
    }
    // Raising the budget resolves it.
    cfg.rho_budget = u64(1) << 26;
    CHECK(factor_product(factorize(n, cfg)) == n);
}

TEST_CASE("factorization is deterministic for a fixed seed") {
    SplitMix64 rng(11);
    for (int i = 0; i < 10; ++i) {
        BigNat n = (BigNat(rng.next()) << 32) | rng.next();
        if (n < 1) n = 1;
        FactorConfig cfg;
        cfg.seed = 5;
        auto f1 = factorize(n, cfg);
        auto f2 = factorize(n, cfg);
        CHECK(f1 == f2);
        CHECK(factor_product(f1) == n);
    }
}
