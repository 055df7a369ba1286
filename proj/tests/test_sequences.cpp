#include "binpart/sequences.hpp"

#include "binpart/modarith.hpp"

#include <doctest.h>

#include <vector>

using namespace binpart;

namespace {

// Reference PTM sign by the defining recurrence, memoized.
int ptm_oracle(u64 n) {
    static std::vector<int> memo = {1};
    while (memo.size() <= n) {
        u64 m = memo.size();
        memo.push_back(m % 2 == 0 ? memo[m / 2] : -memo[m / 2]);
    }
    return memo[n];
}

// Paperfolding sign by literal recurrence unrolling.
int paperfold_oracle(u64 n) {
    while (n % 2 == 0) n /= 2;
    return ((n - 1) / 2) % 2 == 0 ? 1 : -1;
}

// Count maximal blocks of 1s by scanning the binary digits.
int sigma_oracle(u64 n) {
    int blocks = 0;
    bool in_block = false;
    while (n) {
        if (n & 1) {
            if (!in_block) ++blocks;
            in_block = true;
        } else {
            in_block = false;
        }
        n >>= 1;
    }
    return blocks % 2;
}

}  // namespace

TEST_CASE("s2 on small and boundary inputs") {
    CHECK(s2(u64(0)) == 0);
    CHECK(s2(u64(5)) == 2);
    for (unsigned k = 0; k <= 64; ++k) CHECK(s2(BigNat(1) << k) == 1);
    CHECK(s2(BigNat("340282366920938463463374607431768211455")) == 128);  // 2^128 - 1
}

TEST_CASE("nu2 values and the infinite marker") {
    CHECK(nu2(u64(0)).is_infinite());
    CHECK(nu2(BigNat(0)).is_infinite());
    CHECK(nu2(u64(12)) == Valuation::finite(2));
    CHECK(nu2(u64(7)) == Valuation::finite(0));
    CHECK_THROWS_AS(nu2(u64(0)).value(), std::domain_error);
}

TEST_CASE("ptm examples and identities") {
    CHECK(ptm(u64(0)).value() == 1);
    CHECK(ptm(u64(1)).value() == -1);
    CHECK(ptm(u64(6)).value() == ptm_oracle(6));
    for (u64 n = 0; n <= 5000; ++n) {
        CAPTURE(n);
        CHECK(ptm(n).value() == ptm_oracle(n));
        CHECK(ptm(n).value() == 1 - 2 * ptm_parity(n));
        CHECK(ptm(2 * n).value() == ptm(n).value());
        CHECK(ptm(2 * n + 1).value() == -ptm(n).value());
    }
}

TEST_CASE("ptm_parity examples") {
    CHECK(ptm_parity(u64(0)) == 0);
    CHECK(ptm_parity(u64(2)) == 1);
    CHECK(ptm_parity(u64(3)) == 0);
}

TEST_CASE("one_runs_parity matches a scan of the binary digits") {
    CHECK(one_runs_parity(u64(0)) == 0);
    CHECK(one_runs_parity(u64(5)) == 0);
    CHECK(one_runs_parity(u64(7)) == 1);
    SplitMix64 rng(42);
    for (int i = 0; i < 2000; ++i) {
        u64 n = rng.next() >> (rng.next() % 40);
        CAPTURE(n);
        CHECK(one_runs_parity(n) == sigma_oracle(n));
        CHECK(one_runs_parity(BigNat(n)) == sigma_oracle(n));
    }
}

TEST_CASE("paperfold sign") {
    CHECK(paperfold(u64(1)).value() == 1);
    CHECK(paperfold(u64(3)).value() == -1);
    CHECK(paperfold(u64(6)).value() == -1);  // p_6 = p_3
    CHECK_THROWS_AS(paperfold(u64(0)), std::domain_error);
    CHECK_THROWS_AS(paperfold(BigNat(0)), std::domain_error);
    for (u64 n = 1; n <= 4096; ++n) {
        CAPTURE(n);
        CHECK(paperfold(n).value() == paperfold_oracle(n));
        CHECK(paperfold(BigNat(n)).value() == paperfold_oracle(n));
    }
}

TEST_CASE("evil and odious enumerations split the integers") {
    CHECK(evil_number(u64(0)) == 0);
    CHECK(evil_number(u64(1)) == 3);
    CHECK(evil_number(u64(2)) == 5);
    const u64 M = 5000;
    std::vector<int> seen(2 * M + 2, 0);
    for (u64 m = 0; m <= M; ++m) {
        seen[evil_number(m)] += 1;
        seen[odious_number(m)] += 1;
    }
    for (u64 n = 0; n <= 2 * M + 1; ++n) {
        CAPTURE(n);
        CHECK(seen[n] == 1);
    }
}

TEST_CASE("big-integer overloads agree with the word versions") {
    SplitMix64 rng(7);
    for (int i = 0; i < 500; ++i) {
        u64 n = rng.next();
        CHECK(s2(n) == s2(BigNat(n)));
        CHECK(ptm(n).value() == ptm(BigNat(n)).value());
        CHECK(ptm_parity(n) == ptm_parity(BigNat(n)));
        if (n) CHECK(nu2(n).value() == nu2(BigNat(n)).value());
    }
}

TEST_CASE("ptm_parity_table is the incremental table") {
    auto t = ptm_parity_table(3000);
    for (u64 n = 0; n <= 3000; ++n) CHECK(int(t[n]) == ptm_parity(n));
}
