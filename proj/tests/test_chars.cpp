#include "binpart/chars.hpp"

#include "binpart/partition.hpp"
#include "binpart/sequences.hpp"
#include "binpart/squares.hpp"

#include <doctest.h>

using namespace binpart;

TEST_CASE("chi recurrence values") {
    CHECK(chi(u64(0)) == 0);
    CHECK(chi(u64(10)) == 1);
    CHECK(chi(u64(11)) == 0);
    CHECK(chi(u64(34)) == 1);
    CHECK(chi(u64(40)) == 1);
    CHECK(chi(u64(6)) == 0);
    for (u64 n = 0; n <= 5000; ++n) CHECK(chi(n) == chi(BigNat(n)));
}

TEST_CASE("chi against the exact Legendre test on b(2n)") {
    auto b = b_values(8000);
    for (u64 n = 0; n <= 4000; ++n) {
        CAPTURE(n);
        CHECK((chi(n) == 1) == !is_three_squares(b[2 * n]));
    }
}

TEST_CASE("s1 witnesses and membership") {
    auto w = s1_witness(20);
    CHECK(w.member);
    CHECK(w.k == 0);
    CHECK(w.r == 0);
    CHECK(w.i == 0);
    w = s1_witness(21);
    CHECK(w.member);
    CHECK(w.i == 1);
    CHECK_FALSE(s1_witness(7).member);
    for (u64 n = 0; n <= 20000; ++n) {
        auto wit = s1_witness(n);
        CAPTURE(n);
        CHECK(wit.member == (chi(n / 2) == 1));
        if (wit.member) {
            u64 core = 8 * wit.r + u64(2 * ptm(wit.r).value() + 3);
            CHECK((u64(1) << (2 * wit.k + 2)) * core + wit.i == n);
        }
    }
}

TEST_CASE("s3 witnesses") {
    CHECK(s3_witness(40).member);
    CHECK(s3_witness(9).member);
    CHECK_FALSE(s3_witness(5).member);
    auto b3 = b3_values(4000);
    for (u64 n = 0; n <= 4000; ++n) {
        auto w = s3_witness(n);
        CAPTURE(n);
        CHECK(w.member == !is_three_squares(b3[n]));
        if (w.member) {
            i64 core = 8 * i64(w.p) + 2 * i64(w.i / 2) + 3 +
                       2 * ((w.i % 2) ? -1 : 1) * ptm(w.p).value();
            CHECK((u64(1) << (2 * w.k + 1)) * u64(core) + w.i == n);
            CHECK(w.k >= 1);
        }
    }
}

TEST_CASE("s2k witnesses for k = 3") {
    CHECK(s2k_witness(3, 1).member);
    CHECK(s2k_witness(3, 1).clause == 1);
    CHECK_FALSE(s2k_witness(3, 0).member);
    CHECK_FALSE(s2k_witness(3, 16).member);  // t_16 = -1
    CHECK_THROWS_AS(s2k_witness(2, 1), std::domain_error);
    auto b7 = bm_values_via_recurrence(7, 3000);
    for (u64 n = 0; n <= 3000; ++n) {
        CAPTURE(n);
        CHECK(s2k_witness(3, n).member == !is_three_squares(b7[n]));
    }
}

TEST_CASE("beta values come from the residue stream") {
    CHECK(beta(0) == 1);  // b(4) = 4
    CHECK(beta(2) == 7);  // b(20) = 60, 15 mod 8
    CHECK(beta(1) == 5);  // b(12) = 20, 5 mod 8
    auto b = b_values(8 * 500 + 4);
    auto tab = beta_table(500);
    for (u64 m = 0; m <= 500; ++m) {
        CAPTURE(m);
        BigNat quarter = b[8 * m + 4] / 4;
        CHECK(u64(tab[m]) == to_u64(quarter % 8));
        CHECK(tab[m] % 2 == 1);
    }
}

TEST_CASE("c_a closed forms enumerate the beta classes") {
    CHECK(c_a(1, 0) == 0);
    CHECK(c_a(7, 0) == 2);
    CHECK(c_a(3, 0) == 3);
    CHECK(c_a(5, 0) == 1);
    CHECK_THROWS_AS(c_a(2, 0), std::domain_error);
    auto tab = beta_table(2000);
    for (unsigned a : {1, 3, 5, 7}) {
        u64 prev = 0;
        for (u64 l = 0;; ++l) {
            u64 m = c_a(a, l);
            if (m > 2000) break;
            CAPTURE(a);
            CAPTURE(l);
            CHECK(tab[m] == a);
            if (l > 0) CHECK(m > prev);
            prev = m;
        }
    }
}

TEST_CASE("f enumeration and gaps") {
    auto two = f_and_gaps(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].f == 10);
    CHECK(two[0].gap == 8);
    CHECK(two[1].f == 18);
    auto four = f_and_gaps(4);
    CHECK(four[1].gap == 16);
    CHECK(four[2].f == 34);
    CHECK(four[2].gap == 6);
    CHECK(four[3].f == 40);
    auto five = f_and_gaps(5);
    CHECK(five[3].gap == 18);
    CHECK(five[4].f == 58);
    static const u64 first19[] = {10,  18,  34,  40,  58,  66,  72,  90,  106, 114,
                                  130, 136, 154, 160, 170, 178, 202, 210, 226};
    auto recs = f_and_gaps(19);
    for (std::size_t i = 0; i < 19; ++i) CHECK(recs[i].f == first19[i]);
    CHECK(f_and_gaps(0).empty());
}

TEST_CASE("gap witness families") {
    CHECK(gap_class_witnesses(6, 1)[0] == 34);
    CHECK(gap_class_witnesses(10, 1)[0] == 160);
    CHECK(gap_class_witnesses(24, 1)[0] == 178);
    CHECK_THROWS_AS(gap_class_witnesses(7, 1), std::domain_error);
    for (unsigned g : {6, 8, 10, 16, 18, 24}) {
        auto w = gap_class_witnesses(g, 5);
        REQUIRE(w.size() == 5);
        for (u64 n : w) {
            CHECK(chi(n) == 1);
            CHECK(chi(n + g) == 1);
            for (u64 x = n + 1; x < n + g; ++x) CHECK(chi(x) == 0);
        }
    }
}
