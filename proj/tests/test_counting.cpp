#include "binpart/counting.hpp"

#include "binpart/chars.hpp"
#include "binpart/partition.hpp"
#include "binpart/squares.hpp"
#include "binpart/tables.hpp"

#include <json.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace binpart;

TEST_CASE("count_S examples") {
    CHECK(count_S(SFamily::S1, 100) == 8);  // 20,21,36,37,68,69,80,81
    CHECK(count_S(SFamily::S1, 19) == 0);
    CHECK(count_S(SFamily::S3, 8) == 0);
    CHECK(count_S(SFamily::S3, 9) == 1);
    CHECK(count_S(SFamily::S2k, 7, 3) == 2);  // n = 1 and n = 5 for k = 3
}

TEST_CASE("P1/Q1/R1 basics") {
    P1Table P(4096);
    // First family values 8s + 3 + 2 t_s: s = 0 -> 5, s = 1 -> 9, s = 2 -> 17.
    CHECK(P.P(4) == 0);
    CHECK(P.P(5) == 1);
    CHECK(P.P(9) == 2);
    CHECK(P.Q(5) == P.P(5) + P.P(1) + P.P(0));
    R1Evaluator R;
    CHECK(R.sixths(36) == 6);   // R(m_1) = 1
    CHECK(R.sixths(612) == 12); // R(m_2) = 2
    CHECK(R.sixths(7) == R.sixths(1));
    for (u64 n = 0; n <= 2000; ++n) {
        CAPTURE(n);
        CHECK(R.sixths(n) == P.R_sixths(n));
    }
}

TEST_CASE("extremal sequences") {
    auto rows = extremal_rows(SFamily::S1, true, 4);
    REQUIRE(rows.size() == 5);
    CHECK(rows[1].index == 36);
    CHECK(rows[2].index == 612);
    CHECK(rows[3].index == 9828);
    for (u64 l = 1; l <= 3; ++l) {
        CHECK(rows[l + 1].measured);
        CHECK(rows[l + 1].deviation_twelfths == i64(24 * l));
    }
    auto nseq = extremal_rows(SFamily::S3, false, 2);
    CHECK(nseq[1].index == 16);
    CHECK(nseq[2].index == 80);
    auto mseq = extremal_rows(SFamily::S3, true, 2);
    CHECK(mseq[1].index == 8);
    CHECK(mseq[2].index == 40);
}

TEST_CASE("figure rows") {
    auto rows = figure_rows(SFamily::S1, 1024);
    REQUIRE(rows.size() == 1024);
    CHECK(rows[19].x == 20);
    CHECK(rows[19].dev_twelfths == -8);  // 1 - 20/12 = -2/3
    CHECK(rows[18].dev_twelfths == -19);
    for (const auto& r : rows) {
        if (r.x < 6) continue;
        CAPTURE(r.x);
        CHECK(double(r.dev_twelfths) / 12.0 > r.lower);
        CHECK(double(r.dev_twelfths) / 12.0 < r.upper);
    }
    CHECK_THROWS_AS(figure_rows(SFamily::S2k, 16), std::domain_error);
}

TEST_CASE("table T4 small prefix matches the published rows") {
    TableCampaignConfig cfg;
    auto rows = table_two_squares(3, cfg);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].count == 2);
    CHECK(rows[1].count == 3);
    CHECK(rows[2].count == 6);
}

TEST_CASE("r2 stats on a small range") {
    TableCampaignConfig cfg;
    auto rows = table_r2_stats(32, cfg);
    // first rows of the published table: s=4 first at n=0, s=8 first at n=4, s=16 at n=30
    bool saw4 = false, saw8 = false, saw16 = false;
    for (const auto& r : rows) {
        if (r.s == 4) {
            saw4 = true;
            CHECK(r.first_n == 0);
        }
        if (r.s == 8) {
            saw8 = true;
            CHECK(r.first_n == 4);
        }
        if (r.s == 16) {
            saw16 = true;
            CHECK(r.first_n == 30);
        }
    }
    CHECK(saw4);
    CHECK(saw8);
    CHECK(saw16);
}

TEST_CASE("census smoke on a tiny range") {
    TableCampaignConfig cfg;
    auto c = representation_census(40, cfg);
    CHECK(c.three_squares >= 35);  // most small values are fine
    CHECK(c.x2y2z4 <= c.three_squares);
    CHECK(c.x2y4z4 <= c.x2y2z4);
}

TEST_CASE("t6 printed-value comparison") {
    CHECK(t6_matches(1.8076, 1.80));
    CHECK(t6_matches(1.7456, 1.74));
    CHECK_FALSE(t6_matches(1.6992, 1.67));
    CHECK(t6_matches(1.6992, 1.70));
}

TEST_CASE("checkpointed campaigns resume to the same answer") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "binpart-test-ckpt";
    fs::create_directories(dir);
    TableCampaignConfig plain;
    auto want = table_r2_stats(64, plain);
    // Plant a partial checkpoint: only the first 10 indices done.
    {
        TableCampaignConfig cfg;
        cfg.checkpoint_dir = dir.string();
        auto full = table_r2_stats(64, cfg);  // writes and then clears its checkpoint
        CHECK(full.size() == want.size());
        nlohmann::json j;
        j["campaign"] = "T5";
        j["param"] = 64;
        j["seed"] = 0;
        j["last_index"] = 9;
        std::vector<u64> partial;
        auto b = b_values(2 * 9);
        for (u64 n = 0; n <= 9; ++n) partial.push_back(r2(b[2 * n]));
        j["partial_rows"] = partial;
        std::ofstream(dir / "checkpoint-T5.json") << j.dump();
    }
    TableCampaignConfig cfg;
    cfg.checkpoint_dir = dir.string();
    auto resumed = table_r2_stats(64, cfg);
    REQUIRE(resumed.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(resumed[i].s == want[i].s);
        CHECK(resumed[i].count == want[i].count);
        CHECK(resumed[i].first_n == want[i].first_n);
    }
    CHECK_FALSE(fs::exists(dir / "checkpoint-T5.json"));
    fs::remove_all(dir);
}
