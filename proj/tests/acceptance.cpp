// Acceptance suite: one line per criterion, exit 0 only if every criterion
// holds.  Run with --full to include the factorization-heavy campaigns.

#include "binpart/chars.hpp"
#include "binpart/counting.hpp"
#include "binpart/dfao.hpp"
#include "binpart/partition.hpp"
#include "binpart/sequences.hpp"
#include "binpart/squares.hpp"
#include "binpart/tables.hpp"
#include "binpart/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace binpart;

namespace {

int g_failures = 0;

void criterion(int id, const std::string& label, bool pass, const std::string& detail,
               double seconds) {
    if (!pass) ++g_failures;
    std::printf("[%s] criterion %2d: %s%s%s (%.1fs)\n", pass ? "PASS" : "FAIL", id, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str(), seconds);
    std::fflush(stdout);
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

// Runs a set of verify families and joins failures into a detail string.
bool run_families(const std::vector<std::string>& ids, const CampaignConfig& cfg,
                  std::string& detail) {
    bool all = true;
    for (const auto& id : ids) {
        auto rep = run_family(id, cfg);
        if (!rep) {
            all = false;
            detail += id + ": unknown family; ";
            continue;
        }
        if (!rep->pass) {
            all = false;
            std::ostringstream os;
            os << id << ": counterexample at " << (rep->ce ? rep->ce->index : 0);
            if (rep->ce) os << " (expected " << rep->ce->expected << ", got " << rep->ce->actual << ")";
            os << "; ";
            detail += os.str();
        }
    }
    if (all) detail += "all pass";
    return all;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    bool full = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--full") full = true;

    CampaignConfig cfg;  // budget "small", seed 0, single thread

    {  // 1. exact value reproduction + coefficient table rederivation
        Timer t;
        bool ok = b_value(4) == 4;
        ok = ok && b3_values(2) == std::vector<BigNat>{1, 3, 9};
        std::string detail;
        ok = run_families({"cd-table-derivation"}, cfg, detail) && ok;
        criterion(1, "exact values and rederived coefficient tables", ok, detail, t.elapsed());
    }

    {  // 2. congruence campaigns
        Timer t;
        std::string detail;
        bool ok = run_families({"b-mod32", "b-mod16", "b3-congruences", "b2k-mod8", "b2k-mod32",
                                "gupta-rodseth", "binomial-convolution", "binomial-2adic"},
                               cfg, detail);
        criterion(2, "congruence campaigns", ok, detail, t.elapsed());
    }

    {  // 3. characterization equivalences against the modular Legendre oracle
        Timer t;
        std::string detail;
        bool ok = run_families({"s1-equivalence", "s3-equivalence", "s2k-equivalence"}, cfg,
                               detail);
        criterion(3, "characterization equivalences to 2e5", ok, detail, t.elapsed());
    }

    {  // 4. first elements and gap classes
        Timer t;
        std::string detail;
        bool ok = run_families({"s1-first-elements", "s1-gap-witnesses"}, cfg, detail);
        criterion(4, "first elements and gaps to 1e6", ok, detail, t.elapsed());
    }

    {  // 5. beta class enumerations
        Timer t;
        std::string detail;
        bool ok = run_families({"beta-classes"}, cfg, detail);
        criterion(5, "beta class enumerations to 4e4", ok, detail, t.elapsed());
    }

    {  // 6. counting bounds and extremal relations
        Timer t;
        std::string detail;
        bool ok = run_families({"s1-count-identities", "s1-count-bounds", "s3-count-identities",
                                "s3-count-bounds", "s2k-count-identities", "s2k-count-bounds"},
                               cfg, detail);
        // The stated S1 base-case anomaly is reported, not asserted:
        auto rep = run_family("s1-count-bounds", cfg);
        if (rep)
            for (const auto& note : rep->notes) detail += " | " + note;
        criterion(6, "counting bounds and extremal relations", ok, detail, t.elapsed());
    }

    {  // 7. densities at 2^20
        Timer t;
        std::string detail;
        bool ok = run_families({"density"}, cfg, detail);
        criterion(7, "densities within 0.005 at 2^20", ok, detail, t.elapsed());
    }

    if (full) {  // 8. representation census (factorization bound)
        Timer t;
        TableCampaignConfig tcfg;
        auto c = representation_census(1000, tcfg);
        bool ok = c.three_squares == 916 && c.x2y2z4 == 831 && c.x2y4z4 == 7;
        std::ostringstream os;
        os << "counts " << c.three_squares << "/" << c.x2y2z4 << "/" << c.x2y4z4
           << " vs published 916/831/7";
        criterion(8, "representation census over n <= 1000", ok, os.str(), t.elapsed());
    } else {
        std::printf("[SKIP] criterion  8: representation census (run with --full)\n");
    }

    {  // 9. published tables
        Timer t;
        TableCampaignConfig tcfg;
        unsigned t4max = full ? 14 : 12;
        std::ostringstream os;
        bool ok = true;
        auto rows = table_two_squares(t4max, tcfg);
        const auto& ref = reference_t4();
        for (const auto& r : rows) {
            if (r.n <= ref.size() && r.count != ref[r.n - 1]) {
                ok = false;
                os << "T4 mismatch at n=" << r.n << " (computed " << r.count << ", published "
                   << ref[r.n - 1] << "); ";
            }
        }
        u64 t5range = full ? (u64(1) << 14) : (u64(1) << 12);
        auto stats = table_r2_stats(t5range, tcfg);
        for (const auto& [s, first] : reference_t5_first()) {
            if (first > t5range) continue;
            bool found = false;
            for (const auto& r : stats)
                if (r.s == s) {
                    found = true;
                    if (r.first_n != first) {
                        ok = false;
                        os << "T5 first index of s=" << s << ": computed " << r.first_n
                           << ", published " << first << "; ";
                    }
                }
            if (!found) {
                ok = false;
                os << "T5 value s=" << s << " missing below " << t5range << "; ";
            }
        }
        for (const auto& r : rows) {
            if (r.n < 10 || r.n > 12) continue;
            double ratio = double(r.count) * double(r.n) / double(u64(1) << r.n);
            double published = 0;
            for (const auto& [m, v] : reference_t6())
                if (m == r.n) published = v;
            if (!t6_matches(ratio, published)) {
                ok = false;
                char buf[256];
                std::snprintf(buf, sizeof buf,
                              "T6 at m=%u: computed %.4f vs published %.2f (published row is "
                              "arithmetically inconsistent with the published count %llu at the "
                              "same m, which this run reproduces); ",
                              r.n, ratio, published,
                              (unsigned long long)(r.n <= ref.size() ? ref[r.n - 1] : 0));
                os << buf;
            }
        }
        if (ok) os << "T4 to n=" << t4max << ", T5 first indices to " << t5range
                   << ", T6 ratios to m=12 all match";
        criterion(9, "published table reproduction", ok, os.str(), t.elapsed());
    }

    {  // 10. unproven congruences and the paperfolding series
        Timer t;
        std::string detail;
        bool ok = run_families({"sigma-mod32", "paperfold-series"}, cfg, detail);
        criterion(10, "sigma and paperfolding congruences", ok, detail, t.elapsed());
    }

    {  // 11. automata
        Timer t;
        std::string detail;
        bool ok = run_families({"ptm-dfao", "chi-dfao", "chi-kernel"}, cfg, detail);
        criterion(11, "automata reproduce their sequences", ok, detail, t.elapsed());
    }

    {  // 12. determinism across thread counts
        Timer t;
        bool ok = false;
        std::string detail;
        const char* cli = std::getenv("BINPART_CLI");
        if (cli && *cli) {
            namespace fs = std::filesystem;
            fs::path dir = fs::temp_directory_path() / "binpart-acceptance";
            fs::create_directories(dir);
            std::string out1 = (dir / "verify-t1.json").string();
            std::string out8 = (dir / "verify-t8.json").string();
            std::string base = std::string("\"") + cli + "\" verify --all --budget small --seed 0";
            int rc1 = std::system((base + " --threads 1 > " + out1 + " 2>/dev/null").c_str());
            int rc8 = std::system((base + " --threads 8 > " + out8 + " 2>/dev/null").c_str());
            std::string a = read_file(out1), b = read_file(out8);
            ok = !a.empty() && a == b;
            std::ostringstream os;
            os << "cli runs exited " << rc1 << "/" << rc8 << ", outputs "
               << (ok ? "byte-identical" : "differ") << " (" << a.size() << " bytes)";
            detail = os.str();
        } else {
            CampaignConfig c1 = cfg, c8 = cfg;
            c1.threads = 1;
            c8.threads = 8;
            std::string d1 = campaign_json(run_all(c1), c1).dump(2);
            std::string d8 = campaign_json(run_all(c8), c8).dump(2);
            ok = d1 == d8;
            detail = "in-process comparison (BINPART_CLI unset); outputs " +
                     std::string(ok ? "byte-identical" : "differ");
        }
        criterion(12, "byte-identical verify output across thread counts", ok, detail,
                  t.elapsed());
    }

    std::printf("%s: %d criterion(s) failed\n", g_failures == 0 ? "OK" : "FAILURES", g_failures);
    return g_failures == 0 ? 0 : 1;
}
