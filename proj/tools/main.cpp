#include "binpart/chars.hpp"
#include "binpart/counting.hpp"
#include "binpart/dfao.hpp"
#include "binpart/factor.hpp"
#include "binpart/partition.hpp"
#include "binpart/sequences.hpp"
#include "binpart/squares.hpp"
#include "binpart/tables.hpp"
#include "binpart/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace binpart;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

u64 default_threads() {
    if (const char* env = std::getenv("BINPART_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
    }
    return 1;
}

// Writes to DIR/<name> when an output directory is set, stdout otherwise.
void emit(const std::string& out_dir, const std::string& name, const std::string& payload) {
    if (out_dir.empty()) {
        std::cout << payload;
        return;
    }
    std::filesystem::create_directories(out_dir);
    std::ofstream f(std::filesystem::path(out_dir) / name, std::ios::binary);
    f << payload;
}

struct SeqOptions {
    std::string name;
    u64 max = 100;
    u64 m = 1;
    unsigned a = 1;
    int mod = 0;
    std::string out_dir;
    std::string format = "csv";
};

int run_seq(const SeqOptions& opt) {
    std::string csv = "n,value\n";
    auto row = [&](u64 n, const std::string& v) { csv += std::to_string(n) + "," + v + "\n"; };
    const u64 N = opt.max;
    if (opt.name == "b" || opt.name == "b3" || opt.name == "bm") {
        u64 m = opt.name == "b" ? 1 : (opt.name == "b3" ? 3 : opt.m);
        if (m < 1) {
            std::cerr << "seq: --m must be >= 1\n";
            return kExitUsage;
        }
        if (opt.mod != 0) {
            auto rs = bm_residues(m, N, opt.mod);
            if (opt.format == "raw") {
                std::string bytes(rs.values().begin(), rs.values().end());
                emit(opt.out_dir, "seq-" + opt.name + ".bin", bytes);
                return kExitOk;
            }
            for (u64 n = 0; n <= N; ++n) row(n, std::to_string(rs.at(n)));
        } else {
            auto vals = opt.name == "b3" ? b3_values(N)
                                         : (opt.name == "b" ? b_values(N) : bm_values(m, N));
            for (u64 n = 0; n <= N; ++n) row(n, vals[n].str());
        }
    } else if (opt.name == "ptm") {
        for (u64 n = 0; n <= N; ++n) row(n, std::to_string(ptm(n).value()));
    } else if (opt.name == "T") {
        for (u64 n = 0; n <= N; ++n) row(n, std::to_string(ptm_parity(n)));
    } else if (opt.name == "sigma") {
        for (u64 n = 0; n <= N; ++n) row(n, std::to_string(one_runs_parity(n)));
    } else if (opt.name == "chi") {
        for (u64 n = 0; n <= N; ++n) row(n, std::to_string(chi(n)));
    } else if (opt.name == "beta") {
        auto tab = beta_table(N);
        for (u64 n = 0; n <= N; ++n) row(n, std::to_string(tab[n]));
    } else if (opt.name == "f") {
        auto recs = f_and_gaps(N + 1);
        for (const auto& r : recs) row(r.index, std::to_string(r.f));
    } else if (opt.name == "gaps") {
        auto recs = f_and_gaps(N + 1);
        for (const auto& r : recs) row(r.index, std::to_string(r.gap));
    } else if (opt.name == "c_a") {
        if (opt.a != 1 && opt.a != 3 && opt.a != 5 && opt.a != 7) {
            std::cerr << "seq c_a: --a must be one of 1, 3, 5, 7\n";
            return kExitUsage;
        }
        for (u64 l = 0; l <= N; ++l) row(l, std::to_string(c_a(opt.a, l)));
    } else {
        std::cerr << "seq: unknown sequence '" << opt.name << "'\n";
        return kExitUsage;
    }
    emit(opt.out_dir, "seq-" + opt.name + ".csv", csv);
    return kExitOk;
}

struct VerifyOptions {
    std::string family;
    bool all = false;
    CampaignConfig cfg;
    std::string out_dir;
};

int run_verify(const VerifyOptions& opt) {
    std::vector<Report> reports;
    if (opt.all) {
        reports = run_all(opt.cfg);
    } else {
        auto rep = run_family(opt.family, opt.cfg);
        if (!rep) {
            std::cerr << "verify: unknown family '" << opt.family << "'; known families:\n";
            for (const auto& f : family_registry())
                std::cerr << "  " << f.id << " (" << f.module << ")\n";
            return kExitUsage;
        }
        reports.push_back(*rep);
    }
    nlohmann::json doc = campaign_json(reports, opt.cfg);
    emit(opt.out_dir, "verify.json", doc.dump(2) + "\n");
    for (const auto& r : reports)
        if (!r.pass) return kExitCounterexample;
    return kExitOk;
}

struct TablesOptions {
    std::string which;
    unsigned nmax = 12;
    unsigned mmax = 12;
    u64 census_max = 1000;
    bool do_assert = false;
    std::string out_dir;
    TableCampaignConfig cfg;
};

int run_tables(const TablesOptions& opt) {
    if (opt.which == "T4") {
        auto rows = table_two_squares(opt.nmax, opt.cfg);
        emit(opt.out_dir, "T4.csv", csv_t4(rows));
        if (opt.do_assert) {
            const auto& ref = reference_t4();
            for (const auto& r : rows) {
                if (r.n >= 1 && r.n <= ref.size() && r.count != ref[r.n - 1]) {
                    std::cerr << "tables T4: mismatch at n=" << r.n << ": computed " << r.count
                              << ", published " << ref[r.n - 1] << "\n";
                    return kExitCounterexample;
                }
            }
        }
    } else if (opt.which == "T5") {
        auto rows = table_r2_stats(u64(1) << opt.nmax, opt.cfg);
        emit(opt.out_dir, "T5.csv", csv_t5(rows));
        if (opt.do_assert) {
            const u64 range = u64(1) << opt.nmax;
            for (const auto& [s, first] : reference_t5_first()) {
                if (first > range) continue;
                bool found = false;
                for (const auto& r : rows)
                    if (r.s == s) {
                        found = true;
                        if (r.first_n != first) {
                            std::cerr << "tables T5: first index of s=" << s << " is "
                                      << r.first_n << ", published " << first << "\n";
                            return kExitCounterexample;
                        }
                    }
                if (!found) {
                    std::cerr << "tables T5: value s=" << s << " not attained by n <= " << range
                              << " (published first index " << first << ")\n";
                    return kExitCounterexample;
                }
            }
        }
    } else if (opt.which == "T6") {
        auto rows = table_ratio(opt.mmax, opt.cfg);
        emit(opt.out_dir, "T6.csv", csv_t6(rows));
        if (opt.do_assert) {
            for (const auto& [m, published] : reference_t6()) {
                if (m > opt.mmax) continue;
                for (const auto& r : rows)
                    if (r.m == m && !t6_matches(r.ratio, published)) {
                        std::cerr << "tables T6: ratio at m=" << m << " is " << r.ratio
                                  << ", published " << published << "\n";
                        return kExitCounterexample;
                    }
            }
        }
    } else if (opt.which == "census") {
        auto c = representation_census(opt.census_max, opt.cfg);
        emit(opt.out_dir, "census.csv", csv_census(c));
        if (opt.do_assert && opt.census_max == 1000) {
            if (c.three_squares != 916 || c.x2y2z4 != 831 || c.x2y4z4 != 7) {
                std::cerr << "tables census: computed " << c.three_squares << "/" << c.x2y2z4
                          << "/" << c.x2y4z4 << ", published 916/831/7\n";
                return kExitCounterexample;
            }
        }
    } else {
        std::cerr << "tables: unknown table '" << opt.which << "'\n";
        return kExitUsage;
    }
    return kExitOk;
}

struct FigureOptions {
    std::string which;
    u64 xmax = 1024;
    std::string out_dir;
};

int run_figure(const FigureOptions& opt) {
    if (opt.which != "S1" && opt.which != "S3") {
        std::cerr << "figure: unknown figure '" << opt.which << "'\n";
        return kExitUsage;
    }
    auto rows = figure_rows(opt.which == "S1" ? SFamily::S1 : SFamily::S3, opt.xmax);
    emit(opt.out_dir, "figure-" + opt.which + ".csv", csv_figure(rows));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary partition function toolkit"};
    app.require_subcommand(1);

    SeqOptions seq;
    auto* seq_cmd = app.add_subcommand("seq", "emit a sequence as index,value rows");
    seq_cmd->add_option("name", seq.name,
                        "one of b, b3, bm, ptm, T, sigma, chi, beta, f, gaps, c_a")
        ->required();
    seq_cmd->add_option("--max", seq.max, "largest index (or count for f/gaps)");
    seq_cmd->add_option("--m", seq.m, "color count for bm");
    seq_cmd->add_option("--a", seq.a, "class for c_a (1, 3, 5 or 7)");
    seq_cmd->add_option("--mod", seq.mod, "emit residues mod 2^p instead of exact values")
        ->check(CLI::Range(1, 6));
    seq_cmd->add_option("--out", seq.out_dir, "output directory (stdout if omitted)");
    seq_cmd->add_option("--format", seq.format, "csv or raw (raw only with --mod)")
        ->check(CLI::IsMember({"csv", "raw"}));

    VerifyOptions ver;
    ver.cfg.threads = default_threads();
    auto* ver_cmd = app.add_subcommand("verify", "run verification campaigns");
    ver_cmd->add_option("family", ver.family, "family id (see --list)");
    ver_cmd->add_flag("--all", ver.all, "run every registered family");
    bool list_families = false;
    ver_cmd->add_flag("--list", list_families, "list family ids and exit");
    ver_cmd->add_option("--budget", ver.cfg.budget, "small or full")
        ->check(CLI::IsMember({"small", "full"}));
    u64 ver_max = 0;
    ver_cmd->add_option("--max", ver_max, "override the campaign index range");
    u64 ver_k = 0;
    ver_cmd->add_option("--k", ver_k, "restrict families with a k parameter");
    ver_cmd->add_option("--threads", ver.cfg.threads, "worker threads");
    ver_cmd->add_option("--seed", ver.cfg.seed, "deterministic randomness seed");
    ver_cmd->add_option("--out", ver.out_dir, "write verify.json here instead of stdout");

    TablesOptions tab;
    tab.cfg.threads = default_threads();
    auto* tab_cmd = app.add_subcommand("tables", "reproduce the published tables");
    tab_cmd->add_option("which", tab.which, "T4, T5, T6 or census")->required();
    tab_cmd->add_option("--nmax", tab.nmax, "largest power-of-two exponent (T4/T5)");
    tab_cmd->add_option("--mmax", tab.mmax, "largest exponent for T6");
    tab_cmd->add_option("--max", tab.census_max, "census range (default 1000)");
    tab_cmd->add_flag("--assert", tab.do_assert, "exit 1 when a published row mismatches");
    tab_cmd->add_option("--out", tab.out_dir, "output directory (stdout if omitted)");
    tab_cmd->add_option("--threads", tab.cfg.threads, "worker threads");
    tab_cmd->add_option("--seed", tab.cfg.factor.seed, "factorization seed");
    u64 tab_budget = 0;
    tab_cmd->add_option("--rho-budget", tab_budget, "rho iterations per cofactor");
    tab_cmd->add_option("--checkpoint-dir", tab.cfg.checkpoint_dir,
                        "resume interrupted runs from here");

    FigureOptions fig;
    auto* fig_cmd = app.add_subcommand("figure", "emit figure data as CSV");
    fig_cmd->add_option("which", fig.which, "S1 or S3")->required();
    fig_cmd->add_option("--xmax", fig.xmax, "largest abscissa");
    fig_cmd->add_option("--out", fig.out_dir, "output directory (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (seq_cmd->parsed()) return run_seq(seq);
        if (ver_cmd->parsed()) {
            if (list_families) {
                for (const auto& f : family_registry())
                    std::cout << f.id << "," << f.module << "," << f.summary << "\n";
                return kExitOk;
            }
            if (!ver.all && ver.family.empty()) {
                std::cerr << "verify: give a family id or --all\n";
                return kExitUsage;
            }
            if (ver_cmd->count("--max")) ver.cfg.max_override = ver_max;
            if (ver_cmd->count("--k")) ver.cfg.k_override = ver_k;
            return run_verify(ver);
        }
        if (tab_cmd->parsed()) {
            if (tab_cmd->count("--rho-budget")) tab.cfg.factor.rho_budget = tab_budget;
            return run_tables(tab);
        }
        if (fig_cmd->parsed()) return run_figure(fig);
    } catch (const FactorizationError& e) {
        std::cerr << "factorization gave up: " << e.what()
                  << " (cofactor " << e.cofactor().str() << "); raise the budget or change the seed\n";
        return kExitResource;
    } catch (const ResourceLimitError& e) {
        std::cerr << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCounterexample;
    }
    return kExitUsage;
}
