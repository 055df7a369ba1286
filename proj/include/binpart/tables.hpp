#pragma once

#include "binpart/counting.hpp"
#include "binpart/factor.hpp"

#include <string>
#include <vector>

namespace binpart {

struct TableCampaignConfig {
    FactorConfig factor;
    u64 threads = 1;
    std::string checkpoint_dir;  // empty disables checkpointing
};

struct T4Row {
    unsigned n;
    u64 count;
};

struct T5Row {
    u64 s;
    u64 count;
    u64 first_n;
};

struct T6Row {
    unsigned m;
    double ratio;
};

struct CensusResult {
    u64 three_squares = 0;
    u64 x2y2z4 = 0;
    u64 x2y4z4 = 0;
};

// T(2^n) for 1 <= n <= nmax, where T(x) = #{1 <= m <= x : b(2m) is a sum of
// two squares}.  (The published rows start the count at m = 1.)
std::vector<T4Row> table_two_squares(unsigned nmax, const TableCampaignConfig& cfg = {});

// Distinct values s = r2(b(2n)) over 0 <= n <= xmax with occurrence counts
// and first indices, ascending in s.  s = 0 rows are omitted, matching the
// published table.
std::vector<T5Row> table_r2_stats(u64 xmax, const TableCampaignConfig& cfg = {});

// T(2^m) * m / 2^m for 10 <= m <= mmax.
std::vector<T6Row> table_ratio(unsigned mmax, const TableCampaignConfig& cfg = {});

// Counts over n <= nmax: b(2n) a sum of three squares; of some x^2+y^2+z^4;
// of some x^2+y^4+z^4.
CensusResult representation_census(u64 nmax = 1000, const TableCampaignConfig& cfg = {});

std::string csv_t4(const std::vector<T4Row>& rows);
std::string csv_t5(const std::vector<T5Row>& rows);
std::string csv_t6(const std::vector<T6Row>& rows);
std::string csv_census(const CensusResult& c);
std::string csv_figure(const std::vector<FigureRow>& rows);

// Published rows, for --assert runs and the acceptance suite.
const std::vector<u64>& reference_t4();                         // T(2^n), n = 1..20
const std::vector<std::pair<u64, u64>>& reference_t5_first();   // (s, first n)
const std::vector<std::pair<unsigned, double>>& reference_t6(); // (m, printed ratio)

// Printed-value comparison: the published ratios are rounded (or truncated)
// to two decimals, so accept either within the stated tolerance.
bool t6_matches(double computed, double published, double tol = 0.005);

}  // namespace binpart
