#pragma once

#include "binpart/bignat.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace binpart {

enum class SFamily { S1, S3, S2k };

// Prefix counts c[x] = #(S ∩ [0, x]) for x <= xmax, via the closed-form
// membership predicates.
std::vector<std::uint32_t> s1_prefix_counts(u64 xmax);
std::vector<std::uint32_t> s3_prefix_counts(u64 xmax);
std::vector<std::uint32_t> s2k_prefix_counts(u64 k, u64 xmax);

u64 count_S(SFamily fam, u64 x, u64 k = 0);

// ---- Counting machinery for the S_1 bound ----------------------------------
// P1(x) = #{s : 8s + 3 + 2 t_s <= x}; Q1(x) = sum_k P1(x / 4^k);
// R1(x) = Q1(x) - x/6, held as an exact numerator over 6.
class P1Table {
public:
    explicit P1Table(u64 xmax);
    u64 P(u64 x) const;
    u64 Q(u64 x) const;
    i64 R_sixths(u64 x) const;  // 6 Q1(x) - x
    u64 xmax() const { return counts_.size() - 1; }

private:
    std::vector<std::uint32_t> counts_;
};

// R1 by its sixteen-identity recurrence with memoization; base values below
// 64 come from direct P/Q evaluation.  Exact, arbitrary-precision argument.
class R1Evaluator {
public:
    R1Evaluator();
    i64 sixths(const BigNat& n);

private:
    std::map<BigNat, i64> memo_;
};

// ---- Counting machinery for the S_3 bound ----------------------------------
// P3(x) = sum_{i<4} #{n : 8n + 2 floor(i/2) + 3 + 2 (-1)^i t_n <= x}.
class P3Table {
public:
    explicit P3Table(u64 xmax);
    u64 P(u64 x) const;
    u64 Q(u64 x) const;
    i64 R_sixths(u64 x) const;  // 6 Q3(x) - 4 x

private:
    std::vector<std::uint32_t> counts_;
};

// ---- Counting machinery for the S_{2^k-1} bound ----------------------------
// P_eps(x) = #{1 <= m <= x : t_m = eps};
// Q_eps(x) = #{1 <= m <= x : t_m = eps, nu2(m) even}.
class PepsTable {
public:
    explicit PepsTable(u64 xmax);
    u64 P(int eps, u64 x) const;
    u64 Q(int eps, u64 x) const;
    i64 R_sixths(int eps, u64 x) const;  // 6 Q_eps(x) - 2 x

private:
    std::vector<std::uint32_t> p_plus_, q_plus_, p_minus_, q_minus_;
};

// Extremal index sequences of the three counting theorems and the exact
// deviation S(m_l) - delta m_l (in twelfths) where direct counting is
// affordable; beyond `direct_limit` only the recurrence value is emitted.
struct ExtremalRow {
    u64 l;
    BigNat index;
    bool measured = false;
    i64 deviation_twelfths = 0;
};
std::vector<ExtremalRow> extremal_rows(SFamily fam, bool upper_sequence, u64 lmax, u64 k = 0,
                                       u64 direct_limit = u64(1) << 22);

// One figure sample: exact deviation S(x) - x/12 plus the bound curves.
struct FigureRow {
    u64 x;
    i64 dev_twelfths;
    double lower;
    double upper;
};
std::vector<FigureRow> figure_rows(SFamily which, u64 xmax);

}  // namespace binpart
