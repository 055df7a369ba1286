#pragma once

#include "binpart/bignat.hpp"
#include "binpart/partition.hpp"

#include <cstdint>
#include <vector>

namespace binpart {

// chi(0)=0, chi(2n+1)=0, chi(4n)=chi(n), chi(8n+2)=T_n, chi(8n+6)=0.
// chi(n) = 1 exactly when b(2n) is not a sum of three squares.
int chi(u64 n);
int chi(const BigNat& n);

// n = 2^{2k+2} (8r + 2 t_r + 3) + i with i in {0,1}: the indices whose b(n)
// is not a sum of three squares.
struct S1Witness {
    bool member = false;
    u64 k = 0;
    u64 r = 0;
    unsigned i = 0;
};
S1Witness s1_witness(u64 n);

// n = 2^{2k+1} (8p + 2 floor(i/2) + 3 + 2 (-1)^i t_p) + i, i in {0,1,2,3},
// k >= 1: indices whose b_3(n) is not a sum of three squares.
struct S3Witness {
    bool member = false;
    u64 k = 0;
    u64 p = 0;
    unsigned i = 0;
};
S3Witness s3_witness(u64 n);

// Membership for b_{2^k-1}(n), k >= 3.  Below 2^k the two quarter clauses
// apply; at and above 2^k membership is t_n = t_{n-2^k} = 1.
struct S2kWitness {
    bool member = false;
    int clause = 0;  // 1: n < 2^{k-2}, t_n = -1; 2: third quarter, t_n = 1; 3: high
    u64 m = 0;       // clause 3: n = 2^k m + l
    u64 l = 0;
};
S2kWitness s2k_witness(u64 k, u64 n);

// beta(m) = (b(8m+4)/4) mod 8, always odd.  Bulk values come from a single
// mod-32 residue stream.
std::vector<std::uint8_t> beta_table(u64 mmax, const StreamBudget& budget = default_budget());
int beta(u64 m);

// The increasing enumerations of {m : beta(m) = a} for a in {1,3,5,7}:
// c_1(l) = 4l - t_l + 1, c_3(l) = 4l + t_l + 2,
// c_5(l) = 4l - t_l + 2, c_7(l) = 4l + t_l + 1.
u64 c_a(unsigned a, u64 l);

// Element f_n of the increasing enumeration of {n : chi(n) = 1} together
// with the gap to its successor.
struct GapRecord {
    u64 index;
    u64 f;
    u64 gap;
};
std::vector<GapRecord> f_and_gaps(u64 count);

// First `how_many` members of the witness family I_g realizing gap g
// (g in {6,8,10,16,18,24}); every returned index is checked to satisfy
// chi(n) = chi(n+g) = 1 with zeros strictly between.
std::vector<u64> gap_class_witnesses(unsigned g, u64 how_many);

}  // namespace binpart
