#pragma once

#include "binpart/bignat.hpp"

#include <cstdint>
#include <vector>

namespace binpart {

// Value of a +/-1 sequence term.
struct Sign {
    int v = 1;
    constexpr explicit Sign(int s) : v(s) {}
    constexpr int value() const { return v; }
    constexpr Sign operator-() const { return Sign(-v); }
    friend constexpr bool operator==(Sign a, Sign b) { return a.v == b.v; }
};

// A 2-adic valuation: a non-negative integer, or infinite (only for input 0).
// Arithmetic on valuations is deliberately not provided; callers must branch
// on is_infinite() before using the numeric value.
class Valuation {
public:
    static Valuation finite(u64 v) { return Valuation(false, v); }
    static Valuation infinite() { return Valuation(true, 0); }

    bool is_infinite() const { return inf_; }
    u64 value() const {
        if (inf_) throw std::domain_error("Valuation: value() on infinite valuation");
        return v_;
    }
    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }

private:
    Valuation(bool inf, u64 v) : inf_(inf), v_(v) {}
    bool inf_;
    u64 v_;
};

// Number of 1s in the binary expansion.
u64 s2(u64 n);
u64 s2(const BigNat& n);

// 2-adic valuation; infinite for n = 0.
Valuation nu2(u64 n);
Valuation nu2(const BigNat& n);

// Prouhet-Thue-Morse sign t_n = (-1)^{s2(n)}.
Sign ptm(u64 n);
Sign ptm(const BigNat& n);

// T_n = s2(n) mod 2, so that t_n = 1 - 2*T_n.
int ptm_parity(u64 n);
int ptm_parity(const BigNat& n);

// Parity of the number of maximal blocks of contiguous 1s in binary.
int one_runs_parity(u64 n);
int one_runs_parity(const BigNat& n);

// Regular paperfolding sign, defined for n >= 1 by
// p_{2n} = p_n, p_{2n+1} = (-1)^n.  Rejects n = 0.
Sign paperfold(u64 n);
Sign paperfold(const BigNat& n);

// m-th evil number 2m + T_m; enumerates {n : T_n = 0} in increasing order.
BigNat evil_number(const BigNat& m);
u64 evil_number(u64 m);

// m-th odious number 2m + 1 - T_m; enumerates {n : T_n = 1}.
u64 odious_number(u64 m);

// T_n for all n <= nmax, one byte per value (handy for bulk campaigns).
std::vector<std::uint8_t> ptm_parity_table(u64 nmax);

}  // namespace binpart
