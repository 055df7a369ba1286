#pragma once

#include "binpart/bignat.hpp"
#include "binpart/sequences.hpp"

#include <cstdint>
#include <vector>

namespace binpart {

// Window of a sequence reduced mod 2^p, p <= 6, indexed from 0.
class ResidueStream {
public:
    ResidueStream(int p, std::vector<std::uint8_t> values);

    int modulus_exponent() const { return p_; }
    std::uint32_t modulus() const { return std::uint32_t(1) << p_; }
    u64 size() const { return values_.size(); }
    std::uint8_t at(u64 n) const { return values_.at(n); }
    const std::vector<std::uint8_t>& values() const { return values_; }

private:
    int p_;
    std::vector<std::uint8_t> values_;
};

// Exact values b(0..N) of the binary partition function:
// b(0)=b(1)=1, b(2n)=b(2n-1)+b(n), b(2n+1)=b(2n).
std::vector<BigNat> b_values(u64 N, const StreamBudget& budget = default_budget());

// b(n) alone.
BigNat b_value(u64 n, const StreamBudget& budget = default_budget());

// Exact values b_3(0..N) via the four-term recurrence
// b_3(2n)   = 3 b_3(2n-1) - 3 b_3(2n-2) + b_3(2n-3) + b_3(n),
// b_3(2n+1) = 3 b_3(2n)   - 3 b_3(2n-1) + b_3(2n-2),
// with b_3(0)=1, b_3(1)=3, b_3(2)=9.
std::vector<BigNat> b3_values(u64 N, const StreamBudget& budget = default_budget());

// Exact values b_m(0..N), the m-fold convolution of b with itself, computed
// by square-and-multiply on the truncated power series of B(x).
std::vector<BigNat> bm_values(u64 m, u64 N, const StreamBudget& budget = default_budget());

// Same sequence by a different route: the order-(m+1) recurrence obtained
// from (1-x)^m B_m(x) = B_m(x^2).  Used as a cross-check of bm_values and as
// the cheap exact evaluator at large N.
std::vector<BigNat> bm_values_via_recurrence(u64 m, u64 N,
                                             const StreamBudget& budget = default_budget());

// b_m(0..N) mod 2^p, entirely in machine-word arithmetic.
ResidueStream bm_residues(u64 m, u64 N, int p, const StreamBudget& budget = default_budget());

// Churchhouse closed form for nu2(b(n)), n >= 2: always 1 or 2, driven by
// the parity of nu2 of the even neighbour of n (validated exhaustively
// against the exact stream).  Rejects n < 2.
Valuation b_valuation(u64 n);
Valuation b_valuation(const BigNat& n);

// Closed form for nu2(b_{2^k-1}(n)), k >= 1.  The four branches partition
// [0, 2^{k+2}) at 2^k, 2^{k+1} and 3*2^k; the first branch delegates to
// nu2(b(8q)) for n = 2^{k+2} q + i with i < 2^k.
Valuation bm_valuation(u64 k, const BigNat& n);
Valuation bm_valuation(u64 k, u64 n);

// Truncated product of two power series given by coefficient vectors
// (result has the length of the shorter input).
std::vector<BigNat> series_mul(const std::vector<BigNat>& a, const std::vector<BigNat>& b);

}  // namespace binpart
