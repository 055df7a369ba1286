#include "binpart/partition.hpp"

#include "binpart/binomial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace binpart {

ResidueStream::ResidueStream(int p, std::vector<std::uint8_t> values)
    : p_(p), values_(std::move(values)) {
    if (p_ < 1 || p_ > 6) throw std::domain_error("ResidueStream: p must be in [1,6]");
    for (std::uint8_t v : values_)
        if (v >= (1u << p_)) throw std::domain_error("ResidueStream: value out of range");
}

namespace {

void check_exact_budget(u64 N, const StreamBudget& budget, const char* who) {
    if (N > budget.max_exact)
        throw ResourceLimitError(std::string(who) + ": N exceeds exact-stream budget");
}

void check_mod_budget(u64 N, const StreamBudget& budget, const char* who) {
    if (N > budget.max_modular)
        throw ResourceLimitError(std::string(who) + ": N exceeds modular-stream budget");
}

}  // namespace

std::vector<BigNat> b_values(u64 N, const StreamBudget& budget) {
    check_exact_budget(N, budget, "b_values");
    std::vector<BigNat> b(N + 1);
    b[0] = 1;
    if (N >= 1) b[1] = 1;
    for (u64 n = 2; n <= N; ++n) {
        if (n % 2 == 0)
            b[n] = b[n - 1] + b[n / 2];
        else
            b[n] = b[n - 1];
    }
    return b;
}

BigNat b_value(u64 n, const StreamBudget& budget) { return b_values(n, budget).back(); }

std::vector<BigNat> b3_values(u64 N, const StreamBudget& budget) {
    check_exact_budget(N, budget, "b3_values");
    std::vector<BigNat> b(std::max<u64>(N, 2) + 1);
    b[0] = 1;
    b[1] = 3;
    b[2] = 9;
    for (u64 i = 3; i <= N; ++i) {
        if (i % 2 == 0) {
            u64 n = i / 2;
            b[i] = 3 * b[i - 1] - 3 * b[i - 2] + b[i - 3] + b[n];
        } else {
            b[i] = 3 * b[i - 1] - 3 * b[i - 2] + b[i - 3];
        }
    }
    b.resize(N + 1);
    return b;
}

std::vector<BigNat> series_mul(const std::vector<BigNat>& a, const std::vector<BigNat>& b) {
    size_t n = std::min(a.size(), b.size());
    std::vector<BigNat> out(n);
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j + i < n; ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::vector<BigNat> bm_values(u64 m, u64 N, const StreamBudget& budget) {
    if (m < 1) throw std::domain_error("bm_values: m must be >= 1");
    check_exact_budget(N, budget, "bm_values");
    std::vector<BigNat> base = b_values(N, budget);
    if (m == 1) return base;
    // Square-and-multiply over the exponent bits of m, most significant first.
    std::vector<BigNat> acc = base;
    int top = 63 - std::countl_zero(m);
    for (int bit = top - 1; bit >= 0; --bit) {
        acc = series_mul(acc, acc);
        if ((m >> bit) & 1) acc = series_mul(acc, base);
    }
    return acc;
}

std::vector<BigNat> bm_values_via_recurrence(u64 m, u64 N, const StreamBudget& budget) {
    if (m < 1) throw std::domain_error("bm_values_via_recurrence: m must be >= 1");
    check_exact_budget(N, budget, "bm_values_via_recurrence");
    // (1-x)^m B_m(x) = B_m(x^2) gives
    // b_m(n) = [2|n] b_m(n/2) + sum_{j=1..min(m,n)} (-1)^{j+1} C(m,j) b_m(n-j).
    std::vector<BigNat> coeff = binomial_row_exact(m);
    std::vector<BigNat> v(N + 1);
    v[0] = 1;
    for (u64 n = 1; n <= N; ++n) {
        BigNat acc = (n % 2 == 0) ? v[n / 2] : BigNat(0);
        u64 jmax = std::min(m, n);
        for (u64 j = 1; j <= jmax; ++j) {
            if (j & 1)
                acc += coeff[j] * v[n - j];
            else
                acc -= coeff[j] * v[n - j];
        }
        v[n] = std::move(acc);
    }
    return v;
}

ResidueStream bm_residues(u64 m, u64 N, int p, const StreamBudget& budget) {
    if (m < 1) throw std::domain_error("bm_residues: m must be >= 1");
    if (p < 1 || p > 6) throw std::domain_error("bm_residues: p must be in [1,6]");
    check_mod_budget(N, budget, "bm_residues");
    const std::uint32_t mask = (std::uint32_t(1) << p) - 1;
    // Same recurrence as bm_values_via_recurrence, with signed coefficients
    // folded into residues once up front.
    std::vector<std::uint32_t> row = binomial_row_mod(m, p);
    std::vector<std::uint32_t> coeff(m + 1, 0);
    for (u64 j = 1; j <= m; ++j)
        coeff[j] = (j & 1) ? row[j] : ((0u - row[j]) & mask);
    std::vector<std::uint8_t> v(N + 1);
    v[0] = std::uint8_t(1 & mask);
    for (u64 n = 1; n <= N; ++n) {
        std::uint32_t acc = (n % 2 == 0) ? v[n / 2] : 0;
        u64 jmax = std::min(m, n);
        for (u64 j = 1; j <= jmax; ++j) acc += coeff[j] * v[n - j];
        v[n] = std::uint8_t(acc & mask);
    }
    return ResidueStream(p, std::move(v));
}

Valuation b_valuation(u64 n) {
    if (n < 2) throw std::domain_error("b_valuation: defined for n >= 2 only");
    // b(2m+1) = b(2m), so the valuation is driven by the even neighbour:
    // nu2(b(n)) = 1 when nu2(n - n%2) is odd and 2 when it is even.
    u64 even_part = n & ~u64(1);
    return Valuation::finite((nu2(even_part).value() % 2 == 1) ? 1 : 2);
}

Valuation b_valuation(const BigNat& n) {
    if (n < 2) throw std::domain_error("b_valuation: defined for n >= 2 only");
    BigNat even_part = n;
    if (boost::multiprecision::bit_test(even_part, 0)) even_part -= 1;
    return Valuation::finite((nu2(even_part).value() % 2 == 1) ? 1 : 2);
}

Valuation bm_valuation(u64 k, const BigNat& n) {
    if (k < 1) throw std::domain_error("bm_valuation: k must be >= 1");
    BigNat block = BigNat(1) << (k + 2);
    BigNat q = n >> (k + 2);
    u64 i = to_u64(n - q * block);
    if (i < (u64(1) << k)) {
        if (q == 0) return Valuation::finite(0);  // b(0) = 1
        return b_valuation(BigNat(8 * q));
    }
    if (i < (u64(1) << (k + 1))) return Valuation::finite(1);
    if (i < 3 * (u64(1) << k)) return Valuation::finite(2);
    return Valuation::finite(1);
}

Valuation bm_valuation(u64 k, u64 n) { return bm_valuation(k, BigNat(n)); }

}  // namespace binpart
