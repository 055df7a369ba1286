#include "binpart/sequences.hpp"

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>

namespace binpart {

namespace {

u64 popcount_big(const BigNat& n) {
    if (n == 0) return 0;
    u64 count = 0;
    // Walk the backend limbs directly; they are canonical (no leading zeros).
    const auto& backend = n.backend();
    for (unsigned i = 0; i < backend.size(); ++i)
        count += std::popcount(static_cast<u64>(backend.limbs()[i]));
    return count;
}

}  // namespace

u64 s2(u64 n) { return std::popcount(n); }
u64 s2(const BigNat& n) {
    if (n < 0) throw std::domain_error("s2: negative input");
    return popcount_big(n);
}

Valuation nu2(u64 n) {
    if (n == 0) return Valuation::infinite();
    return Valuation::finite(std::countr_zero(n));
}
Valuation nu2(const BigNat& n) {
    if (n < 0) throw std::domain_error("nu2: negative input");
    if (n == 0) return Valuation::infinite();
    return Valuation::finite(boost::multiprecision::lsb(n));
}

Sign ptm(u64 n) { return Sign((s2(n) & 1) ? -1 : 1); }
Sign ptm(const BigNat& n) { return Sign((s2(n) & 1) ? -1 : 1); }

int ptm_parity(u64 n) { return int(s2(n) & 1); }
int ptm_parity(const BigNat& n) { return int(s2(n) & 1); }

int one_runs_parity(u64 n) {
    // Number of maximal runs of 1s equals popcount(n) - popcount(n & (n >> 1)).
    u64 runs = u64(std::popcount(n)) - u64(std::popcount(n & (n >> 1)));
    return int(runs & 1);
}
int one_runs_parity(const BigNat& n) {
    if (n < 0) throw std::domain_error("one_runs_parity: negative input");
    u64 runs = popcount_big(n) - popcount_big(n & (n >> 1));
    return int(runs & 1);
}

Sign paperfold(u64 n) {
    if (n == 0) throw std::domain_error("paperfold: defined for n >= 1 only");
    n >>= std::countr_zero(n);
    // n = 2m+1; sign is (-1)^m.
    return Sign(((n >> 1) & 1) ? -1 : 1);
}
Sign paperfold(const BigNat& n) {
    if (n <= 0) throw std::domain_error("paperfold: defined for n >= 1 only");
    BigNat odd = n >> boost::multiprecision::lsb(n);
    return Sign(boost::multiprecision::bit_test(odd, 1) ? -1 : 1);
}

BigNat evil_number(const BigNat& m) { return 2 * m + ptm_parity(m); }
u64 evil_number(u64 m) { return 2 * m + u64(ptm_parity(m)); }
u64 odious_number(u64 m) { return 2 * m + 1 - u64(ptm_parity(m)); }

std::vector<std::uint8_t> ptm_parity_table(u64 nmax) {
    std::vector<std::uint8_t> t(nmax + 1);
    t[0] = 0;
    for (u64 n = 1; n <= nmax; ++n) t[n] = t[n >> 1] ^ std::uint8_t(n & 1);
    return t;
}

}  // namespace binpart
