#include "binpart/binomial.hpp"

#include <stdexcept>

namespace binpart {

std::vector<std::uint32_t> binomial_row_mod(u64 m, int p) {
    if (p < 1 || p > 16) throw std::domain_error("binomial_row_mod: p out of range");
    const std::uint32_t mask = (std::uint32_t(1) << p) - 1;
    std::vector<std::uint32_t> row(m + 1, 0);
    row[0] = 1;
    for (u64 i = 1; i <= m; ++i)
        for (u64 j = i; j > 0; --j) row[j] = (row[j] + row[j - 1]) & mask;
    return row;
}

BigNat binomial_exact(u64 m, u64 n) {
    if (n > m) return 0;
    if (n > m - n) n = m - n;
    BigNat c = 1;
    for (u64 i = 0; i < n; ++i) {
        c *= (m - i);
        c /= (i + 1);
    }
    return c;
}

std::vector<BigNat> binomial_row_exact(u64 m) {
    std::vector<BigNat> row(m + 1);
    row[0] = 1;
    for (u64 i = 1; i <= m; ++i) {
        row[i] = row[i - 1] * (m - i + 1);
        row[i] /= i;
    }
    return row;
}

}  // namespace binpart
