#pragma once

#include "binpart/bignat.hpp"

#include <cstdint>
#include <vector>

namespace binpart {

// Row m of Pascal's triangle reduced mod 2^p (1 <= p <= 16), built by
// Pascal-row iteration so no division by even numbers ever happens.
std::vector<std::uint32_t> binomial_row_mod(u64 m, int p);

// C(m, n) for 0 <= n <= m, exact.  Multiplicative iteration along the row;
// every division is exact.
BigNat binomial_exact(u64 m, u64 n);

// The full exact row (handy when several entries of one row are needed).
std::vector<BigNat> binomial_row_exact(u64 m);

}  // namespace binpart
