#pragma once

#include "binpart/bignat.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace binpart {

// Complete prime factorization: distinct primes with positive exponents.
using FactorMap = std::map<BigNat, unsigned>;

struct FactorConfig {
    u64 seed = 0;
    // Brent-rho function evaluations allowed per resisting cofactor.
    u64 rho_budget = u64(1) << 24;
    // Trial-division bound.
    u64 trial_bound = 100000;
};

// A composite cofactor resisted splitting within the iteration budget.
// Raise the budget or change the seed and retry.
class FactorizationError : public std::runtime_error {
public:
    FactorizationError(std::string what, BigNat cofactor)
        : std::runtime_error(std::move(what)), cofactor_(std::move(cofactor)) {}
    const BigNat& cofactor() const { return cofactor_; }

private:
    BigNat cofactor_;
};

// Trial division to the configured bound, then probable-prime testing plus
// Brent-rho splitting.  Deterministic for a fixed config.
FactorMap factorize(const BigNat& n, const FactorConfig& cfg = {});

// Primes below 10^5 (ascending).
const std::vector<std::uint32_t>& small_primes();

// Reassemble prod p^e; test helper and sanity check.
BigNat factor_product(const FactorMap& f);

}  // namespace binpart
