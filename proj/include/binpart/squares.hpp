#pragma once

#include "binpart/bignat.hpp"
#include "binpart/factor.hpp"

#include <optional>

namespace binpart {

// N = 4^r * core with 4 not dividing core.  Rejects N = 0.
struct Strip4 {
    u64 r;
    BigNat core;
};
Strip4 strip4(const BigNat& N);

// Legendre criterion: N is a sum of three integer squares iff N is not of
// the form 4^r (8s+7).  N = 0 counts as representable.
bool is_three_squares(const BigNat& N);
bool is_three_squares_u128(u128 N);

// Fermat criterion used as a decision procedure: true iff every prime
// p = 3 (mod 4) divides N to an even power.  True for N = 0, 1.
bool is_two_squares(const BigNat& N, const FactorConfig& cfg = {});
bool is_two_squares_u128(u128 N, const FactorConfig& cfg = {});

// r_2(N): number of ordered signed pairs (x, y) with x^2 + y^2 = N, i.e.
// 4 * sum over odd divisors d of (-1)^{(d-1)/2}, evaluated multiplicatively
// from the factorization.  Requires N >= 1.
u64 r2(const BigNat& N, const FactorConfig& cfg = {});
u64 r2_from_factors(const FactorMap& f);

// Explicit x <= y with x^2 + y^2 = N, or nullopt when N fails the two-square
// criterion.  Cornacchia descent on each prime p = 1 (mod 4), composed with
// Gaussian multiplication.
std::optional<std::pair<BigNat, BigNat>> two_square_decompose(const BigNat& N,
                                                              const FactorConfig& cfg = {});

// A solution of N = x^2 + y^2 + z^2 with x <= y <= z.
struct Rep3 {
    BigNat x, y, z;
};

enum class RepStatus { Found, NotRepresentable, BudgetExhausted };

struct Rep3Result {
    RepStatus status;
    std::optional<Rep3> rep;
};

// Iterates z downward from floor(sqrt(N)) and decomposes N - z^2 into two
// squares.  `z_budget` caps the number of z candidates tried; exhaustion is
// reported distinctly from non-representability.
Rep3Result find_three_square_rep(const BigNat& N, u64 z_budget = 10000,
                                 const FactorConfig& cfg = {});

enum class SpecialShape { x2y2z4, x2y4z4 };

// Does N admit x^2 + y^2 + z^4 (resp. x^2 + y^4 + z^4) with x,y,z >= 0?
bool count_special_reps(const BigNat& N, SpecialShape shape, const FactorConfig& cfg = {});

}  // namespace binpart
