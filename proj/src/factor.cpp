#include "binpart/factor.hpp"

#include "binpart/modarith.hpp"

#include <algorithm>

namespace binpart {

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        const std::uint32_t limit = 100000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (!composite[i]) {
                out.push_back(i);
                for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i)
                    composite[j] = true;
            }
        }
        return out;
    }();
    return primes;
}

namespace {

// One Brent-rho attempt with polynomial x^2 + c; returns a nontrivial factor
// or 0.  Spends at most `budget` function evaluations, decrementing it.
template <class Mont, class U>
U rho_brent_attempt(const Mont& M, U n, U c_plain, U x0_plain, u64& budget) {
    const U c = M.to(c_plain);
    U y = M.to(x0_plain);
    U g = 1;
    U q = M.one();
    U x = y, ys = y;
    const u64 m = 128;
    u64 r = 1;
    auto gcd_any = [&](U a, U b) -> U {
        if constexpr (sizeof(U) == 8)
            return gcd_u64(a, b);
        else
            return gcd_u128(a, b);
    };
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = M.add(M.mul(y, y), c);
        u64 k = 0;
        while (k < r && g == 1) {
            ys = y;
            u64 steps = std::min(m, r - k);
            if (steps > budget) {
                budget = 0;
                return 0;
            }
            budget -= steps;
            for (u64 i = 0; i < steps; ++i) {
                y = M.add(M.mul(y, y), c);
                q = M.mul(q, M.sub(x, y));
            }
            g = gcd_any(M.from(q), n);
            k += m;
        }
        r *= 2;
        if (r > budget) {
            // Not enough budget left for the next doubling round.
            if (g == 1) return 0;
        }
    }
    if (g == n) {
        // Backtrack one by one from ys.
        g = 1;
        while (g == 1) {
            if (budget == 0) return 0;
            --budget;
            ys = M.add(M.mul(ys, ys), c);
            g = gcd_any(M.from(M.sub(x, ys)), n);
        }
    }
    return (g == n) ? 0 : g;
}

u64 rho_split_u64(u64 n, u64 seed, u64& budget) {
    SplitMix64 rng(seed ^ (n * 0x9e3779b97f4a7c15ULL));
    Mont64 M(n);
    while (budget > 0) {
        u64 c = rng.next() % (n - 1) + 1;
        u64 x0 = rng.next() % n;
        u64 g = rho_brent_attempt<Mont64, u64>(M, n, c, x0, budget);
        if (g != 0 && g != n) return g;
    }
    return 0;
}

u128 rho_split_u128(u128 n, u64 seed, u64& budget) {
    SplitMix64 rng(seed ^ u64(n) ^ (u64(n >> 64) * 0x9e3779b97f4a7c15ULL));
    if (n < (u128(1) << 127)) {
        Mont128 M(n);
        while (budget > 0) {
            u128 c = ((u128(rng.next()) << 64) | rng.next()) % (n - 1) + 1;
            u128 x0 = ((u128(rng.next()) << 64) | rng.next()) % n;
            u128 g = rho_brent_attempt<Mont128, u128>(M, n, c, x0, budget);
            if (g != 0 && g != n) return u128(g);
        }
        return 0;
    }
    SlowMod128 M(n);
    while (budget > 0) {
        u128 c = ((u128(rng.next()) << 64) | rng.next()) % (n - 1) + 1;
        u128 x0 = ((u128(rng.next()) << 64) | rng.next()) % n;
        u128 g = rho_brent_attempt<SlowMod128, u128>(M, n, c, x0, budget);
        if (g != 0 && g != n) return u128(g);
    }
    return 0;
}

void add_factor(FactorMap& out, const BigNat& p, unsigned e) { out[p] += e; }

// Fully factor an odd cofactor with no prime divisor <= trial bound.
void factor_cofactor_u128(u128 c, unsigned mult, const FactorConfig& cfg, FactorMap& out) {
    if (c == 1) return;
    if (is_probable_prime(c, cfg.seed)) {
        add_factor(out, from_u128(c), mult);
        return;
    }
    if (is_square_u128(c)) {
        factor_cofactor_u128(isqrt_u128(c), 2 * mult, cfg, out);
        return;
    }
    u64 budget = cfg.rho_budget;
    u128 g = (c <= (u128(1) << 62)) ? u128(rho_split_u64(u64(c), cfg.seed, budget))
                                    : rho_split_u128(c, cfg.seed, budget);
    if (g == 0)
        throw FactorizationError("factorize: cofactor resisted splitting within budget",
                                 from_u128(c));
    factor_cofactor_u128(g, mult, cfg, out);
    factor_cofactor_u128(c / g, mult, cfg, out);
}

void factor_cofactor_big(const BigNat& c, unsigned mult, const FactorConfig& cfg, FactorMap& out);

void factor_cofactor_dispatch(const BigNat& c, unsigned mult, const FactorConfig& cfg,
                              FactorMap& out) {
    if (fits_u128(c))
        factor_cofactor_u128(to_u128(c), mult, cfg, out);
    else
        factor_cofactor_big(c, mult, cfg, out);
}

void factor_cofactor_big(const BigNat& c, unsigned mult, const FactorConfig& cfg, FactorMap& out) {
    if (c == 1) return;
    if (is_probable_prime(c, cfg.seed)) {
        add_factor(out, c, mult);
        return;
    }
    BigNat r = isqrt_big(c);
    if (r * r == c) {
        factor_cofactor_dispatch(r, 2 * mult, cfg, out);
        return;
    }
    // cpp_int Brent rho; slow, but only reachable for inputs beyond 126 bits.
    SplitMix64 rng(cfg.seed ^ 0x5eed);
    u64 budget = cfg.rho_budget;
    while (budget > 0) {
        BigNat cc = BigNat(rng.next()) % (c - 1) + 1;
        BigNat x = BigNat(rng.next()) % c, y = x, g = 1;
        while (g == 1 && budget > 0) {
            --budget;
            x = (x * x + cc) % c;
            y = (y * y + cc) % c;
            y = (y * y + cc) % c;
            g = boost::multiprecision::gcd(x >= y ? x - y : y - x, c);
        }
        if (g != c && g != 1) {
            factor_cofactor_dispatch(g, mult, cfg, out);
            factor_cofactor_dispatch(c / g, mult, cfg, out);
            return;
        }
    }
    throw FactorizationError("factorize: cofactor resisted splitting within budget", c);
}

}  // namespace

FactorMap factorize(const BigNat& n, const FactorConfig& cfg) {
    if (n < 1) throw std::domain_error("factorize: input must be >= 1");
    FactorMap out;
    if (n == 1) return out;
    BigNat c = n;
    u64 two = boost::multiprecision::lsb(c);
    if (c != 0 && two > 0) {
        add_factor(out, 2, unsigned(two));
        c >>= two;
    }
    if (c == 1) return out;
    // Trial division, in u128 arithmetic as soon as the cofactor allows.
    if (fits_u128(c)) {
        u128 v = to_u128(c);
        for (std::uint32_t p : small_primes()) {
            if (p > cfg.trial_bound) break;
            if (u128(p) * p > v) break;
            if (v % p == 0) {
                unsigned e = 0;
                while (v % p == 0) {
                    v /= p;
                    ++e;
                }
                add_factor(out, p, e);
            }
        }
        if (v > 1) {
            if (v <= u128(cfg.trial_bound) * cfg.trial_bound)
                add_factor(out, from_u128(v), 1);  // below the square of the bound: prime
            else
                factor_cofactor_u128(v, 1, cfg, out);
        }
        return out;
    }
    for (std::uint32_t p : small_primes()) {
        if (p > cfg.trial_bound) break;
        if (c % p == 0) {
            unsigned e = 0;
            while (c % p == 0) {
                c /= p;
                ++e;
            }
            add_factor(out, p, e);
            if (fits_u128(c)) break;
        }
    }
    if (fits_u128(c)) {
        // Continue in word arithmetic.
        FactorMap rest = factorize(c, cfg);
        for (const auto& [p, e] : rest) add_factor(out, p, e);
        return out;
    }
    if (c > 1) factor_cofactor_dispatch(c, 1, cfg, out);
    return out;
}

BigNat factor_product(const FactorMap& f) {
    BigNat prod = 1;
    for (const auto& [p, e] : f)
        for (unsigned i = 0; i < e; ++i) prod *= p;
    return prod;
}

}  // namespace binpart
