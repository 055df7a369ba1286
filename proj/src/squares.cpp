#include "binpart/squares.hpp"

#include "binpart/modarith.hpp"
#include "binpart/sequences.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace binpart {

Strip4 strip4(const BigNat& N) {
    if (N < 1) throw std::domain_error("strip4: input must be >= 1");
    u64 v = nu2(N).value();
    u64 r = v / 2;
    return Strip4{r, N >> (2 * r)};
}

bool is_three_squares(const BigNat& N) {
    if (N == 0) return true;
    return strip4(N).core % 8 != 7;
}

bool is_three_squares_u128(u128 N) {
    if (N == 0) return true;
    while ((N & 3) == 0) N >>= 2;
    return (N & 7) != 7;
}

namespace {

// Fully factor a cofactor that has no prime divisor <= `stripped_to`, and
// decide whether all primes = 3 (mod 4) occur to even powers.
bool cofactor_two_squares(u128 c, const FactorConfig& cfg) {
    if (c == 1) return true;
    if (is_probable_prime(c, cfg.seed)) return (c & 3) == 1;
    if (is_square_u128(c)) return true;  // all exponents even
    FactorMap f;
    FactorConfig sub = cfg;
    FactorMap tmp;
    // Reuse the generic machinery: factorize with trial division skipped is
    // not exposed, so factor via factorize on the BigNat value (its trial
    // division will fall through quickly since c has no small factors).
    f = factorize(from_u128(c), sub);
    for (const auto& [p, e] : f)
        if (p % 4 == 3 && (e & 1)) return false;
    return true;
}

}  // namespace

bool is_two_squares_u128(u128 N, const FactorConfig& cfg) {
    if (N <= 1) return true;
    while ((N & 1) == 0) N >>= 1;
    if (N == 1) return true;
    for (std::uint32_t p : small_primes()) {
        if (p == 2) continue;
        if (p > 1000) break;
        if (u128(p) * p > N) break;
        if (N % p == 0) {
            unsigned e = 0;
            while (N % p == 0) {
                N /= p;
                ++e;
            }
            if (p % 4 == 3 && (e & 1)) return false;
        }
    }
    if (N == 1) return true;
    if (N <= u128(1000) * 1000) return (N & 3) == 1;  // prime after the sweep above
    return cofactor_two_squares(N, cfg);
}

bool is_two_squares(const BigNat& N, const FactorConfig& cfg) {
    if (N <= 1) return true;
    if (fits_u128(N)) return is_two_squares_u128(to_u128(N), cfg);
    FactorMap f = factorize(N, cfg);
    for (const auto& [p, e] : f)
        if (p % 4 == 3 && (e & 1)) return false;
    return true;
}

u64 r2_from_factors(const FactorMap& f) {
    u64 count = 4;
    for (const auto& [p, e] : f) {
        if (p == 2) continue;
        if (p % 4 == 1)
            count *= (e + 1);
        else if (e & 1)
            return 0;
    }
    return count;
}

u64 r2(const BigNat& N, const FactorConfig& cfg) {
    if (N < 1) throw std::domain_error("r2: input must be >= 1");
    return r2_from_factors(factorize(N, cfg));
}

namespace {

// Square root of -1 modulo an odd prime p = 1 (mod 4).
BigNat sqrt_minus_one(const BigNat& p, const FactorConfig& cfg) {
    using boost::multiprecision::powm;
    BigNat exp2 = (p - 1) / 2;
    BigNat exp4 = (p - 1) / 4;
    for (u64 q = 2;; ++q) {
        BigNat qq = q;
        if (powm(qq, exp2, p) == p - 1) return powm(qq, exp4, p);
        if (q > 1000000) throw std::runtime_error("sqrt_minus_one: no non-residue found");
        (void)cfg;
    }
}

// Hermite-Serret / Cornacchia descent: p = 1 (mod 4) prime -> (x, y).
std::pair<BigNat, BigNat> prime_two_square(const BigNat& p, const FactorConfig& cfg) {
    if (p == 2) return {1, 1};
    BigNat r = sqrt_minus_one(p, cfg);
    BigNat bound = isqrt_big(p);
    BigNat u = p, v = r;
    while (v > bound) {
        BigNat t = u % v;
        u = v;
        v = t;
    }
    BigNat x = v;
    BigNat y2 = p - x * x;
    BigNat y = isqrt_big(y2);
    if (y * y != y2) throw std::runtime_error("prime_two_square: descent failed");
    return x <= y ? std::make_pair(x, y) : std::make_pair(y, x);
}

std::pair<BigNat, BigNat> gaussian_mul(const std::pair<BigNat, BigNat>& a,
                                       const std::pair<BigNat, BigNat>& b) {
    BigNat re = a.first * b.first - a.second * b.second;
    if (re < 0) re = -re;
    BigNat im = a.first * b.second + a.second * b.first;
    return {re, im};
}

}  // namespace

std::optional<std::pair<BigNat, BigNat>> two_square_decompose(const BigNat& N,
                                                              const FactorConfig& cfg) {
    if (N == 0) return std::make_pair(BigNat(0), BigNat(0));
    if (N == 1) return std::make_pair(BigNat(0), BigNat(1));
    FactorMap f = factorize(N, cfg);
    BigNat scale = 1;
    std::pair<BigNat, BigNat> acc{1, 0};
    for (const auto& [p, e] : f) {
        if (p % 4 == 3) {
            if (e & 1) return std::nullopt;
            for (unsigned i = 0; i < e / 2; ++i) scale *= p;
            continue;
        }
        auto ps = prime_two_square(p, cfg);
        for (unsigned i = 0; i < e; ++i) acc = gaussian_mul(acc, ps);
    }
    BigNat x = acc.first * scale, y = acc.second * scale;
    if (x > y) std::swap(x, y);
    return std::make_pair(x, y);
}

Rep3Result find_three_square_rep(const BigNat& N, u64 z_budget, const FactorConfig& cfg) {
    if (N == 0) return {RepStatus::Found, Rep3{0, 0, 0}};
    if (!is_three_squares(N)) return {RepStatus::NotRepresentable, std::nullopt};
    BigNat z = isqrt_big(N);
    for (u64 tried = 0; z >= 0 && tried < z_budget; --z, ++tried) {
        BigNat M = N - z * z;
        auto xy = two_square_decompose(M, cfg);
        if (xy) {
            BigNat a = xy->first, b = xy->second, c = z;
            if (a > b) std::swap(a, b);
            if (b > c) std::swap(b, c);
            if (a > b) std::swap(a, b);
            return {RepStatus::Found, Rep3{a, b, c}};
        }
        if (z == 0) break;
    }
    return {RepStatus::BudgetExhausted, std::nullopt};
}

namespace {

bool special_x2y2z4_u128(u128 N, const FactorConfig& cfg) {
    u64 zmax = iroot4_u128(N);
    for (u64 z = 0; z <= zmax; ++z) {
        u128 z4 = u128(z) * z;
        z4 *= z4;
        u128 M = N - z4;
        unsigned m8 = unsigned(M & 7);
        if (m8 == 3 || m8 == 6 || m8 == 7) continue;  // never a sum of two squares
        if (is_two_squares_u128(M, cfg)) return true;
    }
    return false;
}

bool special_x2y4z4_u128(u128 N) {
    u64 zmax = iroot4_u128(N);
    std::vector<u128> pow4(zmax + 1);
    for (u64 i = 0; i <= zmax; ++i) {
        u128 sq = u128(i) * i;
        pow4[i] = sq * sq;
    }
    for (u64 z = 0; z <= zmax; ++z) {
        u128 rest = N - pow4[z];
        for (u64 y = 0; y <= z; ++y) {
            if (pow4[y] > rest) break;
            if (is_square_u128(rest - pow4[y])) return true;
        }
    }
    return false;
}

}  // namespace

bool count_special_reps(const BigNat& N, SpecialShape shape, const FactorConfig& cfg) {
    if (fits_u128(N)) {
        u128 v = to_u128(N);
        return shape == SpecialShape::x2y2z4 ? special_x2y2z4_u128(v, cfg)
                                             : special_x2y4z4_u128(v);
    }
    // Arbitrary-precision fallback.
    BigNat zmax = isqrt_big(isqrt_big(N));
    for (BigNat z = 0; z <= zmax; ++z) {
        BigNat z4 = z * z * z * z;
        if (shape == SpecialShape::x2y2z4) {
            if (is_two_squares(N - z4, cfg)) return true;
        } else {
            for (BigNat y = 0; y <= z; ++y) {
                BigNat rest = N - z4 - y * y * y * y;
                if (rest < 0) break;
                BigNat r = isqrt_big(rest);
                if (r * r == rest) return true;
            }
        }
    }
    return false;
}

}  // namespace binpart
