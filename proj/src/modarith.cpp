#include "binpart/modarith.hpp"

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace binpart {

u128 gcd_u128(u128 a, u128 b) {
    if (a == 0) return b;
    if (b == 0) return a;
    int sa = std::countr_zero(u64(a)) + ((u64(a) == 0) ? std::countr_zero(u64(a >> 64)) : 0);
    int sb = std::countr_zero(u64(b)) + ((u64(b) == 0) ? std::countr_zero(u64(b >> 64)) : 0);
    int shift = sa < sb ? sa : sb;
    a >>= sa;
    while (b != 0) {
        b >>= (u64(b) == 0) ? 64 + std::countr_zero(u64(b >> 64)) : std::countr_zero(u64(b));
        if (a > b) {
            u128 t = a;
            a = b;
            b = t;
        }
        b -= a;
    }
    return a << shift;
}

u64 mulmod_u64(u64 a, u64 b, u64 m) { return u64((u128(a) * b) % m); }

namespace {

// 128x128 -> 256 multiplication, result as (hi, lo).
inline void mul_full_128(u128 a, u128 b, u128& hi, u128& lo) {
    u64 a0 = u64(a), a1 = u64(a >> 64);
    u64 b0 = u64(b), b1 = u64(b >> 64);
    u128 p00 = u128(a0) * b0;
    u128 p01 = u128(a0) * b1;
    u128 p10 = u128(a1) * b0;
    u128 p11 = u128(a1) * b1;
    u128 mid = p01 + (p00 >> 64);
    u128 carry1 = (mid < p01) ? (u128(1) << 64) : 0;
    u128 mid2 = mid + p10;
    u128 carry2 = (mid2 < mid) ? (u128(1) << 64) : 0;
    lo = (mid2 << 64) | u64(p00);
    hi = p11 + (mid2 >> 64) + carry1 + carry2;
}

inline u64 inv_pow2_u64(u64 n) {
    // Newton iteration: x_{k+1} = x_k (2 - n x_k) doubles correct bits.
    u64 x = n;  // 3 correct bits to start (n odd)
    for (int i = 0; i < 5; ++i) x *= 2 - n * x;
    return x;
}

inline u128 inv_pow2_u128(u128 n) {
    u128 x = inv_pow2_u64(u64(n));
    x *= 2 - n * x;  // lift 64 -> 128 bits
    return x;
}

}  // namespace

Mont64::Mont64(u64 n) : n_(n) {
    if (n % 2 == 0 || n >= (u64(1) << 63))
        throw std::domain_error("Mont64: modulus must be odd and < 2^63");
    ninv_ = ~inv_pow2_u64(n) + 1;  // -n^{-1} mod 2^64
    u64 r = (~u64(0)) % n + 1;     // 2^64 mod n
    r2_ = mulmod_u64(r, r, n);     // 2^128 mod n
    one_ = r;
}

u64 Mont64::pow(u64 base_mont, u64 e) const {
    u64 acc = one_, b = base_mont;
    while (e) {
        if (e & 1) acc = mul(acc, b);
        b = mul(b, b);
        e >>= 1;
    }
    return acc;
}

Mont128::Mont128(u128 n) : n_(n) {
    if (n % 2 == 0 || n >= (u128(1) << 127))
        throw std::domain_error("Mont128: modulus must be odd and < 2^127");
    ninv_ = u128(0) - inv_pow2_u128(n);  // -n^{-1} mod 2^128
    u128 r = (u128(0) - n) % n;          // 2^128 mod n
    one_ = r;
    // 2^256 mod n by 128 modular doublings of 2^128 mod n.
    u128 t = r;
    for (int i = 0; i < 128; ++i) {
        t += t;
        if (t >= n_) t -= n_;
    }
    r2_ = t;
}

u128 Mont128::mul(u128 a, u128 b) const {
    u128 hi, lo;
    mul_full_128(a, b, hi, lo);
    u128 m = lo * ninv_;
    u128 mn_hi, mn_lo;
    mul_full_128(m, n_, mn_hi, mn_lo);
    // (hi:lo + mn_hi:mn_lo) >> 128
    u128 lo_sum = lo + mn_lo;
    u128 carry = (lo_sum < lo) ? 1 : 0;
    u128 r = hi + mn_hi + carry;
    return r >= n_ ? r - n_ : r;
}

u128 Mont128::from(u128 x) const { return mul(x, 1); }

u128 Mont128::pow(u128 base_mont, u128 e) const {
    u128 acc = one_, b = base_mont;
    while (e) {
        if (e & 1) acc = mul(acc, b);
        b = mul(b, b);
        e >>= 1;
    }
    return acc;
}

u128 SlowMod128::pow(u128 base, u128 e) const {
    u128 acc = 1 % n_, b = base % n_;
    while (e) {
        if (e & 1) acc = mul(acc, b);
        b = mul(b, b);
        e >>= 1;
    }
    return acc;
}

u128 mulmod_u128(u128 a, u128 b, u128 m) {
    if (m <= ~u64(0)) return mulmod_u64(u64(a % m), u64(b % m), u64(m));
    u128 result = 0;
    a %= m;
    b %= m;
    while (b) {
        if (b & 1) {
            result += a;
            if (result >= m || result < a) result -= m;
        }
        u128 a2 = a + a;
        if (a2 >= m || a2 < a) a2 -= m;
        a = a2;
        b >>= 1;
    }
    return result;
}

u128 powmod_u128(u128 b, u128 e, u128 m) {
    u128 acc = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) acc = mulmod_u128(acc, b, m);
        b = mulmod_u128(b, b, m);
        e >>= 1;
    }
    return acc;
}

namespace {

template <class Mont, class U>
bool mr_witness(const Mont& M, U n, U a) {
    U d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    U am = M.to(a);
    if (am == 0) return true;  // a divisible by n
    U x = M.pow(am, d);
    U one = M.one();
    U minus1 = M.sub(0, one);
    if (x == one || x == minus1) return true;
    for (int i = 1; i < s; ++i) {
        x = M.mul(x, x);
        if (x == minus1) return true;
    }
    return false;
}

bool is_prime_u64_det(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < (u64(1) << 63)) {
        Mont64 M(n);
        for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
            if (!mr_witness(M, n, a)) return false;
        return true;
    }
    Mont128 M{u128(n)};
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (!mr_witness(M, u128(n), u128(a))) return false;
    return true;
}

}  // namespace

bool is_probable_prime(u64 n, u64, int) { return is_prime_u64_det(n); }

bool is_probable_prime(u128 n, u64 seed, int rounds) {
    if (n <= ~u64(0)) return is_prime_u64_det(u64(n));
    if ((n & 1) == 0) return false;
    SplitMix64 rng(seed ^ 0xC0FFEE ^ u64(n));
    if (n < (u128(1) << 127)) {
        Mont128 M(n);
        for (int i = 0; i < rounds; ++i) {
            u128 a = (u128(rng.next()) << 64 | rng.next()) % (n - 3) + 2;
            if (!mr_witness(M, n, a)) return false;
        }
        return true;
    }
    SlowMod128 M(n);
    for (int i = 0; i < rounds; ++i) {
        u128 a = (u128(rng.next()) << 64 | rng.next()) % (n - 3) + 2;
        if (!mr_witness(M, n, a)) return false;
    }
    return true;
}

bool is_probable_prime(const BigNat& n, u64 seed, int rounds) {
    if (n < 0) return false;
    if (fits_u128(n)) return is_probable_prime(to_u128(n), seed, rounds);
    if (n % 2 == 0) return false;
    // cpp_int fallback for oversized inputs.
    BigNat d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d >>= 1;
        ++s;
    }
    SplitMix64 rng(seed ^ 0xBEEF);
    for (int i = 0; i < rounds; ++i) {
        BigNat a = 2 + BigNat(rng.next()) % (n - 3);
        BigNat x = boost::multiprecision::powm(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int j = 1; j < s; ++j) {
            x = (x * x) % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace binpart
