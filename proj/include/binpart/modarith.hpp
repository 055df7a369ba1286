#pragma once

#include "binpart/bignat.hpp"

#include <cstdint>
#include <numeric>

namespace binpart {

// splitmix64; the deterministic randomness source for factorization and
// property-test generators.
struct SplitMix64 {
    u64 state;
    explicit SplitMix64(u64 seed) : state(seed) {}
    u64 next() {
        u64 z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

inline u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }
u128 gcd_u128(u128 a, u128 b);

// Montgomery arithmetic for odd moduli < 2^63.
class Mont64 {
public:
    explicit Mont64(u64 n);
    u64 n() const { return n_; }
    u64 to(u64 x) const { return mul(x % n_, r2_); }
    u64 from(u64 x) const { return reduce(x); }
    u64 one() const { return one_; }
    u64 mul(u64 a, u64 b) const {
        u128 t = u128(a) * b;
        u64 m = u64(t) * ninv_;
        u64 r = u64((t + u128(m) * n_) >> 64);
        return r >= n_ ? r - n_ : r;
    }
    u64 add(u64 a, u64 b) const {
        u64 r = a + b;
        return r >= n_ ? r - n_ : r;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + n_ - b; }
    u64 pow(u64 base_mont, u64 e) const;

private:
    u64 reduce(u64 a) const {
        u64 m = a * ninv_;
        u64 r = u64((u128(a) + u128(m) * n_) >> 64);
        return r >= n_ ? r - n_ : r;
    }
    u64 n_, ninv_, r2_, one_;
};

// Montgomery arithmetic for odd moduli < 2^127.
class Mont128 {
public:
    explicit Mont128(u128 n);
    u128 n() const { return n_; }
    u128 to(u128 x) const { return mul(x % n_, r2_); }
    u128 from(u128 x) const;
    u128 one() const { return one_; }
    u128 mul(u128 a, u128 b) const;
    u128 add(u128 a, u128 b) const {
        u128 r = a + b;
        return r >= n_ ? r - n_ : r;
    }
    u128 sub(u128 a, u128 b) const { return a >= b ? a - b : a + n_ - b; }
    u128 pow(u128 base_mont, u128 e) const;

private:
    u128 n_, ninv_, r2_, one_;
};

u64 mulmod_u64(u64 a, u64 b, u64 m);
u128 mulmod_u128(u128 a, u128 b, u128 m);  // reference implementation, slow path
u128 powmod_u128(u128 b, u128 e, u128 m);

// Plain modular arithmetic for odd moduli in [2^127, 2^128); same interface
// as the Montgomery classes so the factorization loops can share code.
class SlowMod128 {
public:
    explicit SlowMod128(u128 n) : n_(n) {}
    u128 n() const { return n_; }
    u128 to(u128 x) const { return x % n_; }
    u128 from(u128 x) const { return x; }
    u128 one() const { return 1; }
    u128 mul(u128 a, u128 b) const { return mulmod_u128(a, b, n_); }
    u128 add(u128 a, u128 b) const {
        u128 r = a + b;
        if (r < a || r >= n_) r -= n_;
        return r;
    }
    u128 sub(u128 a, u128 b) const { return a >= b ? a - b : a + (n_ - b); }
    u128 pow(u128 base, u128 e) const;

private:
    u128 n_;
};

// Deterministic Miller-Rabin below 2^64; 40 seeded rounds above.
bool is_probable_prime(u64 n, u64 seed = 0, int rounds = 40);
bool is_probable_prime(u128 n, u64 seed = 0, int rounds = 40);
bool is_probable_prime(const BigNat& n, u64 seed = 0, int rounds = 40);

}  // namespace binpart
