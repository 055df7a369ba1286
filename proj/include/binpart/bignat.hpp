#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace binpart {

// Arbitrary-precision non-negative integer. Signed carrier type; every
// public operation in this library keeps its values >= 0.
using BigNat = boost::multiprecision::cpp_int;

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;

inline bool fits_u64(const BigNat& n) { return n >= 0 && n <= BigNat(~u64(0)); }

inline bool fits_u128(const BigNat& n) {
    static const BigNat max = (BigNat(1) << 128) - 1;
    return n >= 0 && n <= max;
}

inline u64 to_u64(const BigNat& n) { return static_cast<u64>(n); }

inline u128 to_u128(const BigNat& n) {
    u128 hi = static_cast<u64>(n >> 64);
    u128 lo = static_cast<u64>(n & BigNat(~u64(0)));
    return (hi << 64) | lo;
}

inline BigNat from_u128(u128 v) {
    BigNat n = static_cast<u64>(v >> 64);
    n <<= 64;
    n |= static_cast<u64>(v);
    return n;
}

std::string u128_to_string(u128 v);

// Floor square root. Input must be non-negative.
u64 isqrt_u64(u64 n);
u128 isqrt_u128(u128 n);
BigNat isqrt_big(const BigNat& n);

bool is_square_u64(u64 n);
bool is_square_u128(u128 n);

// Floor fourth root.
u64 iroot4_u128(u128 n);

// Thrown when a stream or campaign exceeds its configured memory budget.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct StreamBudget {
    u64 max_exact = u64(1) << 22;
    u64 max_modular = u64(1) << 26;
};

inline const StreamBudget& default_budget() {
    static const StreamBudget b{};
    return b;
}

}  // namespace binpart
