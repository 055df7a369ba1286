#include "binpart/bignat.hpp"

#include <cmath>

namespace binpart {

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

u128 isqrt_u128(u128 n) {
    if (n <= ~u64(0)) return isqrt_u64(static_cast<u64>(n));
    // Seed from the top 64 bits, then one Newton step and a correction walk.
    int shift = 0;
    u128 t = n;
    while (t > ~u64(0)) {
        t >>= 2;
        shift += 1;
    }
    u128 r = u128(isqrt_u64(static_cast<u64>(t))) << shift;
    for (int i = 0; i < 4; ++i) r = (r + n / r) / 2;
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

BigNat isqrt_big(const BigNat& n) {
    if (n < 0) throw std::domain_error("isqrt_big: negative input");
    return boost::multiprecision::sqrt(n);
}

namespace {
struct SquareTables {
    bool mod64[64] = {};
    bool mod63[63] = {};
    bool mod65[65] = {};
    SquareTables() {
        for (int i = 0; i < 64; ++i) mod64[(i * i) & 63] = true;
        for (int i = 0; i < 63; ++i) mod63[(i * i) % 63] = true;
        for (int i = 0; i < 65; ++i) mod65[(i * i) % 65] = true;
    }
};
const SquareTables kSq;
}  // namespace

bool is_square_u64(u64 n) {
    if (!kSq.mod64[n & 63]) return false;
    if (!kSq.mod63[n % 63]) return false;
    if (!kSq.mod65[n % 65]) return false;
    u64 r = isqrt_u64(n);
    return r * r == n;
}

bool is_square_u128(u128 n) {
    if (n <= ~u64(0)) return is_square_u64(static_cast<u64>(n));
    if (!kSq.mod64[static_cast<unsigned>(n & 63)]) return false;
    if (!kSq.mod63[static_cast<unsigned>(n % 63)]) return false;
    if (!kSq.mod65[static_cast<unsigned>(n % 65)]) return false;
    u128 r = isqrt_u128(n);
    return r * r == n;
}

u64 iroot4_u128(u128 n) {
    u64 r = isqrt_u64(static_cast<u64>(isqrt_u128(n)));
    auto p4 = [](u128 x) { return x * x * x * x; };
    while (r > 0 && p4(r) > n) --r;
    while (p4(u128(r) + 1) <= n) ++r;
    return r;
}

}  // namespace binpart
