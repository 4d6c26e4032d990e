#pragma once

#include <cmath>
#include <cstdint>

namespace dfn {

using u8 = std::uint8_t;
using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

inline u64 powmod(u64 b, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// Integer square root; exact, no float drift at perfect squares.
inline u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

inline bool is_square(u64 n, u64* root = nullptr) {
    u64 r = isqrt(n);
    if (root) *root = r;
    return r * r == n;
}

// min(b^e, cap+1); a result of cap+1 means "exceeded cap".
// For b >= 2 the loop exits within ~64 steps regardless of e.
inline u64 pow_clamped(u64 b, u64 e, u64 cap) {
    if (e == 0) return 1;
    if (b == 0) return 0;
    if (b == 1) return 1;
    u64 r = 1;
    for (u64 i = 0; i < e; ++i) {
        if (r > cap / b) return cap + 1;
        r *= b;
    }
    return r;
}

}  // namespace dfn
