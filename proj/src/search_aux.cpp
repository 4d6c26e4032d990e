#include <algorithm>

#include "dfn/factorint.hpp"
#include "dfn/search.hpp"

namespace dfn {

// 4/n = 1/x + 1/y + 1/z with x <= y <= z <= cap, by exact fraction arithmetic:
// after fixing x and y, z must equal n*x*y / (4*x*y - n*y - n*x).
std::vector<std::array<u64, 3>> erdos_straus(u64 n, u64 cap) {
    if (n < 2) throw std::domain_error("erdos_straus: n must be >= 2");
    std::vector<std::array<u64, 3>> out;
    // 1/x < 4/n <= 3/x  =>  n/4 < x <= 3n/4
    for (u64 x = n / 4 + 1; 4 * x <= 3 * n; ++x) {
        // residue r = 4/n - 1/x = (4x - n)/(nx); then 1/y < r <= 2/y
        u64 rn = 4 * x - n, rd = n * x;
        if (rn == 0) continue;
        for (u64 y = std::max(x, rd / rn + (rd % rn != 0)); rn * y <= 2 * rd; ++y) {
            // 1/z = r - 1/y = (rn*y - rd)/(rd*y)
            u64 zn = rn * y - rd;
            if (zn == 0) continue;
            u64 zd = rd * y;
            if (zd % zn != 0) continue;
            u64 z = zd / zn;
            if (z >= y && z <= cap) out.push_back({x, y, z});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool has_229_property(u64 p) {
    u64 rev = 0, m = p;
    while (m) {
        rev = rev * 10 + m % 10;
        m /= 10;
    }
    return is_prime_u64(p + rev);
}

std::vector<u64> narcissistic(u64 base, u32 length) {
    if (base < 2) throw std::domain_error("narcissistic: base must be >= 2");
    if (length < 1) throw std::domain_error("narcissistic: length must be >= 1");
    std::vector<u64> out;
    // digit powers d^length
    std::vector<u64> pw(base);
    for (u64 d = 0; d < base; ++d) {
        u64 p = 1;
        for (u32 i = 0; i < length; ++i) p *= d;
        pw[d] = p;
    }
    u64 lo = 1;
    for (u32 i = 1; i < length; ++i) lo *= base;  // smallest length-digit number
    u64 hi = lo * base;                           // one past the largest
    std::vector<u64> digits(length);
    for (u64 v = lo; v < hi; ++v) {
        u64 m = v, sum = 0;
        while (m) {
            sum += pw[m % base];
            m /= base;
        }
        if (sum == v) out.push_back(v);
    }
    return out;
}

}  // namespace dfn
