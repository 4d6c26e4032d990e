// Naive reference implementations the tests check the real code against.
// Everything here is deliberately brute force and independent of the library
// algorithms (definition-level loops only).
#pragma once

#include <gmpxx.h>

#include <numeric>
#include <vector>

#include "dfn/ints.hpp"

namespace oracle {

using dfn::u32;
using dfn::u64;

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<u64> primes_upto(u64 limit) {
    std::vector<u64> p;
    for (u64 n = 2; n <= limit; ++n)
        if (is_prime(n)) p.push_back(n);
    return p;
}

inline u64 pi(u64 x) {
    u64 c = 0;
    for (u64 n = 2; n <= x; ++n)
        if (is_prime(n)) ++c;
    return c;
}

// least m with n | m!, by incremental factorial mod n
inline u64 eta(u64 n) {
    if (n == 1) return 1;
    u64 f = 1 % n;
    for (u64 m = 1;; ++m) {
        f = dfn::mulmod(f, m % n, n);
        if (f == 0) return m;
    }
}

inline mpz_class sigma_k(u32 k, u64 n) {
    mpz_class s = 0;
    for (u64 d = 1; d <= n; ++d)
        if (n % d == 0) {
            mpz_class dp;
            mpz_ui_pow_ui(dp.get_mpz_t(), d, k);
            s += dp;
        }
    return s;
}

inline u64 phi(u64 n) {
    if (n == 0) return 1;
    u64 c = 0;
    for (u64 r = 1; r <= n; ++r)
        if (std::gcd(r, n) == 1) ++c;
    return c;
}

inline std::vector<mpz_class> poly_expand_roots(const std::vector<long>& roots) {
    // coefficients of prod (x - r), constant first
    std::vector<mpz_class> c{1};
    for (long r : roots) {
        std::vector<mpz_class> next(c.size() + 1, 0);
        for (size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = next;
    }
    return c;
}

}  // namespace oracle
