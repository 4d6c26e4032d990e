#include "dfn/congruence.hpp"

#include <numeric>
#include <stdexcept>

#include "dfn/arithfun.hpp"
#include "dfn/factorint.hpp"

namespace dfn {

EulerGenPair euler_gen(u64 a, u64 m) {
    if (a < 1 || m < 1) throw std::domain_error("euler_gen: a, m must be >= 1");
    u64 s = 0, ms = m;
    u64 d = std::gcd(a, ms);
    while (d != 1) {
        ++s;
        ms /= d;
        d = std::gcd(d, ms);
    }
    return {s, ms};
}

bool verify_euler_gen(u64 a, u64 m) {
    auto [s, ms] = euler_gen(a, m);
    u64 e = phi(ms) + s;
    return powmod(a % m, e, m) == powmod(a % m, s, m);
}

std::vector<u64> coprime_residues(u64 m) {
    if (m < 1) throw std::domain_error("coprime_residues: m must be >= 1");
    std::vector<u64> r;
    for (u64 i = 1; i <= m; ++i)
        if (std::gcd(i, m) == 1) r.push_back(i);
    return r;
}

bool in_set_A(i64 m) {
    u64 n = m < 0 ? u64(-m) : u64(m);
    if (n == 0 || n == 1 || n == 2 || n == 4) return true;
    if (n % 2 == 0) n /= 2;       // +-2p^b
    if (n % 2 == 0) return false;  // two factors of 2 left
    if (n == 1) return false;      // bare +-2 handled above
    // n must now be an odd prime power
    for (u64 p = 3; p * p <= n; p += 2)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            return n == 1;
        }
    return true;  // n itself an odd prime
}

u64 gauss_product(u64 m) {
    if (m < 1) throw std::domain_error("gauss_product: m must be >= 1");
    u64 prod = 1 % m;  // m = 1: the empty-width product reduces to 0
    for (u64 i = 1; i <= m; ++i)
        if (std::gcd(i, m) == 1) prod = mulmod(prod, i, m);
    return prod;
}

u64 L_func(i64 x, u64 m) {
    if (m < 1) throw std::domain_error("L_func: m must be >= 1");
    i64 xm = x % i64(m);
    if (xm < 0) xm += i64(m);
    u64 prod = 1 % m;
    for (u64 c = 1; c <= m; ++c)
        if (std::gcd(c, m) == 1) prod = mulmod(prod, (u64(xm) + c) % m, m);
    return prod;
}

}  // namespace dfn
