#include "dfn/primality.hpp"

#include <random>

namespace dfn {

Verdict tp_eta(u64 n, const ValueTable& eta) {
    if (n < 1 || n > eta.n) return Verdict::invalid;
    if (n > 4) return eta[n] == n ? Verdict::prime : Verdict::composite;
    if (n == 1 || n == 4) return Verdict::composite;
    return Verdict::prime;
}

namespace {

// (hi)! mod p starting from lo! given as acc
u64 factorial_mod(u64 hi, u64 p) {
    u64 acc = 1 % p;
    for (u64 i = 2; i <= hi; ++i) acc = mulmod(acc, i % p, p);
    return acc;
}

}  // namespace

Verdict csp(int variant, u64 p) {
    switch (variant) {
        case 1: {
            if (p < 3) return Verdict::invalid;
            if (p % 2 == 0) return Verdict::composite;  // (p-1)/2 not an integer
            u64 lhs = factorial_mod(p - 3, p);
            return lhs == (p - 1) / 2 % p ? Verdict::prime : Verdict::composite;
        }
        case 2: {
            if (p < 5) return Verdict::invalid;
            u64 m = p / 3 + 1, n = (p + 1) / 6;
            u64 lhs = factorial_mod(p - 4, p);
            u64 rhs = (m % 2 == 0) ? n % p : (p - n % p) % p;
            return lhs == rhs ? Verdict::prime : Verdict::composite;
        }
        case 3: {
            if (p < 5) return Verdict::invalid;
            u64 h = p / 24, r = p - 24 * h;
            if (r == 0 || (r * r - 1) % 24 != 0) return Verdict::composite;  // fractional rhs
            u64 lhs = factorial_mod(p - 5, p);
            u64 rhs = (mulmod(r % p, h % p, p) + (r * r - 1) / 24) % p;
            return lhs == rhs ? Verdict::prime : Verdict::composite;
        }
        case 4: {
            if (p < 2) return Verdict::invalid;
            if (p == 2) return Verdict::prime;
            u64 h = 0, k = 0, fact = 2;  // fact = (j-1)!
            for (u64 j = 3; fact <= p + 1; ++j) {
                if ((p + 1) % fact == 0) {
                    h = (p + 1) / fact;
                    k = j;
                }
                if (fact > (p + 1) / j) break;  // next factorial exceeds p+1
                fact *= j;
            }
            if (h == 0) return Verdict::composite;
            u64 lhs = factorial_mod(p - k, p);
            u64 sign = (k + p / h + 1) % 2;  // 1 -> negative
            u64 rhs = sign ? (p - h % p) % p : h % p;
            return lhs == rhs ? Verdict::prime : Verdict::composite;
        }
        default: return Verdict::invalid;
    }
}

Verdict miller_rabin(const mpz_class& n, u32 rounds, u64 seed) {
    if (n < 3 || mpz_even_p(n.get_mpz_t())) return Verdict::invalid;
    if (n == 3) return Verdict::prime;  // no base fits in [3, sqrt(n)]
    mpz_class t = n - 1;
    u64 s = 0;
    while (mpz_even_p(t.get_mpz_t())) {
        t >>= 1;
        ++s;
    }
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    mpz_class lambda_z = root / 2;
    u64 lambda = lambda_z.fits_ulong_p() ? std::max<u64>(lambda_z.get_ui(), 1) : u64(1) << 62;

    std::mt19937_64 rng(seed);
    mpz_class nm1 = n - 1;
    for (u32 round = 0; round < rounds; ++round) {
        mpz_class b = 3 + 2 * mpz_class(static_cast<unsigned long>(rng() % lambda));
        mpz_class y;
        mpz_powm(y.get_mpz_t(), b.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        if (y == 1 || y == nm1) continue;
        u64 j = 1;
        while (j <= s - 1 && y != nm1) {
            y = y * y % n;
            if (y == 1) return Verdict::composite;
            ++j;
        }
        if (y != nm1) return Verdict::composite;
    }
    return Verdict::prime;
}

std::pair<mpz_class, Verdict> lucas_lehmer(u32 n) {
    if (n < 3) return {0, Verdict::invalid};
    for (u32 d = 2; u64(d) * d <= n; ++d)
        if (n % d == 0) return {0, Verdict::invalid};  // exponent must be prime
    mpz_class M = (mpz_class(1) << n) - 1;
    mpz_class s = 4;
    for (u32 k = 0; k + 2 < n; ++k) s = (s * s - 2) % M;
    return {M, s == 0 ? Verdict::prime : Verdict::composite};
}

}  // namespace dfn
