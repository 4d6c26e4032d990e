#include "dfn/factorint.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dfn {

mpz_class Factorization::value() const {
    mpz_class v = 1;
    mpz_class pw;
    for (auto [p, a] : factors) {
        mpz_ui_pow_ui(pw.get_mpz_t(), p, a);
        v *= pw;
    }
    return v;
}

Factorization factorize(u64 m, const PrimeTable& table) {
    if (m < 2) throw std::domain_error("factorize: m must be >= 2");
    u64 p_last = table.primes.back();
    if (p_last < u64(1) << 32 && m > p_last * p_last)
        throw std::domain_error("factorize: m exceeds (last prime)^2 of the table");

    Factorization f;
    for (u64 p : table.primes) {
        if (p > m / p) break;  // remaining m is prime
        if (m % p == 0) {
            u32 a = 0;
            while (m % p == 0) {
                m /= p;
                ++a;
            }
            f.factors.emplace_back(p, a);
        }
    }
    if (m > 1) f.factors.emplace_back(m, 1);
    return f;
}

mpz_class horner(const std::vector<mpz_class>& coeffs, const mpz_class& x) {
    if (coeffs.empty()) throw std::domain_error("horner: empty coefficient vector");
    mpz_class f = coeffs.back();
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) f = f * x + *it;
    return f;
}

mpq_class horner(const std::vector<mpz_class>& coeffs, const mpq_class& x) {
    if (coeffs.empty()) throw std::domain_error("horner: empty coefficient vector");
    mpq_class f(coeffs.back());
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) f = f * x + mpq_class(*it);
    return f;
}

std::vector<mpz_class> prod_coeffs(u32 c) {
    if (c < 1) throw std::domain_error("prod_coeffs: c must be >= 1");
    std::vector<mpz_class> v{1, 1};  // x + 1
    for (u32 k = 2; k <= c; ++k) {
        std::vector<mpz_class> w(v.size() + 1);
        for (size_t i = 0; i < v.size(); ++i) {
            w[i + 1] += v[i];
            w[i] += i64(k) * v[i];
        }
        v = std::move(w);
    }
    return v;
}

mpz_class mod_pow(const mpz_class& b, const mpz_class& n, const mpz_class& m) {
    if (m < 2) throw std::domain_error("mod_pow: modulus must be >= 2");
    if (n == 0) return 1;
    auto digits = base2_digits(n);
    mpz_class A = b % m;
    if (A < 0) A += m;
    mpz_class N = digits[0] ? A : mpz_class(1);
    for (size_t k = 1; k < digits.size(); ++k) {
        A = A * A % m;
        if (digits[k]) N = A * N % m;
    }
    return N;
}

std::vector<int> base2_digits(const mpz_class& n) {
    if (n < 1) throw std::domain_error("base2_digits: n must be >= 1");
    std::vector<int> d;
    mpz_class c = n;
    while (c > 0) {
        d.push_back(mpz_odd_p(c.get_mpz_t()) ? 1 : 0);
        c >>= 1;
    }
    return d;
}

std::optional<u64> pollard_strassen(u64 n, u64 b) {
    u64 c = isqrt(b);
    if (c * c < b) ++c;  // ceil
    auto C = prod_coeffs(u32(c));
    std::vector<u64> a(C.size());
    mpz_class nz(static_cast<unsigned long>(n));
    for (size_t k = 0; k < C.size(); ++k) {
        mpz_class r = C[k] % nz;
        a[k] = r.get_ui();
    }
    for (u64 k = 0; k + 1 <= c; ++k) {
        u64 x = (k * c) % n;
        // Horner over the reduced coefficients, mod n
        u64 g = a.back();
        for (size_t i = a.size() - 1; i-- > 0;) g = u64((u128(mulmod(g, x, n)) + a[i]) % n);
        u64 d = std::gcd(g, n);
        if (d > 1) return d;
    }
    return std::nullopt;
}

std::optional<u64> pollard_rho(u64 n, i64 c, u64 x0) {
    auto f = [&](u64 x) {
        u64 v = mulmod(x, x, n);
        i64 w = i64(v) + c;  // c is small; n below 2^62 in practice
        w %= i64(n);
        if (w < 0) w += i64(n);
        return u64(w);
    };
    u64 a = x0, b = x0;
    while (true) {
        a = f(a);
        b = f(f(b));
        u64 d = std::gcd(a > b ? a - b : b - a, n);
        if (d > 1 && d < n) return d;
        if (d == n) return std::nullopt;
    }
}

std::optional<u64> pollard_p1(u64 n, u64 B, u64 a, P1Gcd mode) {
    u64 d = std::gcd(a, n);
    if (d >= 2) return d;
    auto primes = sieve(std::max<u64>(B, 2)).primes;
    for (u64 q : primes) {
        if (q > B) break;
        u64 ql = q;
        while (ql <= n / q) ql *= q;  // largest q^l <= n
        a = powmod(a, ql, n);
    }
    d = mode == P1Gcd::paper ? std::gcd(n - 1, a) : std::gcd(a - 1, n);
    if (d == 1 || d == n) return std::nullopt;
    return d;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Factorization factorize_u64(u64 n) {
    if (n < 2) throw std::domain_error("factorize_u64: n must be >= 2");
    std::vector<u64> stack{}, primes{};
    u64 m = n;
    for (u64 p = 2; p < 100000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
        while (m % p == 0) {
            primes.push_back(p);
            m /= p;
        }
    }
    if (m > 1) stack.push_back(m);
    while (!stack.empty()) {
        u64 v = stack.back();
        stack.pop_back();
        if (is_prime_u64(v)) {
            primes.push_back(v);
            continue;
        }
        u64 root;
        if (is_square(v, &root)) {
            stack.push_back(root);
            stack.push_back(root);
            continue;
        }
        std::optional<u64> d;
        for (i64 c = 1; !d; ++c) d = pollard_rho(v, c);
        stack.push_back(*d);
        stack.push_back(v / *d);
    }
    std::sort(primes.begin(), primes.end());
    Factorization f;
    for (size_t i = 0; i < primes.size();) {
        size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        f.factors.emplace_back(primes[i], u32(j - i));
        i = j;
    }
    return f;
}

std::pair<u64, u64> fermat_factor(u64 n) {
    if (n % 2 == 0) throw std::domain_error("fermat_factor: n must be odd");
    u64 x = isqrt(n);
    if (x * x < n) ++x;
    for (; x <= (n + 1) / 2; ++x) {
        u64 y2 = x * x - n;
        u64 y;
        if (is_square(y2, &y)) return {x - y, x + y};
    }
    return {1, n};
}

}  // namespace dfn
