#include "dfn/eta.hpp"

#include <algorithm>
#include <stdexcept>

namespace dfn {

GeneralizedBaseDigits generalized_base_digits(u64 p, u64 alpha) {
    GeneralizedBaseDigits g;
    g.p = p;
    // scale: a_i = 1 + p + ... + p^(i-1), largest a_nu <= alpha
    u64 a = 1;
    while (a <= alpha) {
        g.scale.push_back(a);
        if (a > (alpha - 1) / p) break;  // p*a + 1 would exceed alpha
        a = p * a + 1;
    }
    g.digits.assign(g.scale.size(), 0);
    u64 rem = alpha;
    for (size_t i = g.scale.size(); i-- > 0;) {
        g.digits[i] = rem / g.scale[i];
        rem %= g.scale[i];
    }
    return g;
}

u64 eta_prime_power(u64 p, u64 alpha) {
    if (alpha == 0) throw std::domain_error("eta_prime_power: alpha must be >= 1");
    if (alpha == 1) return p;
    auto g = generalized_base_digits(p, alpha);
    // read the digit string in plain base p
    u64 read = 0, sum = 0;
    for (size_t i = g.digits.size(); i-- > 0;) {
        read = read * p + g.digits[i];
        sum += g.digits[i];
    }
    u64 by_read = p * read;
    u64 by_sum = (p - 1) * alpha + sum;
    if (by_read != by_sum) throw std::logic_error("eta_prime_power: dual formulas disagree");
    return by_read;
}

u64 eta(u64 n, const PrimeTable& table) {
    if (n < 1) throw std::domain_error("eta: n must be >= 1");
    if (n == 1) return 1;
    return eta_factored(factorize(n, table));
}

u64 eta_factored(const Factorization& f) {
    if (f.factors.empty()) throw std::domain_error("eta_factored: empty factorization");
    u64 best = 0;
    for (auto [p, a] : f.factors) best = std::max(best, eta_prime_power(p, a));
    return best;
}

ValueTable eta_table(u64 N) {
    if (N < 1) throw std::domain_error("eta_table: N must be >= 1");
    // smallest-prime-factor sieve
    std::vector<u32> spf(N + 1, 0);
    for (u64 i = 2; i <= N; ++i) {
        if (spf[i] == 0)
            for (u64 j = i; j <= N; j += i)
                if (spf[j] == 0) spf[j] = u32(i);
    }
    ValueTable t{Fn::eta, N, std::vector<u64>(N + 1, 0)};
    t.v[1] = 1;
    for (u64 n = 2; n <= N; ++n) {
        u64 m = n, best = 0;
        while (m > 1) {
            u64 p = spf[m], a = 0;
            while (m % p == 0) {
                m /= p;
                ++a;
            }
            best = std::max(best, a == 1 ? p : eta_prime_power(p, a));
        }
        t.v[n] = best;
    }
    return t;
}

std::map<u64, std::vector<u64>> eta_inverse_rows(u64 N, const ValueTable& t) {
    if (N < 2) throw std::domain_error("eta_inverse_rows: N must be >= 2");
    if (N > t.n) throw std::out_of_range("eta_inverse_rows: N exceeds the table");
    std::map<u64, std::vector<u64>> rows;
    for (u64 n = 2; n <= N; ++n) rows[t[n]].push_back(n);
    return rows;
}

namespace {

// exponent of p in n! (Legendre)
u64 legendre(u64 n, u64 p) {
    u64 e = 0;
    while (n) {
        n /= p;
        e += n;
    }
    return e;
}

}  // namespace

u64 smallest_inverse(u64 n) {
    if (n < 2) throw std::domain_error("smallest_inverse: n must be >= 2");
    u64 best = 0;
    u64 m = n;
    for (u64 p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            u64 cand = 1, e = legendre(n - 1, p) + 1;
            for (u64 i = 0; i < e; ++i) cand *= p;
            if (best == 0 || cand < best) best = cand;
        }
    }
    if (m > 1) {
        u64 p = m, cand = 1, e = legendre(n - 1, p) + 1;
        for (u64 i = 0; i < e; ++i) cand *= p;
        if (best == 0 || cand < best) best = cand;
    }
    return best;
}

u64 inverse_count(u32 k) {
    if (k < 2) throw std::domain_error("inverse_count: k must be >= 2");
    if (k > 20) throw std::out_of_range("inverse_count: k limited to <= 20");
    auto sigma0_of_factorial = [](u64 n) {
        // product of (e_p + 1) over primes p <= n, exponents by Legendre
        u64 count = 1;
        for (u64 p = 2; p <= n; ++p) {
            bool prime = true;
            for (u64 d = 2; d * d <= p; ++d)
                if (p % d == 0) {
                    prime = false;
                    break;
                }
            if (prime) count *= legendre(n, p) + 1;
        }
        return count;
    };
    return sigma0_of_factorial(k) - sigma0_of_factorial(k - 1);
}

u64 pi_via_eta(u64 n, const ValueTable& t) {
    if (n < 1 || n > t.n) throw std::out_of_range("pi_via_eta: n outside the table");
    if (n == 1) return 0;
    if (n == 2) return 1;
    if (n == 3) return 2;
    u64 sum = 0;
    for (u64 k = 2; k <= n; ++k) sum += t[k] / k;
    return sum - 1;
}

}  // namespace dfn
