#include "dfn/arithfun.hpp"

#include <stdexcept>

#include "dfn/eta.hpp"

namespace dfn {

namespace {

// trial-division factorization for scalar helpers (no table needed)
std::vector<std::pair<u64, u32>> tiny_factorize(u64 n) {
    std::vector<std::pair<u64, u32>> f;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            u32 a = 0;
            while (n % p == 0) {
                n /= p;
                ++a;
            }
            f.emplace_back(p, a);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

u64 sigma1_u64(u64 n) {
    u64 s = 1;
    for (auto [p, a] : tiny_factorize(n)) {
        u64 term = 1, pw = 1;
        for (u32 i = 0; i < a; ++i) {
            pw *= p;
            term += pw;
        }
        s *= term;
    }
    return s;
}

}  // namespace

mpz_class sigma_k(u32 k, u64 n, const PrimeTable& table) {
    if (n < 1) throw std::domain_error("sigma_k: n must be >= 1");
    if (n == 1) return 1;
    auto f = factorize(n, table);
    mpz_class result = 1;
    for (auto [p, a] : f.factors) {
        if (k == 0) {
            result *= a + 1;
        } else {
            mpz_class pk, num;
            mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
            mpz_ui_pow_ui(num.get_mpz_t(), p, u64(a + 1) * k);
            result *= (num - 1) / (pk - 1);
        }
    }
    return result;
}

u64 s_val(u64 n) {
    if (n < 1) throw std::domain_error("s_val: n must be >= 1");
    if (n == 1) return 0;
    return sigma1_u64(n) - n;
}

u64 phi(u64 n) {
    if (n == 0) return 1;
    u64 r = n;
    for (auto [p, a] : tiny_factorize(n)) {
        (void)a;
        r -= r / p;
    }
    return r;
}

std::optional<u64> hyperperfect_k(u64 n) {
    if (n < 2) throw std::domain_error("hyperperfect_k: n must be >= 2");
    u64 s = s_val(n);
    if (s < 2) return std::nullopt;  // primes and 1 have s <= 1
    if ((n - 1) % (s - 1) != 0) return std::nullopt;
    return (n - 1) / (s - 1);
}

ValueTable gen_table(Fn fn, u64 N) {
    if (N < 1) throw std::domain_error("gen_table: N must be >= 1");
    if (fn == Fn::eta) return eta_table(N);

    std::vector<u32> spf(N + 1, 0);
    for (u64 i = 2; i <= N; ++i)
        if (spf[i] == 0)
            for (u64 j = i; j <= N; j += i)
                if (spf[j] == 0) spf[j] = u32(i);

    ValueTable t{fn, N, std::vector<u64>(N + 1, 0)};
    t.v[1] = (fn == Fn::s) ? 0 : 1;
    for (u64 n = 2; n <= N; ++n) {
        u64 m = n, val = 1;
        while (m > 1) {
            u64 p = spf[m];
            u32 a = 0;
            while (m % p == 0) {
                m /= p;
                ++a;
            }
            switch (fn) {
                case Fn::sigma0: val *= a + 1; break;
                case Fn::sigma1:
                case Fn::s: {
                    u64 term = 1, pw = 1;
                    for (u32 i = 0; i < a; ++i) {
                        pw *= p;
                        term += pw;
                    }
                    val *= term;
                    break;
                }
                case Fn::sigma2: {
                    u64 term = 1, pw = 1;
                    for (u32 i = 0; i < a; ++i) {
                        pw *= p * p;
                        term += pw;
                    }
                    val *= term;
                    break;
                }
                case Fn::phi: {
                    u64 pw = 1;
                    for (u32 i = 0; i + 1 < a; ++i) pw *= p;
                    val *= pw * (p - 1);
                    break;
                }
                case Fn::eta: break;  // handled above
            }
        }
        t.v[n] = (fn == Fn::s) ? val - n : val;
    }
    return t;
}

std::string_view to_string(Fn f) {
    switch (f) {
        case Fn::eta: return "eta";
        case Fn::sigma0: return "sigma0";
        case Fn::sigma1: return "sigma1";
        case Fn::sigma2: return "sigma2";
        case Fn::s: return "s";
        case Fn::phi: return "phi";
    }
    return "?";
}

std::optional<Fn> fn_from_string(std::string_view s) {
    for (auto f : {Fn::eta, Fn::sigma0, Fn::sigma1, Fn::sigma2, Fn::s, Fn::phi})
        if (to_string(f) == s) return f;
    return std::nullopt;
}

}  // namespace dfn
