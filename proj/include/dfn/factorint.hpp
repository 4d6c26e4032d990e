#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "dfn/sieves.hpp"

namespace dfn {

// Prime factorization n = p1^a1 * ... * ps^as, ascending by p.
struct Factorization {
    std::vector<std::pair<u64, u32>> factors;

    mpz_class value() const;
};

// Trial division over the table, with the early exit: once p^2 exceeds the
// remaining cofactor q, q is prime and is emitted directly.
// Requires 2 <= m <= (last prime)^2.
Factorization factorize(u64 m, const PrimeTable& table);

// Horner evaluation of sum coeffs[i] * x^i, exact.
mpz_class horner(const std::vector<mpz_class>& coeffs, const mpz_class& x);
mpq_class horner(const std::vector<mpz_class>& coeffs, const mpq_class& x);

// Coefficients of (x+1)(x+2)...(x+c), constant term first.
std::vector<mpz_class> prod_coeffs(u32 c);

// b^n mod m by repeated squaring over the base-2 digits of n; m >= 2.
mpz_class mod_pow(const mpz_class& b, const mpz_class& n, const mpz_class& m);

// Base-2 digits of n >= 1, least significant first, last digit 1.
std::vector<int> base2_digits(const mpz_class& n);

// Pollard-Strassen: smallest prime factor <= b of n via blocked factorial
// products f(kc) mod n and gcds; nullopt = Fail.
std::optional<u64> pollard_strassen(u64 n, u64 b);

// Pollard rho with f(x) = x^2 + c, Floyd cycle detection; nullopt = failure
// (another function must be chosen).
std::optional<u64> pollard_rho(u64 n, i64 c = 1, u64 x0 = 2);

enum class P1Gcd {
    standard,  // gcd(a-1, n)
    paper,     // gcd(n-1, a) as printed in the source program
};

// Pollard p-1 with bound B and base a; nullopt = failure.
std::optional<u64> pollard_p1(u64 n, u64 B, u64 a = 2, P1Gcd mode = P1Gcd::standard);

// Fermat's difference-of-squares; n odd. Primes exhaust to (1, n).
std::pair<u64, u64> fermat_factor(u64 n);

// Deterministic 64-bit primality (fixed Miller-Rabin base set).
bool is_prime_u64(u64 n);

// Full factorization of any u64 without a prime table: trial division for
// small factors, Pollard rho beyond.
Factorization factorize_u64(u64 n);

}  // namespace dfn
