#pragma once

#include <map>

#include "dfn/factorint.hpp"
#include "dfn/value_table.hpp"

namespace dfn {

// alpha written in the generalized base of p: place values a_i = (p^i-1)/(p-1).
struct GeneralizedBaseDigits {
    u64 p;
    std::vector<u64> digits;  // kappa, least significant first
    std::vector<u64> scale;   // a_1..a_nu
};

GeneralizedBaseDigits generalized_base_digits(u64 p, u64 alpha);

// Kempner: eta(p^alpha) = p * (digits of alpha in base [p], read in base p).
// Also equals (p-1)*alpha + digit sum; both are computed and must agree.
u64 eta_prime_power(u64 p, u64 alpha);

// Smallest m with n | m!. eta(1) = 1.
u64 eta(u64 n, const PrimeTable& table);

// Same from a ready factorization; the product is never materialized.
u64 eta_factored(const Factorization& f);

// Dense eta(1..N) via a smallest-prime-factor sieve.
ValueTable eta_table(u64 N);

// Rows k -> all n <= N with eta(n) = k, for 2 <= k <= max eta.
std::map<u64, std::vector<u64>> eta_inverse_rows(u64 N, const ValueTable& t);

// Least m with eta(m) = n, by Wilson's minimum over primes dividing n.
u64 smallest_inverse(u64 n);

// Number of n with eta(n) = k: sigma0(k!) - sigma0((k-1)!), from Legendre
// exponent vectors; k limited to [2, 20].
u64 inverse_count(u32 k);

// pi(n) from the eta summation formula; n within the table.
u64 pi_via_eta(u64 n, const ValueTable& t);

}  // namespace dfn
