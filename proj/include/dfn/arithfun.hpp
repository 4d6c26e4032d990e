#pragma once

#include <gmpxx.h>

#include <optional>

#include "dfn/sieves.hpp"
#include "dfn/value_table.hpp"

namespace dfn {

// Sum of k-th powers of the divisors of n, exact.
mpz_class sigma_k(u32 k, u64 n, const PrimeTable& table);

// Sum of proper divisors: sigma(n) - n.
u64 s_val(u64 n);

// Euler totient; phi(0) = 1 by convention.
u64 phi(u64 n);

// The unique k >= 1 with k*sigma(n) = (k+1)*n + k - 1, if any.
std::optional<u64> hyperperfect_k(u64 n);

// Dense table of f(1..N) for f in {eta, sigma0, sigma1, sigma2, s, phi},
// built by a smallest-prime-factor sieve.
ValueTable gen_table(Fn fn, u64 N);

}  // namespace dfn
