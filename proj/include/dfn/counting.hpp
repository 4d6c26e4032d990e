#pragma once

#include "dfn/sieves.hpp"

namespace dfn {

struct PiBounds {
    u64 lower;  // pi_m(n), strictly below pi(n) for odd n >= 3
    u64 upper;  // pi_M(n), strictly above pi(n)
};

// Number of primes <= x, by binary search on the table.
u64 pi_count(u64 x, const PrimeTable& table);

// Rosser-Schoenfeld-derived piecewise bounds; n >= 3 required, guaranteed
// strict for odd n.
PiBounds pi_bounds(u64 n);

// Worst-case bisection probes between the bounds: ceil(log2(piM - pim)).
u64 nt_tests(u64 n);

// Binary-search membership test; N must be <= table.limit.
bool bisect_is_prime(u64 n, const PrimeTable& table);

}  // namespace dfn
