#pragma once

#include <gmpxx.h>

#include "dfn/value_table.hpp"

namespace dfn {

enum class Verdict { prime, composite, invalid };

// eta-table primality test: n > 4 prime iff eta(n) = n; 1 and 4 composite,
// 2 and 3 prime. Out of table range -> invalid.
Verdict tp_eta(u64 n, const ValueTable& eta);

// Smarandache criteria 1..4 (factorial congruences, reduced mod p stepwise).
//   1: p >= 3,  (p-3)! = (p-1)/2        (mod p)
//   2: p >= 5,  (p-4)! = (-1)^m * n     (mod p), m = [p/3]+1, n = [(p+1)/6]
//   3: p >= 5,  (p-5)! = r*h + (r^2-1)/24 (mod p), h = [p/24], r = p-24h
//   4: p >= 2,  (p-k)! = (-1)^(k+[p/h]+1) * h (mod p) for the largest k >= 3
//               with (k-1)! | p+1; h = 0 -> composite
Verdict csp(int variant, u64 p);

// Probabilistic Miller-Rabin; bases odd in [3, ~sqrt(n)] from a seeded
// 64-bit PRNG (mt19937_64, modulo reduction). "prime" = probable prime.
Verdict miller_rabin(const mpz_class& n, u32 rounds = 25, u64 seed = 0);

// Lucas-Lehmer for M = 2^n - 1; n must be prime (else invalid).
std::pair<mpz_class, Verdict> lucas_lehmer(u32 n);

}  // namespace dfn
