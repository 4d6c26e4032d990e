#pragma once

#include <vector>

#include "dfn/ints.hpp"

namespace dfn {

// (s, m_s) from iterated gcd-stripping of m by a; a^(phi(m_s)+s) = a^s (mod m)
// holds without any coprimality assumption.
struct EulerGenPair {
    u64 s;
    u64 m_s;
};

EulerGenPair euler_gen(u64 a, u64 m);
bool verify_euler_gen(u64 a, u64 m);

// All residues in [1, m] coprime to m, ascending ([1] for m = 1).
std::vector<u64> coprime_residues(u64 m);

// m in A iff m in {0, +-1, +-2, +-4} or m = +-p^b or +-2p^b, p odd prime.
bool in_set_A(i64 m);

// Product of the coprime residues mod m: m-1 when m in A, 1 otherwise
// (m = 1 degenerates to 0, i.e. 1 reduced mod 1).
u64 gauss_product(u64 m);

// L(x, m) = prod (x + C_i) mod m over the coprime residues C_i.
u64 L_func(i64 x, u64 m);

}  // namespace dfn
