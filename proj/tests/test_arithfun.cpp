#include "dfn/arithfun.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace dfn;

namespace {
const PrimeTable& table() {
    static PrimeTable t = sieve(1000000);
    return t;
}
}  // namespace

TEST_CASE("sigma_k at 12 and friends") {
    CHECK(sigma_k(0, 12, table()) == 6);
    CHECK(sigma_k(1, 12, table()) == 28);
    CHECK(sigma_k(2, 12, table()) == 210);
    CHECK(sigma_k(1, 97, table()) == 98);
    CHECK(sigma_k(3, 10, table()) == 1134);
    CHECK(sigma_k(0, 1, table()) == 1);
}

TEST_CASE("definitional oracle up to 3000") {
    for (u64 n = 1; n <= 3000; ++n) {
        REQUIRE(sigma_k(0, n, table()) == oracle::sigma_k(0, n));
        REQUIRE(sigma_k(1, n, table()) == oracle::sigma_k(1, n));
        REQUIRE(sigma_k(2, n, table()) == oracle::sigma_k(2, n));
        REQUIRE(phi(n) == oracle::phi(n));
    }
}

TEST_CASE("proper divisor sums") {
    CHECK(s_val(12) == 16);
    CHECK(s_val(97) == 1);
    CHECK(s_val(6) == 6);
    CHECK(s_val(1) == 0);
}

TEST_CASE("phi values and convention") {
    CHECK(phi(12) == 4);
    CHECK(phi(36) == 12);
    CHECK(phi(0) == 1);
    CHECK(phi(1) == 1);
}

TEST_CASE("multiplicativity of sigma on coprime pairs") {
    std::mt19937_64 rng(3);
    int done = 0;
    while (done < 10000) {
        u64 m = 1 + rng() % 3000, n = 1 + rng() % 3000;
        if (std::gcd(m, n) != 1) continue;
        REQUIRE(sigma_k(1, m * n, table()) == sigma_k(1, m, table()) * sigma_k(1, n, table()));
        ++done;
    }
}

TEST_CASE("phi(n^l) = n^(l-1) phi(n)") {
    for (u64 n = 1; n <= 100; ++n) {
        u64 p = 1;
        for (u64 l = 1; l <= 4; ++l) {
            // p = n^(l-1)
            REQUIRE(phi(p * n) == p * phi(n));
            p *= n;
        }
    }
}

TEST_CASE("phi bounds: sqrt(n) below, n - sqrt(n) above for composites") {
    // phi(n) >= sqrt(n) except at 2 and 6 (equality holds at 1 and 4)
    for (u64 n = 2; n <= 10000; ++n) {
        u64 f = phi(n);
        if (n == 2 || n == 6)
            REQUIRE(u64(f) * f < n);
        else
            REQUIRE(u64(f) * f >= n);
        bool composite = n > 3 && !oracle::is_prime(n);
        if (composite) REQUIRE(n <= (n - f) * (n - f));  // phi(n) <= n - sqrt(n)
    }
}

TEST_CASE("hyperperfect classification") {
    CHECK(hyperperfect_k(6) == 1);
    CHECK(hyperperfect_k(21) == 2);
    CHECK(hyperperfect_k(28) == 1);
    CHECK(hyperperfect_k(301) == 6);
    CHECK(hyperperfect_k(325) == 3);
    CHECK(hyperperfect_k(496) == 1);
    CHECK(hyperperfect_k(697) == 12);
    CHECK(hyperperfect_k(1333) == 18);
    CHECK(!hyperperfect_k(8).has_value());
    // direct identity check over k <= 100
    for (u64 k = 1; k <= 100; ++k) CHECK(u64(8) != 1 + k * (s_val(8) - 1));
}

TEST_CASE("tables match scalar ops") {
    for (Fn fn : {Fn::sigma0, Fn::sigma1, Fn::sigma2, Fn::s, Fn::phi}) {
        auto t = gen_table(fn, 3000);
        REQUIRE(t.n == 3000);
        for (u64 n = 1; n <= 3000; ++n) {
            u64 expect = 0;
            switch (fn) {
                case Fn::sigma0: expect = oracle::sigma_k(0, n).get_ui(); break;
                case Fn::sigma1: expect = oracle::sigma_k(1, n).get_ui(); break;
                case Fn::sigma2: expect = oracle::sigma_k(2, n).get_ui(); break;
                case Fn::s: expect = oracle::sigma_k(1, n).get_ui() - n; break;
                case Fn::phi: expect = oracle::phi(n); break;
                default: break;
            }
            REQUIRE(t[n] == expect);
        }
    }
    CHECK(gen_table(Fn::sigma1, 12)[12] == 28);
    CHECK(gen_table(Fn::s, 1)[1] == 0);
}

TEST_CASE("phi neighbours") {
    auto t = gen_table(Fn::phi, 10000);
    std::vector<u64> hits;
    for (u64 n = 1; n < 1000; ++n)
        if (t[n] == t[n + 1]) hits.push_back(n);
    CHECK(hits == std::vector<u64>{1, 3, 15, 104, 164, 194, 255, 495, 584, 975});
    // the only triple point below 10^4
    std::vector<u64> triples;
    for (u64 n = 1; n + 2 <= 10000; ++n)
        if (t[n] == t[n + 1] && t[n + 1] == t[n + 2]) triples.push_back(n);
    CHECK(triples == std::vector<u64>{5186});
}
