#include "dfn/factorint.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace dfn;

namespace {
const PrimeTable& table() {
    static PrimeTable t = sieve(1000000);
    return t;
}
}  // namespace

TEST_CASE("factorization of the book's displays") {
    auto f = factorize((u64(1) << 36) - 1, table());
    CHECK(f.factors == std::vector<std::pair<u64, u32>>{
                           {3, 3}, {5, 1}, {7, 1}, {13, 1}, {19, 1}, {37, 1}, {73, 1}, {109, 1}});
    u64 n7 = 1;
    for (int i = 0; i < 7; ++i) n7 *= 11;
    auto g = factorize(n7 - 1, table());
    CHECK(g.factors ==
          std::vector<std::pair<u64, u32>>{{2, 1}, {5, 1}, {43, 1}, {45319, 1}});
    auto h = factorize(4, table());
    CHECK(h.factors == std::vector<std::pair<u64, u32>>{{2, 2}});
}

TEST_CASE("factorize round-trips every m up to 1e5") {
    for (u64 m = 2; m <= 100000; ++m) {
        auto f = factorize(m, table());
        REQUIRE(f.value() == m);
        for (auto [p, a] : f.factors) REQUIRE(oracle::is_prime(p));
    }
}

TEST_CASE("factorize capacity guard") {
    PrimeTable small = sieve(100);
    CHECK_THROWS_AS(factorize(100000, small), std::domain_error);
}

TEST_CASE("horner evaluates the printed roots to zero") {
    CHECK(horner({1469, -490, 29}, mpz_class(13)) == 0);
    CHECK(horner({2898109, -12767, -28829, 127}, mpz_class(227)) == 0);
    CHECK(horner({7, 3}, mpz_class(0)) == 7);
    CHECK(horner({mpz_class(1), mpz_class(2)}, mpq_class(1, 2)) == 2);
}

TEST_CASE("prod coefficients") {
    CHECK(prod_coeffs(1) == std::vector<mpz_class>{1, 1});
    CHECK(prod_coeffs(2) == std::vector<mpz_class>{2, 3, 1});
    CHECK(prod_coeffs(3) == std::vector<mpz_class>{6, 11, 6, 1});
    // expansion oracle: evaluate both sides at several points
    for (u32 c = 1; c <= 8; ++c) {
        auto v = prod_coeffs(c);
        for (long x = -3; x <= 3; ++x) {
            mpz_class direct = 1;
            for (u32 k = 1; k <= c; ++k) direct *= x + long(k);
            REQUIRE(horner(v, mpz_class(x)) == direct);
        }
    }
}

TEST_CASE("modular exponentiation") {
    CHECK(mod_pow(5, 596, 1234) == 1013);
    CHECK(mod_pow(7, 0, 13) == 1);
    CHECK(mod_pow(7, 10, 13) == 4);
    CHECK_THROWS_AS(mod_pow(2, 3, 1), std::domain_error);
    // naive cross-check
    for (u64 n = 0; n <= 1000; ++n) {
        mpz_class naive = 1;
        for (u64 i = 0; i < n; ++i) naive = naive * 3 % 1009;
        REQUIRE(mod_pow(3, mpz_class(static_cast<unsigned long>(n)), 1009) == naive);
    }
}

TEST_CASE("base-2 digits") {
    CHECK(base2_digits(107) == std::vector<int>{1, 1, 0, 1, 0, 1, 1});
    CHECK(base2_digits(1) == std::vector<int>{1});
    CHECK(base2_digits(6) == std::vector<int>{0, 1, 1});
    CHECK_THROWS_AS(base2_digits(0), std::domain_error);
}

TEST_CASE("pollard-strassen on the test lines") {
    CHECK(pollard_strassen(143, 11) == 11);
    CHECK(pollard_strassen(667, 25) == 23);
    CHECK(pollard_strassen(4009, 63) == 19);
    CHECK(pollard_strassen(10097, 100) == 23);
}

TEST_CASE("pollard-strassen blocked products multiply to (c^2)! mod n") {
    // f(x) = (x+1)...(x+c): product of f(kc) for k = 0..c-1 telescopes
    for (u64 c = 1; c <= 6; ++c) {
        u64 n = 10007;
        auto C = prod_coeffs(u32(c));
        u64 prod = 1;
        for (u64 k = 0; k < c; ++k) {
            mpz_class fx = horner(C, mpz_class(static_cast<unsigned long>(k * c)));
            prod = mulmod(prod, mpz_class(fx % n).get_ui(), n);
        }
        u64 fact = 1;
        for (u64 i = 2; i <= c * c; ++i) fact = mulmod(fact, i, n);
        REQUIRE(prod == fact);
    }
}

TEST_CASE("pollard rho finds proper divisors") {
    auto d = pollard_rho(8051);
    REQUIRE(d.has_value());
    CHECK((*d == 83 || *d == 97));
    auto e = pollard_rho(91);
    REQUIRE(e.has_value());
    CHECK((*e == 7 || *e == 13));
    for (u64 n : {143u, 1403u, 9409u * 2u, 101u * 103u}) {
        auto r = pollard_rho(n);
        if (r) {
            REQUIRE(n % *r == 0);
            REQUIRE(*r > 1);
            REQUIRE(*r < n);
        }
    }
}

TEST_CASE("pollard p-1 contract and a known split") {
    // any returned divisor is proper
    for (u64 n : {1403u, 15u, 8051u, 9991u}) {
        for (u64 B : {3u, 11u, 16u, 31u}) {
            auto d = pollard_p1(n, B);
            if (d) {
                REQUIRE(n % *d == 0);
                REQUIRE(*d > 1);
                REQUIRE(*d < n);
            }
        }
    }
    // 2461 = 23*107: 22 = 2*11 is 11-smooth, 106 = 2*53 is not, so the base-2
    // run isolates 23
    auto d = pollard_p1(2461, 11);
    REQUIRE(d.has_value());
    CHECK(*d == 23);
    // both factors of 1403 = 23*61 have 16-smooth p-1, so gcd collapses to n
    CHECK(!pollard_p1(1403, 16).has_value());
    // the source program's step 4 computes gcd(n-1, a) instead of
    // gcd(a-1, n); the flag reproduces that literal step (its result need
    // not divide n, which is why the standard form is the default)
    auto lit = pollard_p1(2461, 11, 2, P1Gcd::paper);
    auto std_d = pollard_p1(2461, 11, 2, P1Gcd::standard);
    CHECK(std_d == 23);
    if (lit) CHECK(*lit > 1);
}

TEST_CASE("fermat factorization") {
    CHECK(fermat_factor(5959) == std::pair<u64, u64>{59, 101});
    CHECK(fermat_factor(9) == std::pair<u64, u64>{3, 3});
    CHECK(fermat_factor(101) == std::pair<u64, u64>{1, 101});  // prime exhausts
    for (u64 n = 3; n <= 2001; n += 2) {
        auto [a, b] = fermat_factor(n);
        REQUIRE(a * b == n);
    }
}

TEST_CASE("u64 factorizer handles large semiprimes") {
    CHECK(is_prime_u64(999983));
    CHECK(!is_prime_u64(1));
    CHECK(!is_prime_u64((u64(1) << 47) - 1));
    u64 n = 1000003ull * 1000033ull;
    auto f = factorize_u64(n);
    CHECK(f.factors == std::vector<std::pair<u64, u32>>{{1000003, 1}, {1000033, 1}});
    CHECK(factorize_u64(2074506308666643852ull).value() ==
          mpz_class("2074506308666643852"));
}
