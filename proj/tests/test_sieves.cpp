#include "dfn/sieves.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace dfn;

namespace {
const std::vector<SieveAlgo> all_algos = {
    SieveAlgo::pritchard, SieveAlgo::pritchard_odd, SieveAlgo::pritchard_minmem,
    SieveAlgo::batched,   SieveAlgo::batched_minmem, SieveAlgo::sundaram,
    SieveAlgo::atkin,     SieveAlgo::atkin_opt};
}

TEST_CASE("primes up to 25, pritchard, with the 21 zero assignments") {
    auto [table, stats] = sieve(25, SieveAlgo::pritchard);
    CHECK(table.primes == std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19, 23});
    CHECK(stats.zero_assignments == 21);
}

TEST_CASE("smallest limits") {
    auto [t1, s1] = sieve(2, SieveAlgo::pritchard_odd);
    CHECK(t1.primes == std::vector<u64>{2});
    auto [t2, s2] = sieve(2, SieveAlgo::sundaram);
    CHECK(t2.primes == std::vector<u64>{2});
    auto [t3, s3] = sieve(2, SieveAlgo::atkin);
    CHECK(t3.primes == std::vector<u64>{2});
}

TEST_CASE("batched variants require limit >= 15") {
    CHECK_THROWS_AS(sieve(14, SieveAlgo::batched), std::domain_error);
    CHECK_THROWS_AS(sieve(14, SieveAlgo::batched_minmem), std::domain_error);
    CHECK_NOTHROW(sieve(15, SieveAlgo::batched));
    CHECK_THROWS_AS(sieve(1, SieveAlgo::pritchard), std::domain_error);
}

TEST_CASE("all variants agree with trial division on random limits") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 12; ++round) {
        u64 limit = 15 + rng() % 2000;
        auto expected = oracle::primes_upto(limit);
        for (auto algo : all_algos) {
            auto [table, stats] = sieve(limit, algo);
            INFO("algo ", to_string(algo), " limit ", limit);
            CHECK(table.primes == expected);
            CHECK(table.limit == limit);
        }
    }
    // one larger cross-check
    auto expected = oracle::primes_upto(100000);
    for (auto algo : all_algos) {
        auto [table, stats] = sieve(100000, algo);
        INFO("algo ", to_string(algo));
        CHECK(table.primes == expected);
    }
}

TEST_CASE("odd and minmem variants report identical zero assignments") {
    for (u64 limit : {100, 1234, 99991, 100000}) {
        auto a = sieve(limit, SieveAlgo::pritchard_odd).second;
        auto b = sieve(limit, SieveAlgo::pritchard_minmem).second;
        CHECK(a.zero_assignments == b.zero_assignments);
        auto c = sieve(limit, SieveAlgo::batched).second;
        auto d = sieve(limit, SieveAlgo::batched_minmem).second;
        CHECK(c.zero_assignments == d.zero_assignments);
    }
}

TEST_CASE("memory cell convention: tracked cells plus primes stored") {
    auto [t, s] = sieve(1000, SieveAlgo::pritchard);
    CHECK(s.memory_cells == 1000 + t.primes.size());
    auto [t2, s2] = sieve(1000, SieveAlgo::pritchard_minmem);
    CHECK(s2.memory_cells == 500 + t2.primes.size());
}

TEST_CASE("algo name round trip") {
    for (auto algo : all_algos) CHECK(sieve_algo_from_string(to_string(algo)) == algo);
    CHECK(!sieve_algo_from_string("nosuch"));
}
