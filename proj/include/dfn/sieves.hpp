#pragma once

#include <chrono>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dfn/ints.hpp"

namespace dfn {

enum class SieveAlgo {
    pritchard,         // full array, all trial multiples from q^2
    pritchard_odd,     // odd positions only
    pritchard_minmem,  // odd positions, half-size array
    batched,           // odd multiples of primes, primes harvested in batches
    batched_minmem,    // batched with half-size array
    sundaram,
    atkin,
    atkin_opt,
};

struct PrimeTable {
    u64 limit = 0;
    std::vector<u64> primes;

    bool contains(u64 n) const;  // binary search
};

struct SieveStats {
    SieveAlgo algorithm;
    u64 zero_assignments = 0;  // writes of 0 into is_prime (Atkin: flips + square clears)
    u64 memory_cells = 0;      // tracked sieve cells + primes stored
    std::chrono::nanoseconds elapsed{0};
};

// Generate all primes <= limit. Batched variants require limit >= 15, the
// rest limit >= 2; below that a std::domain_error names the minimum.
std::pair<PrimeTable, SieveStats> sieve(u64 limit, SieveAlgo algo);

// Convenience: fastest variant, stats discarded.
PrimeTable sieve(u64 limit);

std::string_view to_string(SieveAlgo a);
std::optional<SieveAlgo> sieve_algo_from_string(std::string_view s);

}  // namespace dfn
