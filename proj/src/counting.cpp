#include "dfn/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dfn {

u64 pi_count(u64 x, const PrimeTable& table) {
    if (x > table.limit) throw std::out_of_range("pi_count: x exceeds table limit");
    auto it = std::upper_bound(table.primes.begin(), table.primes.end(), x);
    return u64(it - table.primes.begin());
}

PiBounds pi_bounds(u64 n) {
    if (n < 3) throw std::domain_error("pi_bounds: n must be >= 3");
    double ln = std::log(double(n));
    double f = std::floor(double(n) / ln * (1.0 + 1.0 / (2.0 * ln)));
    u64 lower;
    if (n < 11)
        lower = u64(f) - 2;
    else if (n <= 39)
        lower = u64(f) - 1;
    else
        lower = u64(f);
    u64 upper = u64(std::ceil(double(n) / ln * (1.0 + 3.0 / (2.0 * ln))));
    return {lower, upper};
}

u64 nt_tests(u64 n) {
    auto [lo, hi] = pi_bounds(n);
    u64 gap = hi - lo;
    u64 t = 0;
    while ((u64(1) << t) < gap) ++t;
    return t;
}

bool bisect_is_prime(u64 n, const PrimeTable& table) {
    if (n > table.limit) throw std::out_of_range("bisect_is_prime: n exceeds table limit");
    return std::binary_search(table.primes.begin(), table.primes.end(), n);
}

}  // namespace dfn
