#include "dfn/sieves.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dfn {

bool PrimeTable::contains(u64 n) const {
    return std::binary_search(primes.begin(), primes.end(), n);
}

namespace {

struct Counted {
    std::vector<u8> cells;
    u64 zeros = 0;
    void clear(u64 i) {
        cells[i] = 0;
        ++zeros;
    }
    void flip(u64 i) {
        cells[i] ^= 1;
        ++zeros;
    }
};

// CEP: classic sieve, every q from 2 marks multiples from q^2.
void run_pritchard(u64 L, std::vector<u64>& primes, Counted& a) {
    a.cells.assign(L + 1, 1);
    for (u64 k = 2; k * k <= L; ++k)
        for (u64 j = k * k; j <= L; j += k) a.clear(j);
    for (u64 k = 2; k <= L; ++k)
        if (a.cells[k]) primes.push_back(k);
}

// CEPi: odd positions only, all odd q up to floor(sqrt(L)).
void run_pritchard_odd(u64 L, std::vector<u64>& primes, Counted& a) {
    a.cells.assign(L + 1, 0);
    for (u64 k = 3; k <= L; k += 2) a.cells[k] = 1;
    for (u64 k = 3; k <= isqrt(L); k += 2)
        for (u64 j = k * k; j <= L; j += 2 * k) a.clear(j);
    primes.push_back(2);
    for (u64 k = 3; k <= L; k += 2)
        if (a.cells[k]) primes.push_back(k);
}

// CEPm: same marking as CEPi in a half-size array, cell (j-1)/2 for odd j.
void run_pritchard_minmem(u64 L, std::vector<u64>& primes, Counted& a) {
    u64 lambda = L / 2;
    a.cells.assign(lambda + 1, 1);
    for (u64 k = 3; k <= isqrt(L); k += 2)
        for (u64 j = k * k; j <= L; j += 2 * k) a.clear((j - 1) / 2);
    primes.push_back(2);
    for (u64 k = 1; k + 1 <= lambda; ++k)
        if (a.cells[k]) primes.push_back(2 * k + 1);
    // the paper's collect loop runs k in 1..lambda-1; 2*lambda+1 > L anyway,
    // but for odd L the last cell holds L itself
    if (lambda >= 1 && 2 * lambda + 1 <= L && a.cells[lambda]) primes.push_back(2 * lambda + 1);
}

// CEPb: odd multiples of primes only; primes harvested batch by batch
// between consecutive prime squares, so the prime list feeds the marking.
void run_batched(u64 L, std::vector<u64>& primes, Counted& a, bool halved) {
    u64 lambda = L / 2;
    a.cells.assign((halved ? lambda : L) + 1, 1);
    auto clear_odd = [&](u64 j) { a.clear(halved ? (j - 1) / 2 : j); };
    auto is_one = [&](u64 j) { return a.cells[halved ? (j - 1) / 2 : j] != 0; };

    primes = {2, 3, 5, 7};
    for (u64 j = 9; j <= L; j += 6) clear_odd(j);
    u64 k = 2;  // primes[k] = 5
    u64 s = primes[k - 1] * primes[k - 1];
    u64 t = primes[k] * primes[k];
    while (t <= L) {
        for (u64 j = t; j <= L; j += 2 * primes[k]) clear_odd(j);
        for (u64 j = s + 2; j + 2 <= t; j += 2)
            if (is_one(j)) primes.push_back(j);
        s = t;
        ++k;
        t = primes[k] * primes[k];
    }
    for (u64 j = s + 2; j <= L; j += 2)
        if (is_one(j)) primes.push_back(j);
}

// CS: Sundaram's sieve over k+j+2kj <= floor(L/2), j from 1 as in the
// original double loop (pairs are marked twice).
void run_sundaram(u64 L, std::vector<u64>& primes, Counted& a) {
    u64 m = L / 2;
    a.cells.assign(m + 1, 1);
    for (u64 k = 1; 3 * k + 1 <= m; ++k) {
        u64 jmax = (m - k) / (2 * k + 1);
        for (u64 j = 1; j <= jmax; ++j) a.clear(k + j + 2 * k * j);
    }
    primes.push_back(2);
    for (u64 k = 1; k <= m; ++k)
        if (a.cells[k] && 2 * k + 1 <= L) primes.push_back(2 * k + 1);
}

// Atkin: quadratic-form parity flips plus square-multiple clears.
void run_atkin(u64 L, std::vector<u64>& primes, Counted& a) {
    a.cells.assign(L + 1, 0);
    u64 rt = isqrt(L);
    for (u64 x = 1; x <= rt; ++x) {
        for (u64 y = 1; y <= rt; ++y) {
            u64 n = 4 * x * x + y * y;
            if (n <= L && (n % 12 == 1 || n % 12 == 5)) a.flip(n);
            n = 3 * x * x + y * y;
            if (n <= L && n % 12 == 7) a.flip(n);
            if (x > y) {
                n = 3 * x * x - y * y;
                if (n <= L && n % 12 == 11) a.flip(n);
            }
        }
    }
    for (u64 n = 5; n <= rt; ++n)
        if (a.cells[n])
            for (u64 k = 1; k * n * n <= L; ++k) a.clear(k * n * n);
    if (L >= 2) primes.push_back(2);
    if (L >= 3) primes.push_back(3);
    for (u64 n = 5; n <= L; ++n)
        if (a.cells[n]) primes.push_back(n);
}

// AO: Atkin restricted to odd candidates, ceil'ed loop bounds guarded by n<=L.
void run_atkin_opt(u64 L, std::vector<u64>& primes, Counted& a) {
    a.cells.assign(L + 1, 0);
    u64 lambda = isqrt(L);
    for (u64 j = 1; j <= lambda; ++j) {
        u64 jj = j * j;
        for (u64 k = 1; 4 * k * k + jj <= L + 4; ++k) {
            u64 n = 4 * k * k + jj;
            if (n <= L && (n % 12 == 1 || n % 12 == 5)) a.flip(n);
        }
        for (u64 k = 1; 3 * k * k + jj <= L + 3; ++k) {
            u64 n = 3 * k * k + jj;
            if (n <= L && n % 12 == 7) a.flip(n);
        }
        for (u64 k = j + 1; 3 * k * k <= L + jj + 3; ++k) {
            u64 n = 3 * k * k - jj;
            if (n <= L && n % 12 == 11) a.flip(n);
        }
    }
    for (u64 j = 5; j <= lambda; j += 2)
        if (a.cells[j])
            for (u64 k = 1; k * j * j <= L; k += 2) a.clear(k * j * j);
    if (L >= 2) primes.push_back(2);
    if (L >= 3) primes.push_back(3);
    for (u64 n = 5; n <= L; n += 2)
        if (a.cells[n]) primes.push_back(n);
}

}  // namespace

std::pair<PrimeTable, SieveStats> sieve(u64 limit, SieveAlgo algo) {
    bool batched = algo == SieveAlgo::batched || algo == SieveAlgo::batched_minmem;
    u64 minimum = batched ? 15 : 2;
    if (limit < minimum)
        throw std::domain_error("sieve: limit must be >= " + std::to_string(minimum) + " for " +
                                std::string(to_string(algo)));

    PrimeTable table;
    table.limit = limit;
    SieveStats stats;
    stats.algorithm = algo;
    Counted a;

    auto t0 = std::chrono::steady_clock::now();
    switch (algo) {
        case SieveAlgo::pritchard: run_pritchard(limit, table.primes, a); break;
        case SieveAlgo::pritchard_odd: run_pritchard_odd(limit, table.primes, a); break;
        case SieveAlgo::pritchard_minmem: run_pritchard_minmem(limit, table.primes, a); break;
        case SieveAlgo::batched: run_batched(limit, table.primes, a, false); break;
        case SieveAlgo::batched_minmem: run_batched(limit, table.primes, a, true); break;
        case SieveAlgo::sundaram: run_sundaram(limit, table.primes, a); break;
        case SieveAlgo::atkin: run_atkin(limit, table.primes, a); break;
        case SieveAlgo::atkin_opt: run_atkin_opt(limit, table.primes, a); break;
    }
    stats.elapsed = std::chrono::steady_clock::now() - t0;
    stats.zero_assignments = a.zeros;
    stats.memory_cells = (a.cells.size() - 1) + table.primes.size();
    return {std::move(table), stats};
}

PrimeTable sieve(u64 limit) {
    if (limit < 15) {
        // small limits: the plain variant has no preconditions beyond 2
        return sieve(std::max<u64>(limit, 2), SieveAlgo::pritchard).first;
    }
    return sieve(limit, SieveAlgo::batched).first;
}

std::string_view to_string(SieveAlgo a) {
    switch (a) {
        case SieveAlgo::pritchard: return "pritchard";
        case SieveAlgo::pritchard_odd: return "pritchard_odd";
        case SieveAlgo::pritchard_minmem: return "pritchard_minmem";
        case SieveAlgo::batched: return "batched";
        case SieveAlgo::batched_minmem: return "batched_minmem";
        case SieveAlgo::sundaram: return "sundaram";
        case SieveAlgo::atkin: return "atkin";
        case SieveAlgo::atkin_opt: return "atkin_opt";
    }
    return "?";
}

std::optional<SieveAlgo> sieve_algo_from_string(std::string_view s) {
    for (auto a : {SieveAlgo::pritchard, SieveAlgo::pritchard_odd, SieveAlgo::pritchard_minmem,
                   SieveAlgo::batched, SieveAlgo::batched_minmem, SieveAlgo::sundaram,
                   SieveAlgo::atkin, SieveAlgo::atkin_opt})
        if (to_string(a) == s) return a;
    return std::nullopt;
}

}  // namespace dfn
