#pragma once

#include <array>
#include <chrono>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dfn/sieves.hpp"
#include "dfn/value_table.hpp"

namespace dfn {

// One dimension of a search domain: the progression {a, a+r, ..., <= b}.
struct Dim {
    std::string name;
    i64 a = 1;
    i64 r = 1;
    i64 b = 1;

    u64 count() const { return b < a ? 0 : u64((b - a) / r) + 1; }
};

struct SearchDomain {
    std::vector<Dim> dims;

    u64 possible() const {
        u64 p = 1;
        for (const auto& d : dims) p *= d.count();
        return p;
    }
};

// Read-only bundle of function tables a search can consult.
class TableSet {
public:
    void set(const ValueTable& t) { tables_[size_t(t.name)] = &t; }
    void set_primes(const PrimeTable& p);

    bool has(Fn f) const { return tables_[size_t(f)] != nullptr; }
    bool has_pi() const { return !pi_prefix_.empty(); }
    u64 limit(Fn f) const { return table(f).n; }
    u64 pi_limit() const { return pi_prefix_.size() - 1; }

    // checked lookups: out-of-range indexing is a hard error, never a skip
    u64 at(Fn f, i64 k) const;
    u64 pi(i64 k) const;

    // pi as the book's search programs evaluate it: the raw summation
    // -1 + sum floor(eta(k)/k), which undercounts the true pi by one at
    // 2 and 3 (the corrected piecewise formula lives in pi_via_eta)
    u64 pi_book(i64 k) const {
        u64 v = pi(k);
        return (k == 2 || k == 3) ? v - 1 : v;
    }

    // unchecked fast path for inner loops (filters must have guarded range)
    u64 raw(Fn f, i64 k) const { return table(f).v[size_t(k)]; }
    u64 raw_pi(i64 k) const { return pi_prefix_[size_t(k)]; }

    // eta-table primality convention: 1 and 4 composite, 2, 3 prime
    bool nonprime(i64 k) const;

    const ValueTable& table(Fn f) const;

private:
    const ValueTable* tables_[6] = {nullptr, nullptr, nullptr, nullptr, nullptr, nullptr};
    std::vector<u32> pi_prefix_;
};

// A pure predicate over a candidate tuple. `max_dim` is the highest dim index
// the test reads, letting the runner evaluate it as soon as that dim is set.
// A filter may also clip one dimension: values above clip_max(prefix) can
// never pass the test, so the scan skips them (they are not analyzed).
struct Filter {
    enum class Kind { coprime, not_coprime, nonprime, less, not_equal, table_bound, magnitude };

    Kind kind;
    std::string text;
    int max_dim = 0;
    std::function<bool(const i64*, const TableSet&)> test;
    int clip_dim = -1;
    std::function<i64(const i64*, const TableSet&)> clip_max;
};

Filter f_coprime(int i, int j, std::string text);
Filter f_not_coprime(int i, int j, std::string text);
Filter f_nonprime(int i, std::string text);
Filter f_less(int i, int j, std::string text);
Filter f_not_equal(int i, int j, std::string text);

struct EquationSpec {
    std::string id;
    std::string form;  // e.g. "eta(m*x+n) = x"
    SearchDomain default_domain;
    std::vector<Filter> default_filters;
    std::vector<Fn> needs;
    bool needs_pi = false;
    std::function<bool(const i64*, const TableSet&)> predicate;
};

struct SearchResult {
    std::vector<std::vector<i64>> solutions;  // lexicographically sorted
    u64 possible = 0;
    u64 analyzed = 0;  // tuples that passed every filter
    std::chrono::milliseconds elapsed{0};
};

// Exhaustive scan in row-major dim order. Missing tables raise a
// configuration error before the scan starts.
SearchResult run(const EquationSpec& eq, const SearchDomain& domain,
                 const std::vector<Filter>& filters, const TableSet& tables,
                 unsigned workers = 1);

SearchResult run_default(const EquationSpec& eq, const TableSet& tables, unsigned workers = 1);

// Every equation the book runs, keyed by id ("2069".."2095", "2074p",
// "2077p", "2124".."2130", "2152".."2158", "2166".."2172" (k variants),
// "2187".."2193", "guy1".."guy15", ...).
const std::vector<EquationSpec>& registry();
const EquationSpec* find_equation(std::string_view id);

// --- auxiliary empirical searches ---

// All 4/n = 1/x + 1/y + 1/z with x <= y <= z <= cap.
std::vector<std::array<u64, 3>> erdos_straus(u64 n, u64 cap);

// p + digit-reverse(p) is prime.
bool has_229_property(u64 p);

// All `length`-digit numbers in `base` equal to the sum of the length-th
// powers of their digits.
std::vector<u64> narcissistic(u64 base, u32 length);

}  // namespace dfn
