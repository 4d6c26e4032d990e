#include "dfn/search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace dfn {

void TableSet::set_primes(const PrimeTable& p) {
    pi_prefix_.assign(p.limit + 1, 0);
    u32 cnt = 0;
    size_t idx = 0;
    for (u64 k = 0; k <= p.limit; ++k) {
        if (idx < p.primes.size() && p.primes[idx] == k) {
            ++cnt;
            ++idx;
        }
        pi_prefix_[k] = cnt;
    }
}

const ValueTable& TableSet::table(Fn f) const {
    const ValueTable* t = tables_[size_t(f)];
    if (!t)
        throw std::runtime_error("TableSet: required table '" + std::string(to_string(f)) +
                                 "' is not loaded");
    return *t;
}

u64 TableSet::at(Fn f, i64 k) const {
    const ValueTable& t = table(f);
    if (k < 1 || u64(k) > t.n)
        throw std::out_of_range("TableSet: index " + std::to_string(k) + " outside table '" +
                                std::string(to_string(f)) + "' (no guarding filter)");
    return t.v[size_t(k)];
}

u64 TableSet::pi(i64 k) const {
    if (pi_prefix_.empty()) throw std::runtime_error("TableSet: prime table is not loaded");
    if (k < 0 || size_t(k) >= pi_prefix_.size())
        throw std::out_of_range("TableSet: pi(" + std::to_string(k) + ") outside the prime table");
    return pi_prefix_[size_t(k)];
}

bool TableSet::nonprime(i64 k) const {
    u64 e = at(Fn::eta, k);
    if (k > 4) return e != u64(k);
    return k == 1 || k == 4;
}

Filter f_coprime(int i, int j, std::string text) {
    return {Filter::Kind::coprime, std::move(text), std::max(i, j),
            [i, j](const i64* t, const TableSet&) { return std::gcd(t[i], t[j]) == 1; },
            -1, nullptr};
}

Filter f_not_coprime(int i, int j, std::string text) {
    return {Filter::Kind::not_coprime, std::move(text), std::max(i, j),
            [i, j](const i64* t, const TableSet&) { return std::gcd(t[i], t[j]) != 1; },
            -1, nullptr};
}

Filter f_nonprime(int i, std::string text) {
    return {Filter::Kind::nonprime, std::move(text), i,
            [i](const i64* t, const TableSet& ts) { return ts.nonprime(t[i]); }, -1, nullptr};
}

Filter f_less(int i, int j, std::string text) {
    return {Filter::Kind::less, std::move(text), std::max(i, j),
            [i, j](const i64* t, const TableSet&) { return t[i] < t[j]; }, -1, nullptr};
}

Filter f_not_equal(int i, int j, std::string text) {
    return {Filter::Kind::not_equal, std::move(text), std::max(i, j),
            [i, j](const i64* t, const TableSet&) { return t[i] != t[j]; }, -1, nullptr};
}

namespace {

struct Scanner {
    const SearchDomain& domain;
    const std::vector<Filter>& filters;
    const EquationSpec& eq;
    const TableSet& tables;

    std::vector<std::vector<i64>> solutions;
    u64 analyzed = 0;

    // filters grouped by the first depth at which they are decidable
    std::vector<std::vector<const Filter*>> by_depth;

    void prepare() {
        by_depth.assign(domain.dims.size(), {});
        for (const auto& f : filters) {
            int d = std::min<int>(f.max_dim, int(domain.dims.size()) - 1);
            by_depth[size_t(d)].push_back(&f);
        }
    }

    i64 upper_bound(size_t depth, const i64* tuple) const {
        i64 hi = domain.dims[depth].b;
        for (const auto& f : filters)
            if (f.clip_dim == int(depth)) hi = std::min(hi, f.clip_max(tuple, tables));
        return hi;
    }

    void scan(size_t depth, i64* tuple) {
        const Dim& d = domain.dims[depth];
        i64 hi = upper_bound(depth, tuple);
        bool last = depth + 1 == domain.dims.size();
        for (i64 v = d.a; v <= hi; v += d.r) {
            tuple[depth] = v;
            bool ok = true;
            for (const Filter* f : by_depth[depth])
                if (!f->test(tuple, tables)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (last) {
                ++analyzed;
                if (eq.predicate(tuple, tables))
                    solutions.emplace_back(tuple, tuple + domain.dims.size());
            } else {
                scan(depth + 1, tuple);
            }
        }
    }

    // scan with the outermost value fixed (for worker partitioning)
    void scan_fixed_first(i64 v0) {
        std::vector<i64> tuple(domain.dims.size(), 0);
        tuple[0] = v0;
        bool ok = true;
        for (const Filter* f : by_depth[0])
            if (!f->test(tuple.data(), tables)) {
                ok = false;
                break;
            }
        if (!ok) return;
        if (domain.dims.size() == 1) {
            ++analyzed;
            if (eq.predicate(tuple.data(), tables)) solutions.emplace_back(tuple);
        } else {
            scan(1, tuple.data());
        }
    }
};

}  // namespace

SearchResult run(const EquationSpec& eq, const SearchDomain& domain,
                 const std::vector<Filter>& filters, const TableSet& tables, unsigned workers) {
    if (domain.dims.empty()) throw std::invalid_argument("run: empty search domain");
    for (Fn f : eq.needs)
        if (!tables.has(f))
            throw std::runtime_error("run: equation " + eq.id + " needs table '" +
                                     std::string(to_string(f)) + "'");
    if (eq.needs_pi && !tables.has_pi())
        throw std::runtime_error("run: equation " + eq.id + " needs the prime table");

    auto t0 = std::chrono::steady_clock::now();
    SearchResult result;
    result.possible = domain.possible();

    const Dim& first = domain.dims[0];
    std::vector<i64> first_vals;
    {
        // outermost clips that depend on nothing can shrink the whole range
        Scanner probe{domain, filters, eq, tables, {}, 0, {}};
        i64 hi = probe.upper_bound(0, nullptr);
        for (i64 v = first.a; v <= hi; v += first.r) first_vals.push_back(v);
    }

    workers = std::max(1u, workers);
    workers = std::min<unsigned>(workers, std::max<size_t>(first_vals.size(), 1));

    std::vector<Scanner> scanners;
    scanners.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        scanners.push_back(Scanner{domain, filters, eq, tables, {}, 0, {}});
        scanners.back().prepare();
    }

    if (workers == 1) {
        for (i64 v : first_vals) scanners[0].scan_fixed_first(v);
    } else {
        // contiguous chunks keep the merged order row-major
        std::vector<std::thread> threads;
        size_t chunk = (first_vals.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            size_t lo = w * chunk, hi = std::min(first_vals.size(), lo + chunk);
            threads.emplace_back([&, w, lo, hi] {
                for (size_t i = lo; i < hi; ++i) scanners[w].scan_fixed_first(first_vals[i]);
            });
        }
        for (auto& t : threads) t.join();
    }

    for (auto& s : scanners) {
        result.analyzed += s.analyzed;
        for (auto& sol : s.solutions) result.solutions.push_back(std::move(sol));
    }
    std::sort(result.solutions.begin(), result.solutions.end());
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return result;
}

SearchResult run_default(const EquationSpec& eq, const TableSet& tables, unsigned workers) {
    return run(eq, eq.default_domain, eq.default_filters, tables, workers);
}

const EquationSpec* find_equation(std::string_view id) {
    for (const auto& e : registry())
        if (e.id == id) return &e;
    return nullptr;
}

}  // namespace dfn
