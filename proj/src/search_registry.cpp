#include <gmpxx.h>
#include <cmath>

#include <array>
#include <limits>
#include <numeric>

#include "dfn/search.hpp"

namespace dfn {

namespace {

constexpr u64 CAP17 = 100000000000000000ull;  // 10^17
constexpr i64 TBL = 1000000;                  // table size the book works with

// ---- exponent caps -------------------------------------------------------
// Magnitude guards b^e <= 10^17 / 10^307 are answered from a precomputed
// largest-admissible-exponent array (bases up to 4*10^6); larger bases fall
// back to an exact mpz check. Cap boundaries are not attainable by table
// values, so strict and non-strict guards coincide.

struct ExpCaps {
    std::vector<u16> lim;  // lim[b] = max e with b^e <= cap (2 <= b < lim.size())
    mpz_class cap;

    u64 max_exp(u64 b) const {
        if (b < 2) return std::numeric_limits<u64>::max();
        if (b < lim.size()) return lim[b];
        mpz_class p;
        u64 lo = 1, hi = lim[lim.size() - 1] + 1;
        while (lo < hi) {  // largest e with b^e <= cap
            u64 mid = (lo + hi + 1) / 2;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(b),
                          static_cast<unsigned long>(mid));
            if (p <= cap)
                lo = mid;
            else
                hi = mid - 1;
        }
        return lo;
    }
    bool pow_le(u64 b, u64 e) const { return b < 2 || e <= max_exp(b); }
};

ExpCaps build_caps(u32 pow10) {
    ExpCaps c;
    mpz_ui_pow_ui(c.cap.get_mpz_t(), 10, pow10);
    const u64 bmax = 4000000;
    std::vector<u64> roots;  // roots[e-1] = floor(cap^(1/e)), nonincreasing
    for (u64 e = 1;; ++e) {
        mpz_class r;
        mpz_root(r.get_mpz_t(), c.cap.get_mpz_t(), static_cast<unsigned long>(e));
        if (r < 2) break;
        roots.push_back(r.fits_ulong_p() ? std::min<u64>(r.get_ui(), bmax) : bmax);
    }
    c.lim.assign(bmax + 1, 0);
    for (u64 b = 2; b <= bmax; ++b) {
        u64 lo = 0, hi = roots.size() - 1;  // largest index with roots[idx] >= b
        while (lo < hi) {
            u64 mid = (lo + hi + 1) / 2;
            if (roots[mid] >= b)
                lo = mid;
            else
                hi = mid - 1;
        }
        c.lim[b] = roots[lo] >= b ? u16(lo + 1) : u16(0);
    }
    return c;
}

const ExpCaps& caps17() {
    static const ExpCaps c = build_caps(17);
    return c;
}
const ExpCaps& caps307() {
    static const ExpCaps c = build_caps(307);
    return c;
}

bool kth_root_exact(u64 a, u64 k, u64* root) {
    if (k == 1) {
        *root = a;
        return true;
    }
    u64 c = u64(llroundl(powl((long double)a, 1.0L / (long double)k)));
    for (u64 cand = c > 2 ? c - 2 : 1; cand <= c + 2; ++cand) {
        if (pow_clamped(cand, k, a) == a) {
            *root = cand;
            return true;
        }
    }
    return false;
}

// exact a^y == b^x for x, y >= 1: with X = x/g, Y = y/g coprime, equality
// holds iff a = c^X and b = c^Y for a common c
bool eq_pow(u64 a, u64 y, u64 b, u64 x) {
    if (a == 0 || b == 0) return a == 0 && b == 0;
    if (a == 1 || b == 1) return a == 1 && b == 1;
    u64 g = std::gcd(x, y), X = x / g, Y = y / g;
    u64 c;
    if (!kth_root_exact(a, X, &c)) return false;
    return pow_clamped(c, Y, b) == b;
}

u64 factorial(u64 n) {
    u64 f = 1;
    for (u64 i = 2; i <= n; ++i) f *= i;
    return f;
}

// ---- filter builders -------------------------------------------------------
// Clips are installed only when every dim they read precedes the clipped dim
// in scan order; otherwise the plain test carries the condition.

// t[mi]*t[xi] + t[ni] <= bound, clipping dim xi (expects mi, ni < xi)
Filter f_affine_bound(int mi, int ni, int xi, i64 bound, std::string text) {
    Filter f;
    f.kind = Filter::Kind::table_bound;
    f.text = std::move(text);
    f.max_dim = std::max({mi, ni, xi});
    f.test = [=](const i64* t, const TableSet&) { return t[mi] * t[xi] + t[ni] <= bound; };
    if (mi < xi && ni < xi) {
        f.clip_dim = xi;
        f.clip_max = [=](const i64* t, const TableSet&) { return (bound - t[ni]) / t[mi]; };
    }
    return f;
}

// t[mi]*t[xi] <= bound, clipping dim xi
Filter f_mul_bound(int mi, int xi, i64 bound, std::string text) {
    Filter f;
    f.kind = Filter::Kind::table_bound;
    f.text = std::move(text);
    f.max_dim = std::max(mi, xi);
    f.test = [=](const i64* t, const TableSet&) { return t[mi] * t[xi] <= bound; };
    if (mi < xi) {
        f.clip_dim = xi;
        f.clip_max = [=](const i64* t, const TableSet&) { return bound / t[mi]; };
    }
    return f;
}

// t[xi]^t[ei] <= bound (ei may equal xi for x^x)
Filter f_pow_bound(int xi, int ei, i64 bound, std::string text) {
    Filter f;
    f.kind = Filter::Kind::table_bound;
    f.text = std::move(text);
    f.max_dim = std::max(xi, ei);
    f.test = [=](const i64* t, const TableSet&) {
        return pow_clamped(u64(t[xi]), u64(t[ei]), u64(bound)) <= u64(bound);
    };
    auto root_clip = [bound](u64 e) {
        if (e <= 1) return i64(bound);
        u64 r = u64(llroundl(powl((long double)bound, 1.0L / (long double)e)));
        while (pow_clamped(r + 1, e, u64(bound)) <= u64(bound)) ++r;
        while (r > 1 && pow_clamped(r, e, u64(bound)) > u64(bound)) --r;
        return i64(r);
    };
    if (ei < xi) {
        f.clip_dim = xi;
        f.clip_max = [=](const i64* t, const TableSet&) { return root_clip(u64(t[ei])); };
    } else if (ei == xi) {
        f.clip_dim = xi;
        f.clip_max = [=](const i64*, const TableSet&) {
            i64 v = 1;
            while (pow_clamped(u64(v + 1), u64(v + 1), u64(bound)) <= u64(bound)) ++v;
            return v;
        };
    }
    return f;
}

// (T[t[bi]])^t[ei] <= 10^cap; clips dim ei when bi < ei
Filter f_mag_tablepow(Fn tbl, int bi, int ei, u32 cap, std::string text) {
    Filter f;
    f.kind = Filter::Kind::magnitude;
    f.text = std::move(text);
    f.max_dim = std::max(bi, ei);
    const ExpCaps& c = cap == 17 ? caps17() : caps307();
    f.test = [=, &c](const i64* t, const TableSet& ts) {
        return c.pow_le(ts.at(tbl, t[bi]), u64(t[ei]));
    };
    if (bi < ei) {
        f.clip_dim = ei;
        f.clip_max = [=, &c](const i64* t, const TableSet& ts) {
            u64 m = c.max_exp(ts.at(tbl, t[bi]));
            return m > u64(std::numeric_limits<i64>::max()) ? std::numeric_limits<i64>::max()
                                                            : i64(m);
        };
    }
    return f;
}

// t[bi]^(T[t[ei]]) <= 10^cap
Filter f_mag_powtable(int bi, Fn tbl, int ei, u32 cap, std::string text) {
    Filter f;
    f.kind = Filter::Kind::magnitude;
    f.text = std::move(text);
    f.max_dim = std::max(bi, ei);
    const ExpCaps& c = cap == 17 ? caps17() : caps307();
    f.test = [=, &c](const i64* t, const TableSet& ts) {
        return c.pow_le(u64(t[bi]), ts.at(tbl, t[ei]));
    };
    return f;
}

// t[bi]^pi(t[ei]) <= 10^cap
Filter f_mag_powpi(int bi, int ei, u32 cap, std::string text) {
    Filter f;
    f.kind = Filter::Kind::magnitude;
    f.text = std::move(text);
    f.max_dim = std::max(bi, ei);
    const ExpCaps& c = cap == 17 ? caps17() : caps307();
    f.test = [=, &c](const i64* t, const TableSet& ts) {
        return c.pow_le(u64(t[bi]), ts.pi_book(t[ei]));
    };
    return f;
}

// pi(t[bi])^t[ei] <= 10^cap
Filter f_mag_pipow(int bi, int ei, u32 cap, std::string text) {
    Filter f;
    f.kind = Filter::Kind::magnitude;
    f.text = std::move(text);
    f.max_dim = std::max(bi, ei);
    const ExpCaps& c = cap == 17 ? caps17() : caps307();
    f.test = [=, &c](const i64* t, const TableSet& ts) {
        return c.pow_le(ts.pi_book(t[bi]), u64(t[ei]));
    };
    return f;
}

Dim dim(std::string name, i64 a, i64 b, i64 r = 1) { return Dim{std::move(name), a, r, b}; }

using Pred = std::function<bool(const i64*, const TableSet&)>;

EquationSpec make(std::string id, std::string form, std::vector<Dim> dims,
                  std::vector<Filter> filters, std::vector<Fn> needs, bool needs_pi, Pred pred) {
    EquationSpec e;
    e.id = std::move(id);
    e.form = std::move(form);
    e.default_domain.dims = std::move(dims);
    e.default_filters = std::move(filters);
    e.needs = std::move(needs);
    e.needs_pi = needs_pi;
    e.predicate = std::move(pred);
    return e;
}

std::vector<EquationSpec> build_registry() {
    std::vector<EquationSpec> R;
    const std::vector<Fn> ETA{Fn::eta};

    // ---- eta equations (2069)-(2095) --------------------------------------
    // Index bounds follow the book's programs: where the program guards the
    // lookup inside the test (q <- k <= last(eta) ^ ...), so do the
    // predicates here; everything else goes through checked access.

    R.push_back(make("2069", "eta(m*x+n) = x",
                     {dim("m", 2, 10), dim("n", 1, 10), dim("x", 1, 16)}, {}, ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         i64 k = t[0] * t[2] + t[1];
                         return k <= i64(ts.limit(Fn::eta)) && i64(ts.raw(Fn::eta, k)) == t[2];
                     }));

    R.push_back(make("2070", "eta(m*x+n) = m+n*x",
                     {dim("m", 2, 20), dim("n", 1, 20), dim("x", 2, 20)}, {}, ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         i64 k = t[0] * t[2] + t[1];
                         return k <= i64(ts.limit(Fn::eta)) &&
                                i64(ts.raw(Fn::eta, k)) == t[0] + t[1] * t[2];
                     }));

    R.push_back(make("2071", "eta(m*x+n) = x!",
                     {dim("m", 2, 15), dim("n", 1, 15), dim("x", 1, 19)}, {}, ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         i64 k = t[0] * t[2] + t[1];
                         return k <= i64(ts.limit(Fn::eta)) &&
                                ts.raw(Fn::eta, k) == factorial(u64(t[2]));
                     }));

    R.push_back(make("2072", "eta(x^m) = x^n",
                     {dim("m", 2, 9), dim("n", 2, 9), dim("x", 2, 10)}, {}, ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         u64 L = ts.limit(Fn::eta);
                         u64 X = pow_clamped(u64(t[2]), u64(t[0]), L);
                         if (X > L) return false;
                         return ts.raw(Fn::eta, i64(X)) == pow_clamped(u64(t[2]), u64(t[1]), L);
                     }));

    R.push_back(make("2073", "eta(x)^m = eta(x^n)",
                     {dim("m", 2, 9), dim("n", 2, 9), dim("x", 2, 25)}, {}, ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         u64 L = ts.limit(Fn::eta);
                         u64 X = pow_clamped(u64(t[2]), u64(t[1]), L);
                         if (X > L) return false;
                         return pow_clamped(ts.raw(Fn::eta, t[2]), u64(t[0]), L) ==
                                ts.raw(Fn::eta, i64(X));
                     }));

    auto pred_2074 = [](int exp_dim) {
        return Pred([exp_dim](const i64* t, const TableSet& ts) {
            i64 k = t[0] * t[2] + t[1];
            u64 L = ts.limit(Fn::eta);
            if (k > i64(L)) return false;
            return ts.raw(Fn::eta, k) == pow_clamped(ts.raw(Fn::eta, t[2]), u64(t[exp_dim]), L);
        });
    };
    R.push_back(make("2074", "eta(m*x+n) = eta(x)^m",
                     {dim("m", 1, 6), dim("n", 1, 9), dim("x", 1, 100000)}, {}, ETA, false,
                     pred_2074(0)));
    R.push_back(make("2074p", "eta(m*x+n) = eta(x)^n",
                     {dim("m", 1, 9), dim("n", 1, 9), dim("x", 1, 100000)}, {}, ETA, false,
                     pred_2074(1)));

    R.push_back(make("2075", "eta(x)+y = x+eta(y), x, y nonprime",
                     {dim("x", 2, 1000), dim("y", 2, 1000)}, {f_less(0, 1, "x < y")}, ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         return ts.nonprime(t[0]) && ts.nonprime(t[1]) &&
                                i64(ts.at(Fn::eta, t[0])) + t[1] ==
                                    t[0] + i64(ts.at(Fn::eta, t[1]));
                     }));

    R.push_back(make("2076", "eta(x)+eta(y) = eta(x+y), x, y nonprime",
                     {dim("x", 4, 1000), dim("y", 4, 1000)}, {f_less(0, 1, "x < y")}, ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         return ts.nonprime(t[0]) && ts.nonprime(t[1]) &&
                                ts.at(Fn::eta, t[0]) + ts.at(Fn::eta, t[1]) ==
                                    ts.at(Fn::eta, t[0] + t[1]);
                     }));

    R.push_back(make("2077", "eta(x+y) = eta(x)*eta(y)",
                     {dim("x", 1, 50000), dim("y", 1, 50000)}, {f_less(0, 1, "x < y")}, ETA,
                     false, [](const i64* t, const TableSet& ts) {
                         return ts.at(Fn::eta, t[0] + t[1]) ==
                                ts.raw(Fn::eta, t[0]) * ts.raw(Fn::eta, t[1]);
                     }));

    R.push_back(make("2077p", "eta(x*y) = eta(x)+eta(y), x, y nonprime",
                     {dim("x", 4, 1000), dim("y", 4, 1000)}, {f_less(0, 1, "x < y")}, ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         return ts.nonprime(t[0]) && ts.nonprime(t[1]) &&
                                ts.at(Fn::eta, t[0] * t[1]) ==
                                    ts.at(Fn::eta, t[0]) + ts.at(Fn::eta, t[1]);
                     }));

    R.push_back(make("2078", "eta(x*y) = eta(x)*eta(y)",
                     {dim("x", 1, 999), dim("y", 2, 1000)}, {f_not_equal(0, 1, "x != y")}, ETA,
                     false, [](const i64* t, const TableSet& ts) {
                         return ts.at(Fn::eta, t[0] * t[1]) ==
                                ts.at(Fn::eta, t[0]) * ts.at(Fn::eta, t[1]);
                     }));

    auto make_2079 = [&](std::string id, std::string form, u64 y) {
        return make(std::move(id), std::move(form),
                    {dim("m", 1, 10), dim("n", 1, 10), dim("x", 1, 10000)}, {}, ETA, false,
                    [y](const i64* t, const TableSet& ts) {
                        i64 k = t[0] * t[2] + t[1];
                        u64 L = ts.limit(Fn::eta);
                        if (k > i64(L)) return false;
                        return ts.raw(Fn::eta, k) == pow_clamped(u64(t[2]), y, L);
                    });
    };
    R.push_back(make_2079("2079", "eta(m*x+n) = x^2", 2));
    R.push_back(make_2079("2079y3", "eta(m*x+n) = x^3", 3));
    R.push_back(make("2079h", "eta(m*x+n) = sqrt(x)",
                     {dim("m", 1, 10), dim("n", 1, 10), dim("x", 1, 10000)}, {}, ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         i64 k = t[0] * t[2] + t[1];
                         if (k > i64(ts.limit(Fn::eta))) return false;
                         u64 r;
                         if (!is_square(u64(t[2]), &r)) return false;
                         return ts.raw(Fn::eta, k) == r;
                     }));

    auto pred_2080 = [](const i64* t, const TableSet& ts) {
        return ts.nonprime(t[0]) && ts.nonprime(t[1]) &&
               ts.at(Fn::eta, t[0]) * u64(t[1]) == u64(t[0]) * ts.at(Fn::eta, t[1]);
    };
    R.push_back(make("2080", "eta(x)*y = x*eta(y), x, y nonprime",
                     {dim("x", 2, 1000), dim("y", 2, 1000)}, {f_less(0, 1, "x < y")}, ETA, false,
                     pred_2080));
    R.push_back(make("2080ap", "eta(x)*y = x*eta(y), x, y nonprime, progressions",
                     {dim("x", 2, 3000, 111), dim("y", 3, 20000, 203)}, {}, ETA, false,
                     pred_2080));

    R.push_back(make("2081", "eta(x)*eta(y) = x*y, x, y nonprime",
                     {dim("x", 2, 10000), dim("y", 2, 10000)}, {f_less(0, 1, "x < y")}, ETA,
                     false, [](const i64* t, const TableSet& ts) {
                         return ts.nonprime(t[0]) && ts.nonprime(t[1]) &&
                                ts.at(Fn::eta, t[0]) * ts.at(Fn::eta, t[1]) ==
                                    u64(t[0]) * u64(t[1]);
                     }));

    R.push_back(make("2082", "eta(x)^y = x^eta(y), x, y nonprime",
                     {dim("x", 2, 64), dim("y", 2, 80)}, {}, ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         return ts.nonprime(t[0]) && ts.nonprime(t[1]) &&
                                eq_pow(ts.at(Fn::eta, t[0]), u64(t[1]), u64(t[0]),
                                       ts.at(Fn::eta, t[1]));
                     }));

    R.push_back(make("2083", "eta(x)^eta(y) = eta(x^y)",
                     {dim("x", 2, 100), dim("y", 2, 120)}, {f_less(0, 1, "x < y")}, ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         u64 L = ts.limit(Fn::eta);
                         u64 X = pow_clamped(u64(t[0]), u64(t[1]), L);
                         if (X > L) return false;
                         return pow_clamped(ts.raw(Fn::eta, t[0]), ts.raw(Fn::eta, t[1]), L) ==
                                ts.raw(Fn::eta, i64(X));
                     }));

    auto make_2084 = [&](std::string id, i64 k) {
        return make(
            std::move(id), "eta(x^y) - eta(z^w) = " + std::to_string(k),
            {dim("x", 2, 10), dim("y", 2, 10), dim("z", 2, 10), dim("w", 2, 10)},
            {f_pow_bound(0, 1, TBL, "x^y <= 10^6"), f_not_equal(0, 2, "x != z"),
             f_pow_bound(2, 3, TBL, "z^w <= 10^6")},
            ETA, false, [k](const i64* t, const TableSet& ts) {
                u64 X = pow_clamped(u64(t[0]), u64(t[1]), u64(TBL));
                u64 Z = pow_clamped(u64(t[2]), u64(t[3]), u64(TBL));
                return i64(ts.at(Fn::eta, i64(X))) - i64(ts.at(Fn::eta, i64(Z))) == k;
            });
    };
    R.push_back(make_2084("2084", 0));
    for (i64 k = 1; k <= 5; ++k) R.push_back(make_2084("2084k" + std::to_string(k), k));

    R.push_back(make("2084k23", "eta(x^y) - eta(z^w) = 23, pairwise distinct",
                     {dim("x", 2, 10), dim("y", 2, 10), dim("z", 2, 10), dim("w", 2, 10)},
                     {f_pow_bound(0, 1, TBL, "x^y <= 10^6"),
                      f_pow_bound(2, 3, TBL, "z^w <= 10^6")},
                     ETA, false, [](const i64* t, const TableSet& ts) {
                         for (int i = 0; i < 4; ++i)
                             for (int j = i + 1; j < 4; ++j)
                                 if (t[i] == t[j]) return false;
                         u64 X = pow_clamped(u64(t[0]), u64(t[1]), u64(TBL));
                         u64 Z = pow_clamped(u64(t[2]), u64(t[3]), u64(TBL));
                         return i64(ts.at(Fn::eta, i64(X))) - i64(ts.at(Fn::eta, i64(Z))) == 23;
                     }));

    R.push_back(make("2085", "eta(x^y) - y = k",
                     {dim("x", 2, 100), dim("y", 2, 100), dim("k", 0, 10)},
                     {f_pow_bound(0, 1, TBL, "x^y <= 10^6")}, ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         u64 X = pow_clamped(u64(t[0]), u64(t[1]), u64(TBL));
                         return i64(ts.at(Fn::eta, i64(X))) - t[1] == t[2];
                     }));

    R.push_back(make("2086", "eta(x^x) = y^y", {dim("x", 1, 100), dim("y", 1, 100)},
                     {f_pow_bound(0, 0, TBL, "x^x <= 10^6")}, ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         u64 X = pow_clamped(u64(t[0]), u64(t[0]), u64(TBL));
                         return ts.at(Fn::eta, i64(X)) ==
                                pow_clamped(u64(t[1]), u64(t[1]), u64(TBL));
                     }));

    R.push_back(make("2087", "eta(x^y) = y^x", {dim("x", 1, 100), dim("y", 1, 100)},
                     {f_pow_bound(0, 1, TBL, "x^y <= 10^6")}, ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         u64 X = pow_clamped(u64(t[0]), u64(t[1]), u64(TBL));
                         return ts.at(Fn::eta, i64(X)) ==
                                pow_clamped(u64(t[1]), u64(t[0]), u64(TBL));
                     }));

    R.push_back(make("2088", "eta(x) = y!", {dim("x", 1, TBL), dim("y", 1, 19)}, {}, ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         return ts.at(Fn::eta, t[0]) == factorial(u64(t[1]));
                     }));

    R.push_back(make("2089", "eta(m*x) = m*eta(x)", {dim("m", 2, 100), dim("x", 2, TBL)},
                     {f_mul_bound(0, 1, TBL, "m*x <= 10^6")}, ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         return ts.at(Fn::eta, t[0] * t[1]) == u64(t[0]) * ts.at(Fn::eta, t[1]);
                     }));

    {
        Filter mag;
        mag.kind = Filter::Kind::magnitude;
        mag.text = "m^eta(x) + eta(x)^n <= 10^17";
        mag.max_dim = 2;
        mag.test = [](const i64* t, const TableSet& ts) {
            u64 e = ts.at(Fn::eta, t[2]);
            if (!caps17().pow_le(u64(t[0]), e) || !caps17().pow_le(e, u64(t[1]))) return false;
            u64 A = pow_clamped(u64(t[0]), e, CAP17);
            u64 B = pow_clamped(e, u64(t[1]), CAP17);
            return A + B <= CAP17;
        };
        R.push_back(make("2090", "m^eta(x) + eta(x)^n = m^n",
                         {dim("m", 2, 100), dim("n", 2, 100), dim("x", 2, 10000)}, {mag}, ETA,
                         false, [](const i64* t, const TableSet& ts) {
                             u64 e = ts.at(Fn::eta, t[2]);
                             u64 A = pow_clamped(u64(t[0]), e, CAP17);
                             u64 B = pow_clamped(e, u64(t[1]), CAP17);
                             return A + B == pow_clamped(u64(t[0]), u64(t[1]), 2 * CAP17);
                         }));
    }

    auto make_2091 = [&](std::string id, std::string form, bool plus) {
        return make(std::move(id), std::move(form),
                    {dim("m", 1, 10), dim("n", 1, 10), dim("x", 2, 1000), dim("y", 2, 1000)},
                    {f_not_equal(0, 1, "m != n"), f_not_equal(2, 3, "x != y")}, ETA, false,
                    [plus](const i64* t, const TableSet& ts) {
                        i64 ex = i64(ts.at(Fn::eta, t[2] * t[2]));
                        i64 ey = i64(ts.at(Fn::eta, t[3] * t[3]));
                        i64 lhs = plus ? t[1] * ex + t[0] * ey : t[1] * ex - t[0] * ey;
                        return lhs == t[0] * t[1];
                    });
    };
    R.push_back(make_2091("2091", "n*eta(x^2) - m*eta(y^2) = m*n", false));
    R.push_back(make_2091("2091p", "n*eta(x^2) + m*eta(y^2) = m*n", true));

    R.push_back(make("2092a", "eta(x1^2) + eta(x2^3) = eta(x1)^2 + eta(x2)^3",
                     {dim("x1", 2, 1000), dim("x2", 2, 100)}, {}, ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         u64 e1 = ts.at(Fn::eta, t[0]), e2 = ts.at(Fn::eta, t[1]);
                         return ts.at(Fn::eta, t[0] * t[0]) + ts.at(Fn::eta, t[1] * t[1] * t[1]) ==
                                e1 * e1 + e2 * e2 * e2;
                     }));
    R.push_back(make("2092b", "eta(x1) + eta(x2^2) + eta(x3^4) = eta(x1) + eta(x2)^2 + eta(x3)^4",
                     {dim("x1", 2, 10000), dim("x2", 2, 1000), dim("x3", 2, 31)}, {}, ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         u64 e2 = ts.at(Fn::eta, t[1]), e3 = ts.at(Fn::eta, t[2]);
                         i64 q3 = t[2] * t[2];
                         return ts.at(Fn::eta, t[0]) + ts.at(Fn::eta, t[1] * t[1]) +
                                    ts.at(Fn::eta, q3 * q3) ==
                                ts.at(Fn::eta, t[0]) + e2 * e2 + e3 * e3 * e3 * e3;
                     }));

    R.push_back(make("2093", "eta(x!) + eta(y!) = eta(x)! + eta(y)!",
                     {dim("x", 2, 9), dim("y", 2, 9)}, {f_less(0, 1, "x < y")}, ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         return ts.at(Fn::eta, i64(factorial(u64(t[0])))) +
                                    ts.at(Fn::eta, i64(factorial(u64(t[1])))) ==
                                factorial(ts.at(Fn::eta, t[0])) +
                                    factorial(ts.at(Fn::eta, t[1]));
                     }));

    auto gcd_filters = [&]() {
        return std::vector<Filter>{f_less(0, 1, "x < y"), f_nonprime(0, "x nonprime"),
                                   f_nonprime(1, "y nonprime"),
                                   f_not_coprime(0, 1, "gcd(x,y) != 1")};
    };
    R.push_back(make("2094", "gcd(x,y) = gcd(eta(x),eta(y)), x, y nonprime",
                     {dim("x", 2, 1000), dim("y", 2, 1000)}, gcd_filters(), ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         return std::gcd(t[0], t[1]) ==
                                i64(std::gcd(ts.at(Fn::eta, t[0]), ts.at(Fn::eta, t[1])));
                     }));
    R.push_back(make("2095", "lcm(x,y) = lcm(eta(x),eta(y)), x, y nonprime",
                     {dim("x", 2, 1000), dim("y", 2, 1000)}, gcd_filters(), ETA, false,
                     [](const i64* t, const TableSet& ts) {
                         return std::lcm(u64(t[0]), u64(t[1])) ==
                                std::lcm(ts.at(Fn::eta, t[0]), ts.at(Fn::eta, t[1]));
                     }));

    // ---- eta-s equations (2124)-(2130) -------------------------------------

    R.push_back(make("2124", "eta(x) = s(m*x+n)",
                     {dim("m", 1, 10), dim("n", 1, 10), dim("x", 1, TBL)},
                     {f_coprime(0, 1, "gcd(m,n) = 1"),
                      f_affine_bound(0, 1, 2, TBL, "m*x+n <= 10^6")},
                     {Fn::eta, Fn::s}, false, [](const i64* t, const TableSet& ts) {
                         return ts.at(Fn::eta, t[2]) == ts.at(Fn::s, t[0] * t[2] + t[1]);
                     }));

    R.push_back(make("2125", "eta(x)^m = s(x^n)",
                     {dim("m", 1, 10), dim("n", 1, 10), dim("x", 2, TBL)},
                     {f_mag_tablepow(Fn::eta, 2, 0, 17, "eta(x)^m < 10^17"),
                      f_pow_bound(2, 1, TBL, "x^n <= 10^6")},
                     {Fn::eta, Fn::s}, false, [](const i64* t, const TableSet& ts) {
                         u64 X = pow_clamped(u64(t[2]), u64(t[1]), u64(TBL));
                         u64 rhs = ts.at(Fn::s, i64(X));
                         return pow_clamped(ts.at(Fn::eta, t[2]), u64(t[0]), rhs + 1) == rhs;
                     }));

    R.push_back(make("2126", "eta(x)+y = x+s(y), gcd(x,y) = 1",
                     {dim("x", 2, TBL, 113), dim("y", 3, TBL, 127)},
                     {f_coprime(0, 1, "gcd(x,y) = 1")}, {Fn::eta, Fn::s}, false,
                     [](const i64* t, const TableSet& ts) {
                         return i64(ts.at(Fn::eta, t[0])) + t[1] == t[0] + i64(ts.at(Fn::s, t[1]));
                     }));

    R.push_back(make("2127", "eta(x)*y = x*s(y), gcd(x,y) = 1",
                     {dim("x", 100, 200), dim("y", 1, 100000)}, {f_coprime(0, 1, "gcd(x,y) = 1")},
                     {Fn::eta, Fn::s}, false, [](const i64* t, const TableSet& ts) {
                         return ts.at(Fn::eta, t[0]) * u64(t[1]) == u64(t[0]) * ts.at(Fn::s, t[1]);
                     }));

    R.push_back(make("2128", "eta(x)*s(y) = x*y, gcd(x,y) = 1",
                     {dim("x", 2, 100), dim("y", 6, 8128)}, {f_coprime(0, 1, "gcd(x,y) = 1")},
                     {Fn::eta, Fn::s}, false, [](const i64* t, const TableSet& ts) {
                         return ts.at(Fn::eta, t[0]) * ts.at(Fn::s, t[1]) == u64(t[0]) * u64(t[1]);
                     }));

    R.push_back(make("2129", "eta(x)^y = x^s(y), gcd(x,y) = 1",
                     {dim("x", 2, 1000), dim("y", 2, 1000)},
                     {f_coprime(0, 1, "gcd(x,y) = 1"),
                      f_mag_tablepow(Fn::eta, 0, 1, 307, "eta(x)^y <= 10^307"),
                      f_mag_powtable(0, Fn::s, 1, 307, "x^s(y) <= 10^307")},
                     {Fn::eta, Fn::s}, false, [](const i64* t, const TableSet& ts) {
                         return eq_pow(ts.at(Fn::eta, t[0]), u64(t[1]), u64(t[0]),
                                       ts.at(Fn::s, t[1]));
                     }));

    R.push_back(make("2130", "eta(x)^y = s(y)^x, gcd(x,y) = 1",
                     {dim("x", 2, TBL), dim("y", 1, TBL)},
                     {f_coprime(0, 1, "gcd(x,y) = 1"),
                      f_mag_tablepow(Fn::eta, 0, 1, 307, "eta(x)^y <= 10^307"),
                      f_mag_tablepow(Fn::s, 1, 0, 307, "s(y)^x <= 10^307")},
                     {Fn::eta, Fn::s}, false, [](const i64* t, const TableSet& ts) {
                         return eq_pow(ts.at(Fn::eta, t[0]), u64(t[1]), ts.at(Fn::s, t[1]),
                                       u64(t[0]));
                     }));

    // ---- eta-pi equations (2152)-(2158) -------------------------------------

    R.push_back(make("2152", "eta(x) = pi(m*x+n)",
                     {dim("m", 2, 20), dim("n", 2, 20), dim("x", 1, 1000)},
                     {f_coprime(0, 1, "gcd(m,n) = 1"),
                      f_affine_bound(0, 1, 2, TBL, "m*x+n <= 10^6"),
                      f_nonprime(2, "x nonprime")},
                     ETA, true, [](const i64* t, const TableSet& ts) {
                         return ts.at(Fn::eta, t[2]) == ts.pi_book(t[0] * t[2] + t[1]);
                     }));

    R.push_back(make("2153", "eta(x)^m = pi(x^n)",
                     {dim("m", 2, 10), dim("n", 2, 10), dim("x", 2, 1000)},
                     {f_pow_bound(2, 1, TBL, "x^n <= 10^6")}, ETA, true,
                     [](const i64* t, const TableSet& ts) {
                         u64 X = pow_clamped(u64(t[2]), u64(t[1]), u64(TBL));
                         u64 rhs = ts.pi_book(i64(X));
                         return pow_clamped(ts.at(Fn::eta, t[2]), u64(t[0]), rhs + 1) == rhs;
                     }));

    R.push_back(make("2154", "eta(x)+y = x+pi(y)", {dim("x", 2, 1000, 3), dim("y", 2, 1000, 5)},
                     {}, ETA, true, [](const i64* t, const TableSet& ts) {
                         return i64(ts.at(Fn::eta, t[0])) + t[1] == t[0] + i64(ts.pi_book(t[1]));
                     }));

    R.push_back(make("2155", "eta(x)*y = x*pi(y), x != y",
                     {dim("x", 2, 1000), dim("y", 2, 1000)}, {}, ETA, true,
                     [](const i64* t, const TableSet& ts) {
                         return t[0] != t[1] &&
                                ts.at(Fn::eta, t[0]) * u64(t[1]) == u64(t[0]) * ts.pi_book(t[1]);
                     }));

    R.push_back(make("2156", "eta(x)*pi(y) = x*y", {dim("x", 2, 1000), dim("y", 2, 1000)}, {},
                     ETA, true, [](const i64* t, const TableSet& ts) {
                         return ts.at(Fn::eta, t[0]) * ts.pi_book(t[1]) == u64(t[0]) * u64(t[1]);
                     }));

    R.push_back(make("2157", "eta(x)^y = x^pi(y), gcd(x,y) = 1",
                     {dim("x", 2, 1000), dim("y", 2, 1000)},
                     {f_mag_tablepow(Fn::eta, 0, 1, 307, "eta(x)^y <= 10^307"),
                      f_mag_powpi(0, 1, 307, "x^pi(y) <= 10^307"),
                      f_coprime(0, 1, "gcd(x,y) = 1")},
                     ETA, true, [](const i64* t, const TableSet& ts) {
                         return eq_pow(ts.at(Fn::eta, t[0]), u64(t[1]), u64(t[0]), ts.pi_book(t[1]));
                     }));

    R.push_back(make("2158", "eta(x)^y = pi(y)^x, gcd(x,y) = 1",
                     {dim("x", 2, 1000), dim("y", 2, 1000)},
                     {f_mag_tablepow(Fn::eta, 0, 1, 307, "eta(x)^y <= 10^307"),
                      f_mag_pipow(1, 0, 307, "pi(y)^x <= 10^307"),
                      f_coprime(0, 1, "gcd(x,y) = 1")},
                     ETA, true, [](const i64* t, const TableSet& ts) {
                         return eq_pow(ts.at(Fn::eta, t[0]), u64(t[1]), ts.pi_book(t[1]), u64(t[0]));
                     }));

    // ---- eta-sigma_k equations (2166)-(2172) --------------------------------

    auto sigma_of = [](int k) { return k == 0 ? Fn::sigma0 : k == 1 ? Fn::sigma1 : Fn::sigma2; };

    for (int k = 0; k <= 2; ++k) {
        Fn fk = sigma_of(k);
        std::string id = k == 0 ? "2166" : "2166k" + std::to_string(k);
        R.push_back(make(id, "eta(x) = sigma" + std::to_string(k) + "(m*x+n)",
                         {dim("m", 1, 10), dim("n", 1, 10), dim("x", 1, TBL)},
                         {f_affine_bound(0, 1, 2, TBL, "m*x+n <= 10^6")}, {Fn::eta, fk}, false,
                         [fk](const i64* t, const TableSet& ts) {
                             return ts.at(Fn::eta, t[2]) == ts.at(fk, t[0] * t[2] + t[1]);
                         }));
    }
    R.push_back(make("2166r", "eta(x) = sigma0(m*x+n), gcd(m,n) = 1, x in progression",
                     {dim("m", 1, 10), dim("n", 1, 10), dim("x", 1, TBL, 113)},
                     {f_coprime(0, 1, "gcd(m,n) = 1"),
                      f_affine_bound(0, 1, 2, TBL, "m*x+n <= 10^6")},
                     {Fn::eta, Fn::sigma0}, false, [](const i64* t, const TableSet& ts) {
                         return ts.at(Fn::eta, t[2]) == ts.at(Fn::sigma0, t[0] * t[2] + t[1]);
                     }));
    for (int k = 1; k <= 2; ++k) {
        Fn fk = sigma_of(k);
        std::string id = std::string("2166s") + (k == 1 ? "" : "2");
        R.push_back(make(id, "eta(m*x+n) = sigma" + std::to_string(k) + "(x)",
                         {dim("m", 1, 10), dim("n", 1, 10), dim("x", 1, TBL)},
                         {f_coprime(0, 1, "gcd(m,n) = 1"),
                          f_affine_bound(0, 1, 2, TBL, "m*x+n <= 10^6")},
                         {Fn::eta, fk}, false, [fk](const i64* t, const TableSet& ts) {
                             return ts.at(Fn::eta, t[0] * t[2] + t[1]) == ts.at(fk, t[2]);
                         }));
    }

    for (int k = 0; k <= 2; ++k) {
        Fn fk = sigma_of(k);
        std::string id = k == 0 ? "2167" : "2167k" + std::to_string(k);
        i64 xa = k == 0 ? 2 : 1;
        R.push_back(make(id, "eta(x)^m = sigma" + std::to_string(k) + "(x^n)",
                         {dim("m", 1, 10), dim("n", 1, 10), dim("x", xa, TBL)},
                         {f_not_equal(0, 1, "m != n"), f_pow_bound(2, 1, TBL, "x^n <= 10^6")},
                         {Fn::eta, fk}, false, [fk](const i64* t, const TableSet& ts) {
                             u64 X = pow_clamped(u64(t[2]), u64(t[1]), u64(TBL));
                             u64 rhs = ts.at(fk, i64(X));
                             return pow_clamped(ts.at(Fn::eta, t[2]), u64(t[0]), rhs + 1) == rhs;
                         }));
    }

    for (int k = 0; k <= 2; ++k) {
        Fn fk = sigma_of(k);
        std::string id = k == 0 ? "2168" : "2168k" + std::to_string(k);
        i64 a = k == 0 ? 2 : 1;
        R.push_back(make(id, "eta(x)+y = x+sigma" + std::to_string(k) + "(y)",
                         {dim("x", a, 10000), dim("y", a, 10000)}, {}, {Fn::eta, fk}, false,
                         [fk](const i64* t, const TableSet& ts) {
                             return i64(ts.at(Fn::eta, t[0])) + t[1] ==
                                    t[0] + i64(ts.at(fk, t[1]));
                         }));
    }
    R.push_back(make("2168ap", "eta(x)+y = x+sigma0(y), progressions",
                     {dim("x", 2, TBL, 503), dim("y", 3, TBL, 601)}, {}, {Fn::eta, Fn::sigma0},
                     false, [](const i64* t, const TableSet& ts) {
                         return i64(ts.at(Fn::eta, t[0])) + t[1] ==
                                t[0] + i64(ts.at(Fn::sigma0, t[1]));
                     }));

    for (int k = 0; k <= 2; ++k) {
        Fn fk = sigma_of(k);
        std::string id = k == 0 ? "2169" : "2169k" + std::to_string(k);
        R.push_back(make(id, "eta(x)*y = x*sigma" + std::to_string(k) + "(y)",
                         {dim("x", 2, TBL, 113), dim("y", 3, TBL, 127)},
                         {f_not_equal(0, 1, "x != y")}, {Fn::eta, fk}, false,
                         [fk](const i64* t, const TableSet& ts) {
                             return ts.at(Fn::eta, t[0]) * u64(t[1]) ==
                                    u64(t[0]) * ts.at(fk, t[1]);
                         }));
    }

    for (int k = 0; k <= 2; ++k) {
        Fn fk = sigma_of(k);
        std::string id = k == 1 ? "2170" : "2170k" + std::to_string(k);
        std::vector<Filter> fl;
        if (k >= 1) fl.push_back(f_coprime(0, 1, "gcd(x,y) = 1"));
        R.push_back(make(id, "eta(x)*sigma" + std::to_string(k) + "(y) = x*y",
                         {dim("x", 2, 10000), dim("y", 3, 10000)}, fl, {Fn::eta, fk}, false,
                         [fk](const i64* t, const TableSet& ts) {
                             return ts.at(Fn::eta, t[0]) * ts.at(fk, t[1]) ==
                                    u64(t[0]) * u64(t[1]);
                         }));
    }

    for (int k = 0; k <= 2; ++k) {
        Fn fk = sigma_of(k);
        std::string id = k == 0 ? "2171" : "2171k" + std::to_string(k);
        i64 b = k == 0 ? 10000 : 100000;
        R.push_back(make(id, "eta(x)^y = x^sigma" + std::to_string(k) + "(y)",
                         {dim("x", 2, b), dim("y", 3, b)},
                         {f_mag_tablepow(Fn::eta, 0, 1, 307, "eta(x)^y <= 10^307"),
                          f_mag_powtable(0, fk, 1, 307,
                                         "x^sigma" + std::to_string(k) + "(y) <= 10^307")},
                         {Fn::eta, fk}, false, [fk](const i64* t, const TableSet& ts) {
                             return eq_pow(ts.at(Fn::eta, t[0]), u64(t[1]), u64(t[0]),
                                           ts.at(fk, t[1]));
                         }));
    }

    for (int k = 0; k <= 2; ++k) {
        Fn fk = sigma_of(k);
        std::string id = k == 0 ? "2172" : "2172k" + std::to_string(k);
        // the (sigma_k(y))^x guard bounds x through the least base over the
        // y range: sigma0 >= 2, sigma1 >= 4, sigma2 >= 10 for y >= 3
        u64 minbase = k == 0 ? 2 : k == 1 ? 4 : 10;
        Filter g2;
        g2.kind = Filter::Kind::magnitude;
        g2.text = "sigma" + std::to_string(k) + "(y)^x <= 10^307";
        g2.max_dim = 1;
        g2.test = [fk](const i64* t, const TableSet& ts) {
            return caps307().pow_le(ts.at(fk, t[1]), u64(t[0]));
        };
        g2.clip_dim = 0;
        i64 xcap = i64(caps307().max_exp(minbase));
        g2.clip_max = [xcap](const i64*, const TableSet&) { return xcap; };
        R.push_back(make(id, "eta(x)^y = sigma" + std::to_string(k) + "(y)^x",
                         {dim("x", 2, TBL), dim("y", 3, TBL)},
                         {f_mag_tablepow(Fn::eta, 0, 1, 307, "eta(x)^y <= 10^307"), g2},
                         {Fn::eta, fk}, false, [fk](const i64* t, const TableSet& ts) {
                             return eq_pow(ts.at(Fn::eta, t[0]), u64(t[1]), ts.at(fk, t[1]),
                                           u64(t[0]));
                         }));
    }

    // ---- eta-phi equations (2187)-(2193) ------------------------------------

    R.push_back(make("2187", "eta(x) = phi(m*x+n)",
                     {dim("m", 1, 10), dim("n", 1, 10), dim("x", 1, TBL)},
                     {f_coprime(0, 1, "gcd(m,n) = 1"),
                      f_affine_bound(0, 1, 2, TBL, "m*x+n <= 10^6")},
                     {Fn::eta, Fn::phi}, false, [](const i64* t, const TableSet& ts) {
                         return ts.at(Fn::eta, t[2]) == ts.at(Fn::phi, t[0] * t[2] + t[1]);
                     }));
    R.push_back(make("2187p", "eta(m*x+n) = phi(x)",
                     {dim("m", 1, 10), dim("n", 1, 10), dim("x", 1, TBL)},
                     {f_coprime(0, 1, "gcd(m,n) = 1"),
                      f_affine_bound(0, 1, 2, TBL, "m*x+n <= 10^6")},
                     {Fn::eta, Fn::phi}, false, [](const i64* t, const TableSet& ts) {
                         return ts.at(Fn::eta, t[0] * t[2] + t[1]) == ts.at(Fn::phi, t[2]);
                     }));

    R.push_back(make("2188", "eta(x)^m = phi(x^n)",
                     {dim("m", 2, 10), dim("n", 2, 10), dim("x", 2, TBL)},
                     {f_coprime(0, 1, "gcd(m,n) = 1"), f_pow_bound(2, 1, TBL, "x^n <= 10^6"),
                      f_mag_tablepow(Fn::eta, 2, 1, 17, "eta(x)^n < 10^17")},
                     {Fn::eta, Fn::phi}, false, [](const i64* t, const TableSet& ts) {
                         u64 X = pow_clamped(u64(t[2]), u64(t[1]), u64(TBL));
                         u64 rhs = ts.at(Fn::phi, i64(X));
                         return pow_clamped(ts.at(Fn::eta, t[2]), u64(t[0]), rhs + 1) == rhs;
                     }));

    R.push_back(make("2189", "eta(x)+y = x+phi(y)", {dim("x", 2, TBL, 113), dim("y", 3, TBL, 127)},
                     {}, {Fn::eta, Fn::phi}, false, [](const i64* t, const TableSet& ts) {
                         return i64(ts.at(Fn::eta, t[0])) + t[1] ==
                                t[0] + i64(ts.at(Fn::phi, t[1]));
                     }));

    R.push_back(make("2190", "eta(x)*y = x*phi(y), gcd(x,y) = 1",
                     {dim("x", 2, 10000), dim("y", 3, 10000)}, {f_coprime(0, 1, "gcd(x,y) = 1")},
                     {Fn::eta, Fn::phi}, false, [](const i64* t, const TableSet& ts) {
                         return ts.at(Fn::eta, t[0]) * u64(t[1]) ==
                                u64(t[0]) * ts.at(Fn::phi, t[1]);
                     }));

    R.push_back(make("2191", "eta(x)*phi(y) = x*y, gcd(x,y) = 1",
                     {dim("x", 2, 10000), dim("y", 3, 10000)}, {f_coprime(0, 1, "gcd(x,y) = 1")},
                     {Fn::eta, Fn::phi}, false, [](const i64* t, const TableSet& ts) {
                         return ts.at(Fn::eta, t[0]) * ts.at(Fn::phi, t[1]) ==
                                u64(t[0]) * u64(t[1]);
                     }));

    R.push_back(make("2192", "eta(x)^y = x^phi(y), gcd(x,y) = 1",
                     {dim("x", 2, 10000), dim("y", 3, 10000)},
                     {f_coprime(0, 1, "gcd(x,y) = 1"),
                      f_mag_tablepow(Fn::eta, 0, 1, 307, "eta(x)^y <= 10^307"),
                      f_mag_powtable(0, Fn::phi, 1, 307, "x^phi(y) <= 10^307")},
                     {Fn::eta, Fn::phi}, false, [](const i64* t, const TableSet& ts) {
                         return eq_pow(ts.at(Fn::eta, t[0]), u64(t[1]), u64(t[0]),
                                       ts.at(Fn::phi, t[1]));
                     }));

    R.push_back(make("2193", "eta(x)^y = phi(y)^x, gcd(x,y) = 1",
                     {dim("x", 2, 10000), dim("y", 3, 10000)},
                     {f_coprime(0, 1, "gcd(x,y) = 1"),
                      f_mag_tablepow(Fn::eta, 0, 1, 307, "eta(x)^y <= 10^307"),
                      f_mag_tablepow(Fn::phi, 1, 0, 307, "phi(y)^x <= 10^307")},
                     {Fn::eta, Fn::phi}, false, [](const i64* t, const TableSet& ts) {
                         return eq_pow(ts.at(Fn::eta, t[0]), u64(t[1]), ts.at(Fn::phi, t[1]),
                                       u64(t[0]));
                     }));

    // ---- Guy type equations -------------------------------------------------

    auto guy = [&](std::string id, std::string form, std::vector<Fn> needs, bool needs_pi,
                   std::vector<Filter> fl, Pred p, i64 a = 1, i64 b = TBL) {
        R.push_back(make(std::move(id), std::move(form), {dim("x", a, b)}, std::move(fl),
                         std::move(needs), needs_pi, std::move(p)));
    };

    guy("guy1", "eta(phi(x)) = x", {Fn::eta, Fn::phi}, false, {},
        [](const i64* t, const TableSet& ts) {
            return i64(ts.at(Fn::eta, i64(ts.at(Fn::phi, t[0])))) == t[0];
        });
    guy("guy2", "phi(eta(x)) = x", {Fn::eta, Fn::phi}, false, {},
        [](const i64* t, const TableSet& ts) {
            return i64(ts.at(Fn::phi, i64(ts.at(Fn::eta, t[0])))) == t[0];
        });
    guy("guy3", "eta(phi(x)) = phi(eta(x))", {Fn::eta, Fn::phi}, false, {},
        [](const i64* t, const TableSet& ts) {
            return ts.at(Fn::eta, i64(ts.at(Fn::phi, t[0]))) ==
                   ts.at(Fn::phi, i64(ts.at(Fn::eta, t[0])));
        });
    guy("guy4", "eta(sigma0(x)) = x", {Fn::eta, Fn::sigma0}, false, {},
        [](const i64* t, const TableSet& ts) {
            return i64(ts.at(Fn::eta, i64(ts.at(Fn::sigma0, t[0])))) == t[0];
        });
    guy("guy5", "sigma0(eta(x)) = x", {Fn::eta, Fn::sigma0}, false, {},
        [](const i64* t, const TableSet& ts) {
            return i64(ts.at(Fn::sigma0, i64(ts.at(Fn::eta, t[0])))) == t[0];
        });
    guy("guy6", "eta(sigma0(x)) = sigma0(eta(x))", {Fn::eta, Fn::sigma0}, false, {},
        [](const i64* t, const TableSet& ts) {
            return ts.at(Fn::eta, i64(ts.at(Fn::sigma0, t[0]))) ==
                   ts.at(Fn::sigma0, i64(ts.at(Fn::eta, t[0])));
        });

    Filter sigma_in_range{
        Filter::Kind::table_bound,
        "sigma(x) <= 10^6",
        0,
        [](const i64* t, const TableSet& ts) { return ts.at(Fn::sigma1, t[0]) <= u64(TBL); },
        -1,
        nullptr};
    guy("guy7", "eta(sigma(x)) = x", {Fn::eta, Fn::sigma1}, false, {sigma_in_range},
        [](const i64* t, const TableSet& ts) {
            return i64(ts.at(Fn::eta, i64(ts.at(Fn::sigma1, t[0])))) == t[0];
        });
    guy("guy8", "sigma(eta(x)) = x", {Fn::eta, Fn::sigma1}, false, {},
        [](const i64* t, const TableSet& ts) {
            return i64(ts.at(Fn::sigma1, i64(ts.at(Fn::eta, t[0])))) == t[0];
        });
    guy("guy9", "eta(sigma(x)) = sigma(eta(x))", {Fn::eta, Fn::sigma1}, false, {sigma_in_range},
        [](const i64* t, const TableSet& ts) {
            return ts.at(Fn::eta, i64(ts.at(Fn::sigma1, t[0]))) ==
                   ts.at(Fn::sigma1, i64(ts.at(Fn::eta, t[0])));
        });

    Filter s_in_range{Filter::Kind::table_bound,
                      "1 <= s(x) <= 10^6",
                      0,
                      [](const i64* t, const TableSet& ts) {
                          u64 v = ts.at(Fn::s, t[0]);
                          return v >= 1 && v <= u64(TBL);
                      },
                      -1,
                      nullptr};
    guy(
        "guy10", "eta(s(x)) = x", {Fn::eta, Fn::s}, false, {s_in_range},
        [](const i64* t, const TableSet& ts) {
            return i64(ts.at(Fn::eta, i64(ts.at(Fn::s, t[0])))) == t[0];
        },
        2);
    guy("guy11", "s(eta(x)) = x", {Fn::eta, Fn::s}, false, {},
        [](const i64* t, const TableSet& ts) {
            return i64(ts.at(Fn::s, i64(ts.at(Fn::eta, t[0])))) == t[0];
        });
    guy(
        "guy12", "eta(s(x)) = s(eta(x))", {Fn::eta, Fn::s}, false, {s_in_range},
        [](const i64* t, const TableSet& ts) {
            return ts.at(Fn::eta, i64(ts.at(Fn::s, t[0]))) ==
                   ts.at(Fn::s, i64(ts.at(Fn::eta, t[0])));
        },
        2);

    guy(
        "guy13", "eta(pi(x)) = x, x nonprime", {Fn::eta}, true,
        {f_nonprime(0, "x nonprime")},
        [](const i64* t, const TableSet& ts) {
            return i64(ts.at(Fn::eta, i64(ts.pi_book(t[0])))) == t[0];
        },
        4, 1000);
    guy(
        "guy14", "pi(eta(x)) = x, x nonprime", {Fn::eta}, true,
        {f_nonprime(0, "x nonprime")},
        [](const i64* t, const TableSet& ts) {
            return i64(ts.pi_book(i64(ts.at(Fn::eta, t[0])))) == t[0];
        },
        4, 1000);
    guy(
        "guy15", "eta(pi(x)) = pi(eta(x)), x nonprime", {Fn::eta}, true,
        {f_nonprime(0, "x nonprime")},
        [](const i64* t, const TableSet& ts) {
            return ts.at(Fn::eta, i64(ts.pi_book(t[0]))) == ts.pi_book(i64(ts.at(Fn::eta, t[0])));
        },
        4, 1000);

    return R;
}

}  // namespace

const std::vector<EquationSpec>& registry() {
    static const std::vector<EquationSpec> R = build_registry();
    return R;
}

}  // namespace dfn
