#include "dfn/dioph_linear.hpp"

#include <algorithm>
#include <stdexcept>

#include "dfn/factorint.hpp"

namespace dfn {

namespace {

mpz_class ceil_div(const mpz_class& num, const mpz_class& den) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

std::optional<Linear2Solution> solve_linear2(const mpz_class& a, const mpz_class& b,
                                             const mpz_class& c) {
    if (a <= 0 || b <= 0) throw std::domain_error("solve_linear2: a, b must be positive");
    mpz_class g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (c % g != 0) return std::nullopt;
    // a*u + b*v = g; a*x - b*y = c with x = u*c/g, y = -v*c/g
    mpz_class q = c / g;
    mpz_class x0 = u * q, y0 = -v * q;
    mpz_class gx = b / g, gy = a / g;
    // normalize to the least x0 >= 1 (the scan order of the bounded search)
    mpz_class shift = ceil_div(1 - x0, gx);
    x0 += shift * gx;
    y0 += shift * gy;
    Linear2Solution s;
    s.x0 = x0;
    s.y0 = y0;
    s.gen_x = gx;
    s.gen_y = gy;
    s.k_min = std::max(ceil_div(-x0, gx), ceil_div(-y0, gy));
    return s;
}

bool sign_variation(const std::vector<mpz_class>& a) {
    bool pos = false, neg = false, nonzero = false;
    for (const auto& ai : a) {
        if (ai > 0) pos = true;
        if (ai < 0) neg = true;
        if (ai != 0) nonzero = true;
    }
    if (!nonzero) throw std::domain_error("sign_variation: all-zero coefficient vector");
    return pos && neg;
}

std::optional<LinearNSolution> solve_linear_n(const std::vector<mpz_class>& a,
                                              const mpz_class& b) {
    size_t n = a.size();
    if (n == 0) throw std::domain_error("solve_linear_n: empty coefficient vector");
    bool any = false;
    for (const auto& ai : a)
        if (ai != 0) any = true;
    if (!any) throw std::domain_error("solve_linear_n: all-zero coefficient vector");

    // Reduce the coefficient row with unimodular column operations, recorded
    // in U so that (a * U) = w; when w has a single nonzero entry g = gcd(a),
    // solutions of a.x = b are x = U.(b/g at the pivot, free elsewhere).
    std::vector<mpz_class> w = a;
    std::vector<std::vector<mpz_class>> U(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i) U[i][i] = 1;

    auto col_op = [&](size_t k, size_t j, const mpz_class& q) {
        // column k -= q * column j  (keeps a*U = w)
        w[k] -= q * w[j];
        for (size_t r = 0; r < n; ++r) U[r][k] -= q * U[r][j];
    };

    while (true) {
        // j = nonzero entry of least absolute value, k = any other nonzero
        size_t j = n, k = n;
        for (size_t i = 0; i < n; ++i) {
            if (w[i] == 0) continue;
            if (j == n || abs(w[i]) < abs(w[j])) j = i;
        }
        for (size_t i = 0; i < n; ++i)
            if (i != j && w[i] != 0) {
                k = i;
                break;
            }
        if (k == n) break;  // single nonzero left
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), w[k].get_mpz_t(), w[j].get_mpz_t());
        col_op(k, j, q);
    }

    size_t pivot = 0;
    while (w[pivot] == 0) ++pivot;
    mpz_class g = w[pivot];
    if (b % g != 0) return std::nullopt;
    mpz_class t = b / g;

    LinearNSolution sol;
    sol.particular.assign(n, 0);
    for (size_t r = 0; r < n; ++r) sol.particular[r] = U[r][pivot] * t;
    for (size_t cidx = 0; cidx < n; ++cidx) {
        if (cidx == pivot) continue;
        std::vector<mpz_class> v(n);
        for (size_t r = 0; r < n; ++r) v[r] = U[r][cidx];
        sol.basis.push_back(std::move(v));
    }
    return sol;
}

RationalMatrix rref(RationalMatrix m) {
    if (m.empty()) return m;
    size_t rows = m.size(), cols = m[0].size();
    size_t lead = 0;
    for (size_t r = 0; r < rows && lead < cols; ++r) {
        size_t i = r;
        while (i < rows && m[i][lead] == 0) ++i;
        if (i == rows) {
            ++lead;
            --r;
            continue;
        }
        std::swap(m[i], m[r]);
        mpq_class piv = m[r][lead];
        for (size_t c = 0; c < cols; ++c) m[r][c] /= piv;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || m[rr][lead] == 0) continue;
            mpq_class f = m[rr][lead];
            for (size_t c = 0; c < cols; ++c) m[rr][c] -= f * m[r][c];
        }
        ++lead;
    }
    return m;
}

SystemSolution solve_system(const RationalMatrix& a, const std::vector<mpq_class>& b) {
    size_t rows = a.size();
    if (rows != b.size()) throw std::invalid_argument("solve_system: dimension mismatch");
    size_t cols = rows ? a[0].size() : 0;
    RationalMatrix e = a;
    for (size_t r = 0; r < rows; ++r) e[r].push_back(b[r]);
    RationalMatrix R = rref(std::move(e));

    std::vector<int> pivot_col_of_row(rows, -1);
    std::vector<bool> is_pivot(cols, false);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c <= cols; ++c)
            if (R[r][c] != 0) {
                if (c == cols) return {SystemSolution::Kind::inconsistent, {}, {}, {}};
                pivot_col_of_row[r] = int(c);
                is_pivot[c] = true;
                break;
            }

    SystemSolution s;
    s.particular.assign(cols, 0);
    for (size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) s.free_cols.push_back(int(c));
    for (size_t r = 0; r < rows; ++r)
        if (pivot_col_of_row[r] >= 0) s.particular[pivot_col_of_row[r]] = R[r][cols];
    for (int fc : s.free_cols) {
        std::vector<mpq_class> v(cols, 0);
        v[fc] = 1;
        for (size_t r = 0; r < rows; ++r)
            if (pivot_col_of_row[r] >= 0) v[pivot_col_of_row[r]] = -R[r][fc];
        s.basis.push_back(std::move(v));
    }
    s.kind = s.free_cols.empty() ? SystemSolution::Kind::unique : SystemSolution::Kind::parametric;
    return s;
}

namespace {

std::vector<mpz_class> divisors_of(const mpz_class& m) {
    if (m == 0) throw std::domain_error("divisors_of: zero");
    mpz_class am = abs(m);
    if (!am.fits_ulong_p())
        throw std::domain_error("poly_roots: coefficient too large to enumerate divisors");
    u64 n = am.get_ui();
    std::vector<mpz_class> divs{1};
    if (n == 1) return divs;
    for (auto [p, e] : factorize_u64(n).factors) {
        size_t sz = divs.size();
        mpz_class pw = 1;
        for (u32 i = 1; i <= e; ++i) {
            pw *= p;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pw);
        }
    }
    return divs;
}

}  // namespace

std::vector<mpq_class> poly_roots(std::vector<mpz_class> coeffs, RootMode mode) {
    if (coeffs.empty() || coeffs.back() == 0)
        throw std::domain_error("poly_roots: leading coefficient must be nonzero");

    bool zero_root = false;
    while (coeffs.front() == 0) {  // factor out x^k
        zero_root = true;
        coeffs.erase(coeffs.begin());
    }

    std::vector<mpq_class> roots;
    if (zero_root) roots.emplace_back(0);

    if (coeffs.size() > 1) {
        auto d0 = divisors_of(coeffs.front());
        std::vector<mpq_class> cands;
        if (mode == RootMode::rational) {
            auto dn = divisors_of(coeffs.back());
            for (const auto& p : d0)
                for (const auto& q : dn) {
                    mpq_class r(p, q);
                    r.canonicalize();
                    cands.push_back(r);
                    cands.push_back(-r);
                }
        } else {
            // integral candidates p/q reduce to plain divisors of |a0|
            for (const auto& p : d0) {
                cands.emplace_back(p);
                if (mode == RootMode::integer) cands.emplace_back(-p);
            }
        }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (const auto& c : cands)
            if (horner(coeffs, c) == 0) roots.push_back(c);
    }

    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace dfn
