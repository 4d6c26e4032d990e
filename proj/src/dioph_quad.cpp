#include "dfn/dioph_quad.hpp"

namespace dfn {

std::optional<Mat2> basis_matrix(u64 a, u64 b, u64 bound) {
    mpz_class az(static_cast<unsigned long>(a)), bz(static_cast<unsigned long>(b));
    for (u64 alpha = 2; alpha <= bound; ++alpha) {
        mpz_class n = bz * (alpha - 1) * (alpha + 1);
        if (n % az != 0) continue;
        mpz_class q2 = n / az;
        mpz_class q;
        if (!mpz_perfect_square_p(q2.get_mpz_t())) continue;
        mpz_sqrt(q.get_mpz_t(), q2.get_mpz_t());
        if ((az * q) % bz != 0) continue;
        Mat2 m;
        m.a11 = alpha;
        m.a12 = q;
        m.a21 = az * q / bz;
        m.a22 = alpha;
        return m;
    }
    return std::nullopt;
}

std::optional<MinimalSolutions> minimal_solutions(u64 a, u64 b, const mpz_class& c, u64 bound) {
    mpz_class az(static_cast<unsigned long>(a)), bz(static_cast<unsigned long>(b));
    for (u64 y = 1; y <= bound; ++y) {
        mpz_class d = bz * y * y - c;
        if (d < 0 || d % az != 0) continue;
        mpz_class x2 = d / az;
        if (!mpz_perfect_square_p(x2.get_mpz_t())) continue;
        MinimalSolutions s;
        mpz_sqrt(s.x.get_mpz_t(), x2.get_mpz_t());
        s.y = y;
        return s;
    }
    return std::nullopt;
}

std::optional<QuadSolver> make_quad_solver(u64 a, u64 b, const mpz_class& c, u64 bound) {
    auto m = basis_matrix(a, b, bound);
    if (!m) return std::nullopt;
    auto s = minimal_solutions(a, b, c, bound);
    if (!s) return std::nullopt;
    return QuadSolver{a, b, c, *m, *s};
}

std::pair<mpz_class, mpz_class> iterate(const QuadSolver& solver, u64 n, Branch which) {
    mpz_class x = solver.minimal.x;
    mpz_class y = which == Branch::s0 ? solver.minimal.y : -solver.minimal.y;
    const Mat2& A = solver.basis;
    for (u64 i = 0; i < n; ++i) {
        mpz_class nx = A.a11 * x + A.a12 * y;
        mpz_class ny = A.a21 * x + A.a22 * y;
        x = nx;
        y = ny;
    }
    return {x, y};
}

std::vector<std::pair<mpz_class, mpz_class>> back_substitute(
    const std::vector<std::pair<mpz_class, mpz_class>>& uv, const RatAffineMap& map) {
    std::vector<std::pair<mpz_class, mpz_class>> out;
    for (const auto& [u, v] : uv) {
        mpz_class xn = map.xu * u + map.xv * v + map.xc;
        mpz_class yn = map.yu * u + map.yv * v + map.yc;
        if (xn % map.xd != 0 || yn % map.yd != 0) continue;
        out.emplace_back(xn / map.xd, yn / map.yd);
    }
    return out;
}

std::vector<std::pair<mpz_class, mpz_class>> x2_2y4(u32 limit_n) {
    std::vector<std::pair<mpz_class, mpz_class>> out;
    mpz_class x = 1, t = 1;
    for (u32 n = 0; n <= limit_n; ++n) {
        if (mpz_perfect_square_p(t.get_mpz_t())) {
            mpz_class y;
            mpz_sqrt(y.get_mpz_t(), t.get_mpz_t());
            out.emplace_back(x, y);
        }
        mpz_class nx = 3 * x + 4 * t;
        mpz_class nt = 2 * x + 3 * t;
        x = nx;
        t = nt;
    }
    return out;
}

}  // namespace dfn
