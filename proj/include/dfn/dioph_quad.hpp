#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "dfn/ints.hpp"

namespace dfn {

// Basis matrix [[alpha, (b/a)gamma], [gamma, alpha]] of a*x^2 - b*y^2 + c = 0;
// integer entries, determinant 1, so it maps solutions to solutions.
struct Mat2 {
    mpz_class a11, a12, a21, a22;
};

// Smallest alpha >= 2 making both q = sqrt((b/a)(alpha^2-1)) and (a/b)q
// integral; nullopt when none up to the bound.
std::optional<Mat2> basis_matrix(u64 a, u64 b, u64 bound = 1000000);

// Minimal solutions S0 = (x, y), S1 = (x, -y): smallest y >= 1 with
// (b*y^2 - c)/a a nonnegative perfect square.
struct MinimalSolutions {
    mpz_class x, y;
};

std::optional<MinimalSolutions> minimal_solutions(u64 a, u64 b, const mpz_class& c,
                                                  u64 bound = 1000000);

struct QuadSolver {
    u64 a, b;
    mpz_class c;
    Mat2 basis;
    MinimalSolutions minimal;
};

std::optional<QuadSolver> make_quad_solver(u64 a, u64 b, const mpz_class& c,
                                           u64 bound = 1000000);

enum class Branch { s0, s1 };

// (x_n, y_n) = A^n * S, exact.
std::pair<mpz_class, mpz_class> iterate(const QuadSolver& solver, u64 n, Branch which);

// x = (xu*u + xv*v + xc)/xd,  y = (yu*u + yv*v + yc)/yd
struct RatAffineMap {
    mpz_class xu, xv, xc, xd;
    mpz_class yu, yv, yc, yd;
};

// Applies the map to each (u, v); emits only pairs with both images integral.
std::vector<std::pair<mpz_class, mpz_class>> back_substitute(
    const std::vector<std::pair<mpz_class, mpz_class>>& uv, const RatAffineMap& map);

// Solutions of x^2 = 2y^4 - 1: iterate (x, t) by [[3,4],[2,3]] from (1,1),
// emit (x, sqrt(t)) whenever t is a perfect square. First limit_n+1 terms
// inspected (n = 0..limit_n).
std::vector<std::pair<mpz_class, mpz_class>> x2_2y4(u32 limit_n);

}  // namespace dfn
