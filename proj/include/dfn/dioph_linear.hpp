#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace dfn {

// General natural solution of a*x - b*y = c (a, b > 0):
//   x_k = gen_x*k + x0,  y_k = gen_y*k + y0,  natural for all k >= k_min.
// x0 is normalized to the least value >= 1, matching the scan order of the
// source program.
struct Linear2Solution {
    mpz_class x0, y0;
    mpz_class k_min;
    mpz_class gen_x, gen_y;  // (b, a) divided by gcd(a, b)
};

std::optional<Linear2Solution> solve_linear2(const mpz_class& a, const mpz_class& b,
                                             const mpz_class& c);

// True iff two coefficients of opposite sign exist (=> infinitely many
// natural solutions). All-zero input is a domain error.
bool sign_variation(const std::vector<mpz_class>& a);

// Complete integer solution family of a1 x1 + ... + an xn = b:
// particular + integer combinations of n-1 homogeneous basis vectors.
struct LinearNSolution {
    std::vector<mpz_class> particular;
    std::vector<std::vector<mpz_class>> basis;
};

std::optional<LinearNSolution> solve_linear_n(const std::vector<mpz_class>& a,
                                              const mpz_class& b);

using RationalMatrix = std::vector<std::vector<mpq_class>>;

// Unique reduced row-echelon form, exact rational arithmetic.
RationalMatrix rref(RationalMatrix m);

struct SystemSolution {
    enum class Kind { unique, parametric, inconsistent } kind;
    // For unique/parametric: x = particular + sum t_j * basis[j], where the
    // j-th free variable is free_cols[j] (0-based column index).
    std::vector<mpq_class> particular;
    std::vector<std::vector<mpq_class>> basis;
    std::vector<int> free_cols;
};

SystemSolution solve_system(const RationalMatrix& a, const std::vector<mpq_class>& b);

enum class RootMode { rational, integer, natural };

// Roots of an integer polynomial by the rational-root theorem: candidates
// +-(divisor of |a0|)/(divisor of |an|) tested with exact Horner. Zero roots
// are factored out first and reported once. Ascending, deduplicated.
std::vector<mpq_class> poly_roots(std::vector<mpz_class> coeffs, RootMode mode);

}  // namespace dfn
