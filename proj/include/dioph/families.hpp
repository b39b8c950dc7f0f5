#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dioph/polynomial.hpp"

namespace dioph {

// A parametric family of exact solutions: generator maps a parameter tuple to
// a solution point of some fixed equation.
struct SolutionFamily {
    std::size_t parameter_count = 0;
    std::function<std::vector<mpz_class>(const std::vector<mpz_class>&)> generator;
    std::string description;
};

// x1^2 + x2^2 - x3^2 - 1 = 0.
Polynomial hyperboloid_unit_equation();

// Four one-parameter lines on the hyperboloid: (s1*t, s2, t) for the sign
// choices s1, s2. Every generated point solves hyperboloid_unit_equation().
std::vector<SolutionFamily> hyperboloid_line_families();

// Deduplicated union of the four lines over |t| <= N, sorted.
// Cardinality is 8N+2 for N >= 1 and 2 for N = 0.
std::vector<std::array<long long, 3>> hyperboloid_family_points(long long N);

// Integer roots of lead*x^degree + constant = 0. Zero, one, or two roots;
// both signs appear when degree is even and the root is nonzero.
// errors: lead == 0 or degree == 0.
std::vector<mpz_class> power_equation_roots(const mpz_class& lead, const mpz_class& constant,
                                            unsigned long degree);

struct ScaledWitnesses {
    Polynomial equation;                           // F(x1..x_{k-1}) + lead*x_k^m + constant
    std::vector<std::vector<mpz_class>> witnesses; // (t*base, last_value), all verified
    unsigned long long count = 0;
    mpz_class max_abs_base;          // B = max |base_i|
    unsigned long long floor_count = 0; // 2*floor(N/B) + 1, or 0 when |last_value| > N
    mpq_class stated_bound;          // (2N+1)/B
};

// Witness family for F(x1..x_{k-1}) + lead*x_k^m + constant = 0 where F is
// homogeneous of degree m, base_zero is a nontrivial zero of F, and
// last_value solves lead*x^m + constant = 0. Scaling the base by any integer
// t keeps F zero, so (t*base, last_value) solves the full equation; the
// family stays inside [-N, N]^k for |t| <= floor(N/B).
ScaledWitnesses scaled_witness_family(const Polynomial& leading_form, const mpz_class& lead,
                                      const mpz_class& constant,
                                      const std::vector<mpz_class>& base_zero,
                                      const mpz_class& last_value, long long N);

}  // namespace dioph
