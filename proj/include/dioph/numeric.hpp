#pragma once

// Small exact-arithmetic helpers shared across the library. Everything here
// is a thin wrapper over GMP; no floating point.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dioph {

// Parses "p" or "p/q" with optional leading '-'. q must be positive after
// canonicalization; q == 0 throws.
mpq_class rational_from_string(const std::string& text);

// Canonical "p" or "p/q" rendering (denominator omitted when 1).
std::string rational_to_string(const mpq_class& value);

bool is_perfect_square(const mpz_class& n);

// Floor square root; n must be >= 0.
mpz_class isqrt(const mpz_class& n);

// Exact m-th root: returns true and sets root when n has an integer m-th
// root (negative n allowed for odd m).
bool integer_nth_root(const mpz_class& n, unsigned m, mpz_class& root);

// Writes n = f^2 * m with m squarefree; n must be positive.
void squarefree_split(const mpz_class& n, mpz_class& f, mpz_class& m);

mpz_class lcm(const mpz_class& a, const mpz_class& b);

// LCM of the denominators of a list of rationals (1 for an empty list).
mpz_class denominator_lcm(const std::vector<mpq_class>& values);

// base^e via GMP's binary powering.
inline mpz_class pow_ui(const mpz_class& base, unsigned long e) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline long long to_ll(const mpz_class& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("value does not fit in 64 bits");
    return static_cast<long long>(v.get_si());
}

}  // namespace dioph
