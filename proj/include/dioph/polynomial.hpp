#pragma once

// Exact multivariate polynomials over the integers.
//
// A polynomial carries a fixed variable count k; exponent vectors always have
// length k. Terms live in a map keyed by exponent vector in descending
// lexicographic order, which doubles as the canonical term order for
// rendering. Coefficients are arbitrary-precision integers and a coefficient
// of zero never appears in the map.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dioph {

using Exponents = std::vector<unsigned>;

class Polynomial {
  public:
    using TermMap = std::map<Exponents, mpz_class, std::greater<Exponents>>;

    Polynomial() = default;
    explicit Polynomial(std::size_t var_count) : var_count_(var_count) {}

    static Polynomial constant(std::size_t var_count, const mpz_class& c);
    // coeff * x1^e[0] * ... * xk^e[k-1]
    static Polynomial monomial(std::size_t var_count, const mpz_class& coeff, Exponents exps);
    static Polynomial variable(std::size_t var_count, std::size_t index);

    std::size_t var_count() const { return var_count_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Total degree; 0 for constants and for the zero polynomial.
    unsigned degree() const;

    mpz_class coefficient(const Exponents& exps) const;
    mpz_class constant_term() const;

    // True when the variable occurs with positive exponent in some term.
    bool uses_var(std::size_t index) const;
    std::vector<bool> used_vars() const;

    void add_term(Exponents exps, const mpz_class& coeff);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial pow(unsigned e) const;
    bool operator==(const Polynomial& o) const = default;

    mpz_class evaluate(const std::vector<mpz_class>& point) const;
    mpz_class evaluate(const std::vector<long long>& point) const;

    // Fixes variable `index` to `value` and drops it; the result has one
    // variable fewer, with higher indices shifted down by one.
    Polynomial substitute(std::size_t index, const mpz_class& value) const;

    // Same polynomial viewed over a larger variable set (new trailing
    // variables are unused).
    Polynomial extended(std::size_t new_var_count) const;

    // gcd of all coefficients (0 for the zero polynomial).
    mpz_class content() const;
    Polynomial divided_by(const mpz_class& d) const;

  private:
    std::size_t var_count_ = 0;
    TermMap terms_;
};

}  // namespace dioph
