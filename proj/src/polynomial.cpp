#include "dioph/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace dioph {

Polynomial Polynomial::constant(std::size_t var_count, const mpz_class& c) {
    Polynomial p(var_count);
    p.add_term(Exponents(var_count, 0), c);
    return p;
}

Polynomial Polynomial::monomial(std::size_t var_count, const mpz_class& coeff, Exponents exps) {
    if (exps.size() != var_count) throw std::invalid_argument("exponent vector length mismatch");
    Polynomial p(var_count);
    p.add_term(std::move(exps), coeff);
    return p;
}

Polynomial Polynomial::variable(std::size_t var_count, std::size_t index) {
    if (index >= var_count) throw std::invalid_argument("variable index out of range");
    Exponents e(var_count, 0);
    e[index] = 1;
    return monomial(var_count, 1, std::move(e));
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
}

mpz_class Polynomial::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class Polynomial::constant_term() const { return coefficient(Exponents(var_count_, 0)); }

bool Polynomial::uses_var(std::size_t index) const {
    for (const auto& [e, c] : terms_)
        if (e[index] > 0) return true;
    return false;
}

std::vector<bool> Polynomial::used_vars() const {
    std::vector<bool> used(var_count_, false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < var_count_; ++i)
            if (e[i] > 0) used[i] = true;
    return used;
}

void Polynomial::add_term(Exponents exps, const mpz_class& coeff) {
    if (exps.size() != var_count_) throw std::invalid_argument("exponent vector length mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(exps), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (var_count_ != o.var_count_) throw std::invalid_argument("variable count mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r(var_count_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (var_count_ != o.var_count_) throw std::invalid_argument("variable count mismatch");
    Polynomial r(var_count_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(var_count_);
            for (std::size_t i = 0; i < var_count_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(var_count_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

mpz_class Polynomial::evaluate(const std::vector<mpz_class>& point) const {
    if (point.size() != var_count_) throw std::invalid_argument("point length mismatch");
    mpz_class sum = 0, term, p;
    for (const auto& [e, c] : terms_) {
        term = c;
        for (std::size_t i = 0; i < var_count_; ++i) {
            if (e[i] == 0) continue;
            mpz_pow_ui(p.get_mpz_t(), point[i].get_mpz_t(), e[i]);
            term *= p;
        }
        sum += term;
    }
    return sum;
}

mpz_class Polynomial::evaluate(const std::vector<long long>& point) const {
    std::vector<mpz_class> z(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) z[i] = static_cast<long>(point[i]);
    return evaluate(z);
}

Polynomial Polynomial::substitute(std::size_t index, const mpz_class& value) const {
    if (index >= var_count_) throw std::invalid_argument("variable index out of range");
    Polynomial r(var_count_ - 1);
    mpz_class p;
    for (const auto& [e, c] : terms_) {
        mpz_class coeff = c;
        if (e[index] > 0) {
            mpz_pow_ui(p.get_mpz_t(), value.get_mpz_t(), e[index]);
            coeff *= p;
        }
        Exponents ne;
        ne.reserve(var_count_ - 1);
        for (std::size_t i = 0; i < var_count_; ++i)
            if (i != index) ne.push_back(e[i]);
        r.add_term(std::move(ne), coeff);
    }
    return r;
}

Polynomial Polynomial::extended(std::size_t new_var_count) const {
    if (new_var_count < var_count_) throw std::invalid_argument("cannot shrink variable set");
    Polynomial r(new_var_count);
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        ne.resize(new_var_count, 0);
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

mpz_class Polynomial::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_class a = abs(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Polynomial Polynomial::divided_by(const mpz_class& d) const {
    if (d == 0) throw std::invalid_argument("division by zero");
    Polynomial r(var_count_);
    for (const auto& [e, c] : terms_) {
        if (c % d != 0) throw std::invalid_argument("coefficient not divisible");
        r.terms_.emplace(e, c / d);
    }
    return r;
}

}  // namespace dioph
