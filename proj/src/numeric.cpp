#include "dioph/numeric.hpp"

#include <cctype>

namespace dioph {

mpq_class rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = text.find('/');
    auto check_int = [&](const std::string& part, bool sign_ok) {
        if (part.empty()) throw std::invalid_argument("bad rational literal: " + text);
        std::size_t i = 0;
        if (sign_ok && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) throw std::invalid_argument("bad rational literal: " + text);
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw std::invalid_argument("bad rational literal: " + text);
    };
    if (slash == std::string::npos) {
        check_int(text, true);
        return mpq_class(mpz_class(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_int(num, true);
    check_int(den, false);
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& value) {
    mpq_class v = value;
    v.canonicalize();
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

bool is_perfect_square(const mpz_class& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

mpz_class isqrt(const mpz_class& n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool integer_nth_root(const mpz_class& n, unsigned m, mpz_class& root) {
    if (m == 0) throw std::domain_error("zeroth root");
    if (n < 0 && m % 2 == 0) return false;
    mpz_class r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), m);
    if (!exact) return false;
    root = r;
    return true;
}

void squarefree_split(const mpz_class& n, mpz_class& f, mpz_class& m) {
    if (n <= 0) throw std::domain_error("squarefree_split needs a positive argument");
    // Trial division is fine here: radicands in this library stay small.
    mpz_class rest = n;
    f = 1;
    m = 1;
    for (mpz_class p = 2; p * p <= rest; ++p) {
        unsigned count = 0;
        while (rest % p == 0) {
            rest /= p;
            ++count;
        }
        for (unsigned i = 0; i + 1 < count; i += 2) f *= p;
        if (count % 2 == 1) m *= p;
    }
    m *= rest;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

mpz_class denominator_lcm(const std::vector<mpq_class>& values) {
    mpz_class l = 1;
    for (const auto& v : values) {
        mpq_class c = v;
        c.canonicalize();
        l = lcm(l, c.get_den());
    }
    return l;
}

}  // namespace dioph
