#include "dioph/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dioph/numeric.hpp"

namespace dioph {

Polynomial hyperboloid_unit_equation() {
    Polynomial p(3);
    p.add_term({2, 0, 0}, 1);
    p.add_term({0, 2, 0}, 1);
    p.add_term({0, 0, 2}, -1);
    p.add_term({0, 0, 0}, -1);
    return p;
}

std::vector<SolutionFamily> hyperboloid_line_families() {
    std::vector<SolutionFamily> out;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            SolutionFamily f;
            f.parameter_count = 1;
            f.description = "(" + std::string(s1 < 0 ? "-t" : "t") + ", " +
                            (s2 < 0 ? "-1" : "1") + ", t)";
            f.generator = [s1, s2](const std::vector<mpz_class>& params) {
                if (params.size() != 1)
                    throw std::invalid_argument("family takes one parameter");
                return std::vector<mpz_class>{s1 * params[0], mpz_class(s2), params[0]};
            };
            out.push_back(std::move(f));
        }
    return out;
}

std::vector<std::array<long long, 3>> hyperboloid_family_points(long long N) {
    if (N < 0) throw std::invalid_argument("box radius must be >= 0");
    std::set<std::array<long long, 3>> pts;
    for (long long t = -N; t <= N; ++t)
        for (int s1 : {1, -1})
            for (int s2 : {1, -1}) pts.insert({s1 * t, static_cast<long long>(s2), t});
    for (const auto& p : pts) {
        // every family point must solve the equation exactly
        if (p[0] * p[0] + p[1] * p[1] - p[2] * p[2] - 1 != 0)
            throw std::logic_error("family point fails the equation");
    }
    return {pts.begin(), pts.end()};
}

std::vector<mpz_class> power_equation_roots(const mpz_class& lead, const mpz_class& constant,
                                            unsigned long degree) {
    if (lead == 0) throw std::invalid_argument("leading coefficient must be nonzero");
    if (degree == 0) throw std::invalid_argument("degree must be >= 1");

    // lead * x^degree = -constant needs an exact integer quotient first.
    mpz_class target = -constant;
    if (target % lead != 0) return {};
    mpz_class power = target / lead;

    mpz_class root;
    if (!integer_nth_root(power, degree, root)) return {};
    if (lead * pow_ui(root, degree) + constant != 0)
        throw std::logic_error("root verification failed");

    std::vector<mpz_class> out{root};
    if (degree % 2 == 0 && root != 0) out.insert(out.begin(), -root);
    return out;
}

ScaledWitnesses scaled_witness_family(const Polynomial& leading_form, const mpz_class& lead,
                                      const mpz_class& constant,
                                      const std::vector<mpz_class>& base_zero,
                                      const mpz_class& last_value, long long N) {
    if (leading_form.is_zero())
        throw std::invalid_argument("the leading form must be nonzero");
    if (lead == 0) throw std::invalid_argument("the last-variable coefficient must be nonzero");
    if (N < 0) throw std::invalid_argument("box radius must be >= 0");

    const std::size_t base_vars = leading_form.var_count();
    const unsigned long m = leading_form.degree();
    for (const auto& term : leading_form.terms()) {
        unsigned long total = 0;
        for (unsigned e : term.first) total += e;
        if (total != m)
            throw std::invalid_argument("the leading form must be homogeneous");
    }
    if (m == 0) throw std::invalid_argument("the leading form must have degree >= 1");

    if (base_zero.size() != base_vars)
        throw std::invalid_argument("base point size does not match the leading form");
    bool nontrivial = false;
    for (const auto& c : base_zero) nontrivial = nontrivial || c != 0;
    if (!nontrivial)
        throw std::invalid_argument("the base point must be nontrivial");
    if (leading_form.evaluate(base_zero) != 0)
        throw std::invalid_argument("the base point must be a zero of the leading form");
    if (lead * pow_ui(last_value, m) + constant != 0)
        throw std::invalid_argument("the last coordinate must solve its power equation");

    ScaledWitnesses out;

    // full equation in base_vars + 1 variables
    Polynomial eq = leading_form.extended(base_vars + 1);
    Exponents last(base_vars + 1, 0);
    last[base_vars] = static_cast<unsigned>(m);
    eq.add_term(last, lead);
    eq.add_term(Exponents(base_vars + 1, 0), constant);
    out.equation = eq;

    mpz_class B = 0;
    for (const auto& c : base_zero) {
        mpz_class a = abs(c);
        if (a > B) B = a;
    }
    out.max_abs_base = B;
    const mpz_class radius(static_cast<long>(N));
    out.stated_bound = mpq_class(2 * radius + 1, B);
    out.stated_bound.canonicalize();

    if (abs(last_value) > radius) return out;

    mpz_class tmax = radius / B;
    out.floor_count = 2 * to_ll(tmax) + 1;
    for (mpz_class t = -tmax; t <= tmax; ++t) {
        std::vector<mpz_class> w;
        w.reserve(base_vars + 1);
        for (const auto& c : base_zero) w.push_back(t * c);
        w.push_back(last_value);
        if (eq.evaluate(w) != 0) throw std::logic_error("witness verification failed");
        out.witnesses.push_back(std::move(w));
    }
    out.count = out.witnesses.size();
    return out;
}

}  // namespace dioph
