#include "dioph/classify.hpp"

#include <algorithm>

namespace dioph {

const char* kind_name(EquationKind k) {
    switch (k) {
        case EquationKind::DiagonalExplicit: return "DiagonalExplicit";
        case EquationKind::DiagonalThue: return "DiagonalThue";
        case EquationKind::DiagonalHomogeneous: return "DiagonalHomogeneous";
        case EquationKind::GeneralIrreducibleAsserted: return "GeneralIrreducibleAsserted";
        case EquationKind::GeneralReducibleAllowed: return "GeneralReducibleAllowed";
    }
    return "?";
}

namespace {

struct PowerTerm {
    std::size_t var;
    unsigned exp;
    mpz_class coeff;
};

// Sign normalization rule shared by all classes: negate when negative
// coefficients outnumber positive ones, breaking ties so the leading
// (lex-greatest) coefficient ends up positive.
bool should_negate(std::size_t pos, std::size_t neg, const mpz_class& leading) {
    if (neg != pos) return neg > pos;
    return leading < 0;
}

}  // namespace

EquationClass classify(const Polynomial& p, const ClassifyOptions& opts) {
    if (p.var_count() == 0) throw std::invalid_argument("equation has no variables");
    if (p.is_zero()) throw DegenerateEquation("degenerate equation: 0 = 0");

    const std::size_t k = p.var_count();
    EquationClass cls;
    cls.var_count = k;
    cls.genus_ge1_asserted = opts.assert_genus_ge1;

    // Collect power terms; bail to the general classes on the first term
    // that is not a pure power of a single variable or reuses a variable.
    bool diagonal = true;
    std::vector<PowerTerm> powers;
    std::vector<bool> seen(k, false);
    mpz_class c0 = 0;
    for (const auto& [e, c] : p.terms()) {
        std::size_t nz = 0, var = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (e[i] > 0) {
                ++nz;
                var = i;
            }
        if (nz == 0) {
            c0 = c;
            continue;
        }
        if (nz > 1 || seen[var]) {
            diagonal = false;
            break;
        }
        seen[var] = true;
        powers.push_back({var, e[var], c});
    }

    const mpz_class leading = p.terms().begin()->second;

    if (!diagonal) {
        cls.kind = (opts.assert_irreducible || opts.assert_genus_ge1)
                       ? EquationKind::GeneralIrreducibleAsserted
                       : EquationKind::GeneralReducibleAllowed;
        cls.degree = p.degree();
        cls.pos_count = 0;
        std::size_t pos = 0, neg = 0;
        for (const auto& [e, c] : p.terms()) (c > 0 ? pos : neg)++;
        cls.negated = should_negate(pos, neg, leading);
        cls.constant = cls.negated ? mpz_class(-c0) : c0;
        return cls;
    }

    bool all_equal = true;
    for (const auto& t : powers)
        if (t.exp != powers.front().exp) all_equal = false;

    if (powers.empty() || all_equal) {
        std::size_t pos = 0, neg = 0;
        for (const auto& t : powers) (t.coeff > 0 ? pos : neg)++;
        cls.negated = should_negate(pos, neg, leading);
        cls.degree = powers.empty() ? 0 : powers.front().exp;
        cls.pos_count = cls.negated ? neg : pos;
        cls.constant = cls.negated ? mpz_class(-c0) : c0;
        cls.kind = (cls.constant == 0) ? EquationKind::DiagonalHomogeneous
                                       : EquationKind::DiagonalThue;
        return cls;
    }

    // Mixed power degrees: the only diagonal class left is the explicit one,
    // x_e = sum b_i x_i^d + c with a unit coefficient on the solved variable
    // and a single degree d >= 2 everywhere else.
    for (const auto& cand : powers) {
        if (cand.exp != 1 || abs(cand.coeff) != 1) continue;
        unsigned d = 0;
        bool ok = true;
        for (const auto& t : powers) {
            if (t.var == cand.var) continue;
            if (d == 0) d = t.exp;
            if (t.exp != d) ok = false;
        }
        if (!ok || d < 2) continue;

        // Canonical orientation gives the solved variable coefficient -1.
        bool negate = cand.coeff > 0;
        std::size_t pos = 0, neg = 0;
        for (const auto& t : powers) {
            if (t.var == cand.var) continue;
            mpz_class b = negate ? mpz_class(-t.coeff) : t.coeff;
            (b > 0 ? pos : neg)++;
        }
        cls.kind = EquationKind::DiagonalExplicit;
        cls.degree = d;
        cls.pos_count = 1 + std::max(pos, neg);
        cls.constant = negate ? mpz_class(-c0) : c0;
        cls.negated = negate;
        cls.explicit_var = cand.var;
        return cls;
    }

    // Diagonal shape but no solvable variable: treat as general.
    cls.kind = (opts.assert_irreducible || opts.assert_genus_ge1)
                   ? EquationKind::GeneralIrreducibleAsserted
                   : EquationKind::GeneralReducibleAllowed;
    cls.degree = p.degree();
    cls.pos_count = 0;
    std::size_t pos = 0, neg = 0;
    for (const auto& [e, c] : p.terms()) (c > 0 ? pos : neg)++;
    cls.negated = should_negate(pos, neg, leading);
    cls.constant = cls.negated ? mpz_class(-c0) : c0;
    return cls;
}

}  // namespace dioph
