#pragma once

// Structural classification of an equation p = 0 into the shape classes the
// exponent predictor understands. Classification looks only at the syntax of
// p; irreducibility and genus facts cannot be decided here and enter as
// caller-supplied assertions.

#include "dioph/polynomial.hpp"

#include <optional>

namespace dioph {

enum class EquationKind {
    DiagonalExplicit,     // +-x_e + sum of c_i x_i^d + c, one degree d >= 2
    DiagonalThue,         // sum of c_i x_i^d + c, c != 0
    DiagonalHomogeneous,  // sum of c_i x_i^d, no constant
    GeneralIrreducibleAsserted,
    GeneralReducibleAllowed,
};

const char* kind_name(EquationKind k);

struct ClassifyOptions {
    bool assert_irreducible = false;
    // Asserts every restriction to two variables is a curve of genus >= 1;
    // implies assert_irreducible.
    bool assert_genus_ge1 = false;
};

// Canonical description of an equation. For diagonal kinds the sign is
// normalized (the whole equation is negated when negative power coefficients
// outnumber positive ones; an exact tie keeps the leading coefficient
// positive), so classify(p) == classify(-p).
struct EquationClass {
    EquationKind kind;
    unsigned degree = 0;       // common power degree d (0 for a constant equation)
    std::size_t var_count = 0;
    std::size_t pos_count = 0; // positive power coefficients after normalization; 0 for general kinds
    mpz_class constant;        // constant term after normalization (solved-form constant for explicit)
    bool negated = false;
    std::optional<std::size_t> explicit_var;  // 0-based, DiagonalExplicit only
    bool genus_ge1_asserted = false;
};

struct DegenerateEquation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

EquationClass classify(const Polynomial& p, const ClassifyOptions& opts = {});

}  // namespace dioph
