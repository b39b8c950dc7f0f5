#include "doctest.h"

#include "dioph/classify.hpp"
#include "dioph/parse.hpp"

using namespace dioph;

TEST_CASE("explicit variable detection") {
    EquationClass c = classify(parse_equation("x1 - x2^2 + x3^2"));
    CHECK(c.kind == EquationKind::DiagonalExplicit);
    CHECK(c.degree == 2);
    CHECK(c.var_count == 3);
    CHECK(c.pos_count == 2);  // solved variable plus the larger sign group
    REQUIRE(c.explicit_var.has_value());
    CHECK(*c.explicit_var == 0);
    CHECK(c.constant == 0);

    // canonical orientation puts coefficient -1 on the solved variable, so
    // both orientations classify identically
    EquationClass flipped = classify(parse_equation("-x1 + x2^2 - x3^2"));
    CHECK(flipped.kind == EquationKind::DiagonalExplicit);
    CHECK(flipped.pos_count == c.pos_count);
    CHECK(flipped.negated != c.negated);

    EquationClass shifted = classify(parse_equation("x2 - x1^3 - x3^3 + 5"));
    CHECK(shifted.kind == EquationKind::DiagonalExplicit);
    CHECK(shifted.degree == 3);
    CHECK(*shifted.explicit_var == 1);
    CHECK(shifted.pos_count == 3);  // 1 + max(pos, neg) over the power terms
    CHECK(shifted.constant == -5);  // solved form x2 = x1^3 + x3^3 - 5
    CHECK(shifted.negated);
}

TEST_CASE("thue and homogeneous forms") {
    EquationClass circle = classify(parse_equation("x1^2 + x2^2 - 5"));
    CHECK(circle.kind == EquationKind::DiagonalThue);
    CHECK(circle.degree == 2);
    CHECK(circle.pos_count == 2);
    CHECK(circle.constant == -5);
    CHECK_FALSE(circle.negated);

    EquationClass neg = classify(parse_equation("-x1^2 - x2^2 + 5"));
    CHECK(neg.kind == EquationKind::DiagonalThue);
    CHECK(neg.pos_count == 2);
    CHECK(neg.constant == -5);
    CHECK(neg.negated);

    EquationClass cone = classify(parse_equation("x1^2 + x2^2 - x3^2"));
    CHECK(cone.kind == EquationKind::DiagonalHomogeneous);
    CHECK(cone.pos_count == 2);
    CHECK(cone.constant == 0);

    // tie in sign counts: keep the leading coefficient positive
    EquationClass tie = classify(parse_equation("x1^2 - x2^2 - 3"));
    CHECK_FALSE(tie.negated);
    EquationClass tie2 = classify(parse_equation("-x1^2 + x2^2 - 3"));
    CHECK(tie2.negated);
    CHECK(tie2.constant == 3);

    EquationClass majority = classify(parse_equation("x1^2 - x2^2 - x3^2 - x4^2 - 9"));
    CHECK(majority.negated);
    CHECK(majority.pos_count == 3);
    CHECK(majority.constant == 9);

    EquationClass linear = classify(parse_equation("2*x1 + 3*x2 - 1"));
    CHECK(linear.kind == EquationKind::DiagonalThue);
    CHECK(linear.degree == 1);
}

TEST_CASE("general classes and assertions") {
    EquationClass g = classify(parse_equation("x1^3 + x1*x2*x3 - 7"));
    CHECK(g.kind == EquationKind::GeneralReducibleAllowed);
    CHECK(g.degree == 3);
    CHECK(g.pos_count == 0);

    ClassifyOptions irr;
    irr.assert_irreducible = true;
    CHECK(classify(parse_equation("x1^3 + x1*x2*x3 - 7"), irr).kind ==
          EquationKind::GeneralIrreducibleAsserted);

    ClassifyOptions genus;
    genus.assert_genus_ge1 = true;
    EquationClass ell = classify(parse_equation("x2^2 - x1^3 + 7"), genus);
    CHECK(ell.kind == EquationKind::GeneralIrreducibleAsserted);
    CHECK(ell.genus_ge1_asserted);

    // diagonal shape but no unit-coefficient linear variable: general
    EquationClass nosolve = classify(parse_equation("2*x1 - x2^2 + 1"));
    CHECK(nosolve.kind == EquationKind::GeneralReducibleAllowed);

    // mixed degrees without any linear term: general
    EquationClass mixed = classify(parse_equation("x1^2 + x2^3 - 2"));
    CHECK(mixed.kind == EquationKind::GeneralReducibleAllowed);
}

TEST_CASE("degenerate and constant equations") {
    CHECK_THROWS_AS(classify(parse_equation("x1 - x1")), DegenerateEquation);
    CHECK_THROWS_AS(classify(parse_equation("5")), std::invalid_argument);

    // nonzero constant with declared variables: degree-0 diagonal
    EquationClass c = classify(parse_equation("x1 - x1 + 5"));
    CHECK(c.kind == EquationKind::DiagonalThue);
    CHECK(c.degree == 0);
    CHECK(c.constant == 5);
}
