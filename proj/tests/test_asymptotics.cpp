#include "doctest.h"

#include "dioph/asymptotics.hpp"
#include "dioph/parse.hpp"

#include <stdexcept>

using namespace dioph;

namespace {

ExponentPrediction predict(const char* text, BoxMode mode, const ClassifyOptions& copts = {},
                           const PredictOptions& popts = {}) {
    return predicted_exponent(classify(parse_equation(text), copts), mode, popts);
}

}  // namespace

TEST_CASE("predictions for explicit equations") {
    auto even = predict("x1 - x2^2 + x3^2", BoxMode::IntegerBox);
    CHECK(even.kind == PredictionKind::Exponent);
    CHECK(even.exponent == mpq_class(3, 2));  // (m-1)/d + (k-m)
    CHECK(even.method == "slice-induction");

    // odd powers take both signs on a centered box; only the weaker general
    // bound applies there, while the orthant keeps the sliced one
    auto odd_box = predict("x2 - x1^3 - x3^3", BoxMode::IntegerBox);
    CHECK(odd_box.exponent == mpq_class(7, 3));  // k - 1 + 1/d
    CHECK(odd_box.method == "pila-bound");
    auto odd_orthant = predict("x2 - x1^3 - x3^3", BoxMode::NaturalOrthant);
    CHECK(odd_orthant.exponent == mpq_class(2, 3));
    CHECK(odd_orthant.method == "slice-induction");
}

TEST_CASE("predictions for diagonal power sums") {
    auto mixed = predict("x1^2 + x2^2 - x3^2 - 1", BoxMode::IntegerBox);
    CHECK(mixed.exponent == 1);  // k - max(m, k-m)
    CHECK(mixed.method == "signature-slicing");

    auto definite_neg = predict("x1^2 + x2^2 - 5", BoxMode::IntegerBox);
    CHECK(definite_neg.kind == PredictionKind::Finite);
    CHECK(definite_neg.method == "bounded-form");

    auto definite_pos = predict("x1^2 + x2^2 + 1", BoxMode::IntegerBox);
    CHECK(definite_pos.kind == PredictionKind::Empty);
    CHECK(definite_pos.method == "definite-form");

    auto homog_box = predict("x1^2 + x2^2", BoxMode::IntegerBox);
    CHECK(homog_box.kind == PredictionKind::Finite);
    auto homog_orthant = predict("x1^2 + x2^2", BoxMode::NaturalOrthant);
    CHECK(homog_orthant.kind == PredictionKind::Empty);

    auto cone = predict("x1^2 + x2^2 - x3^2", BoxMode::IntegerBox);
    CHECK(cone.exponent == 1);
    CHECK(cone.method == "signature-slicing");

    auto cubic_box = predict("x1^3 + x2^3 - x3^3", BoxMode::IntegerBox);
    CHECK(cubic_box.exponent == mpq_class(7, 3));
    CHECK(cubic_box.method == "pila-bound");
    auto cubic_orthant = predict("x1^3 + x2^3 - x3^3", BoxMode::NaturalOrthant);
    CHECK(cubic_orthant.exponent == 1);
    CHECK(cubic_orthant.method == "signature-slicing");

    auto linear_orthant = predict("2*x1 + 3*x2 - 1", BoxMode::NaturalOrthant);
    CHECK(linear_orthant.kind == PredictionKind::Finite);

    auto constant_eq = predict("x1 - x1 + 5", BoxMode::IntegerBox);
    CHECK(constant_eq.kind == PredictionKind::Empty);
    CHECK(constant_eq.method == "constant-equation");
}

TEST_CASE("many-variables cap") {
    PredictOptions low;
    low.many_vars_threshold = 4;

    // k = 4, d = 3, m = 2 over the orthant: slicing gives 2, the cap gives 1
    auto uncapped = predict("x1^3 + x2^3 - x3^3 - x4^3 - 1", BoxMode::NaturalOrthant);
    CHECK(uncapped.exponent == 2);
    CHECK(uncapped.method == "signature-slicing");
    auto capped = predict("x1^3 + x2^3 - x3^3 - x4^3 - 1", BoxMode::NaturalOrthant, {}, low);
    CHECK(capped.exponent == 1);
    CHECK(capped.method == "circle-method");
    CHECK(capped.note.find("heuristic") != std::string::npos);

    // same equation on the centered box starts from the weaker general bound
    auto capped_box = predict("x1^3 + x2^3 - x3^3 - x4^3 - 1", BoxMode::IntegerBox, {}, low);
    CHECK(capped_box.exponent == 1);
    CHECK(capped_box.method == "circle-method");

    // never applied when the variables cannot even reach the degree
    PredictOptions zero;
    zero.many_vars_threshold = 0;
    auto guard = predict("x1^3 - x2^3 - 1", BoxMode::NaturalOrthant, {}, zero);
    CHECK(guard.exponent == 1);
    CHECK(guard.method == "signature-slicing");
}

TEST_CASE("predictions under structural assertions") {
    ClassifyOptions irr;
    irr.assert_irreducible = true;
    auto pila = predict("x1^3 + x1*x2*x3 - 7", BoxMode::IntegerBox, irr);
    CHECK(pila.exponent == mpq_class(7, 3));
    CHECK(pila.method == "pila-bound");

    ClassifyOptions genus;
    genus.assert_genus_ge1 = true;
    auto curve = predict("x2^2 - x1^3 + 7", BoxMode::IntegerBox, genus);
    CHECK(curve.exponent == 0);
    CHECK(curve.method == "siegel-genus");
    CHECK(!curve.note.empty());
    auto surface = predict("x1^3 + x1*x2*x3 - 7", BoxMode::IntegerBox, genus);
    CHECK(surface.exponent == 1);
    CHECK(surface.method == "siegel-genus");

    auto fiber = predict("x1^3 + x1*x2*x3 - 7", BoxMode::IntegerBox);
    CHECK(fiber.exponent == 2);  // k - 1
    CHECK(fiber.method == "degree-fiber-bound");
    CHECK(fiber.has_constant_factor);
    CHECK(fiber.constant_factor == 3);
}

TEST_CASE("log-log exponent fit") {
    // counts growing like 8N + 2 fit a slope near one
    std::vector<FitPoint> pts;
    for (long long n : {10LL, 32LL, 100LL, 316LL, 1000LL})
        pts.push_back({n, static_cast<unsigned long long>(8 * n + 2)});
    ExponentFit fit = fit_exponent(pts);
    CHECK_FALSE(fit.empty_observed);
    CHECK(fit.alpha > 0.95);
    CHECK(fit.alpha < 1.05);
    CHECK(fit.max_residual < 0.1);

    CHECK_THROWS_AS(fit_exponent({{1, 1}, {2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(fit_exponent({{1, 1}, {2, 2}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(fit_exponent({{0, 1}, {1, 2}, {2, 3}}), std::invalid_argument);

    ExponentFit gap = fit_exponent({{1, 4}, {2, 0}, {3, 9}});
    CHECK(gap.empty_observed);
}

TEST_CASE("bound check verdicts") {
    // no solutions, predicted none
    BoundCheck empty = check_bound(parse_equation("x1^2 + x2^2 + 1"), BoxMode::IntegerBox, {2, 4, 6});
    CHECK(empty.verdict == BoundVerdict::EmptyConfirmed);

    // finitely many, count settles
    BoundCheck finite =
        check_bound(parse_equation("x1^2 + x2^2 + x3^2 - 100"), BoxMode::IntegerBox, {10, 12, 15});
    CHECK(finite.verdict == BoundVerdict::FiniteConfirmed);
    CHECK(finite.points.front().count == 30);
    CHECK(finite.points.back().count == 30);

    // growing family within its predicted exponent
    BoundCheck grow =
        check_bound(parse_equation("x1^2 + x2^2 - x3^2 - 1"), BoxMode::IntegerBox, {25, 50, 100});
    CHECK(grow.verdict == BoundVerdict::Pass);
    CHECK(grow.prediction.exponent == 1);
    CHECK(grow.fit.alpha > 1.0);
    CHECK(grow.fit.alpha < 1.25);
    REQUIRE(grow.points.size() == 3);
    CHECK(grow.points[0].count == 548);
    CHECK(grow.points[1].count == 1292);
    CHECK(grow.points[2].count == 2892);

    // exact per-size bound for equations that may factor
    BoundCheck fiber =
        check_bound(parse_equation("x1^3 + x1*x2*x3 - 7"), BoxMode::IntegerBox, {4, 6, 8});
    CHECK(fiber.verdict == BoundVerdict::Pass);
    CHECK(fiber.detail.find("exact") != std::string::npos);
    CHECK_FALSE(fiber.fit.points.empty());

    // zero counts at small sizes block the fit but contradict nothing
    BoundCheck gaps =
        check_bound(parse_equation("x1^2 - x2^2 - 41"), BoxMode::IntegerBox, {5, 10, 30});
    CHECK(gaps.verdict == BoundVerdict::Pass);
    CHECK(gaps.fit.empty_observed);
    CHECK(gaps.points.back().count == 4);

    // a false structural assertion is caught by the data
    ClassifyOptions genus;
    genus.assert_genus_ge1 = true;
    BoundCheck lie = check_bound(parse_equation("x1*x2 - x3^2"), BoxMode::IntegerBox, {10, 20, 40},
                                 0.0, genus);
    CHECK(lie.prediction.method == "siegel-genus");
    CHECK(lie.verdict == BoundVerdict::Fail);
    CHECK(lie.fit.alpha > 1.05);

    CHECK_THROWS_AS(check_bound(parse_equation("x1^2 - 4"), BoxMode::IntegerBox, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_bound(parse_equation("x1^2 - 4"), BoxMode::IntegerBox, {5, 5, 6}),
                    std::invalid_argument);
}
