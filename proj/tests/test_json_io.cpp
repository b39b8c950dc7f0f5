#include "doctest.h"

#include "dioph/json_io.hpp"
#include "dioph/parse.hpp"

using namespace dioph;

TEST_CASE("surd and matrix round trips") {
    SurdEntry e(mpq_class(1, 2), mpq_class(-3, 4), 5);
    CHECK(surd_from_json(surd_to_json(e)) == e);

    TransformMatrix m = pythagorean_rotation(3, 2);
    m.translation = {mpq_class(1, 2), mpq_class(-7)};
    TransformMatrix back = matrix_from_json(matrix_to_json(m));
    CHECK(back == m);

    // translation defaults to zero when absent
    json j = matrix_to_json(m);
    j.erase("translation");
    TransformMatrix no_tr = matrix_from_json(j);
    CHECK(no_tr.translation == std::vector<mpq_class>{0, 0});

    json bad = matrix_to_json(m);
    bad["entries"][0].erase(1);
    CHECK_THROWS(matrix_from_json(bad));
}

TEST_CASE("count serialization") {
    Polynomial p = parse_equation("x1^2 + x2^2 - x3^2 - 2");
    Box box{4, BoxMode::IntegerBox};
    CountResult r = count_sliced(p, box, {2});
    json j = count_to_json(p, r);
    CHECK(j["equation"] == "x1^2 + x2^2 - x3^2 - 2 = 0");
    CHECK(j["N"] == 4);
    CHECK(j["mode"] == "box");
    CHECK(j["engine"] == "sliced");
    CHECK(j["count"] == r.count);
    REQUIRE(j.contains("slices"));
    CHECK(j["slices"].size() == 9);
    CHECK(j["slices"][0]["value"] == -4);
    CHECK_FALSE(j.contains("elapsed_seconds"));
    CHECK(count_to_json(p, r, true).contains("elapsed_seconds"));

    CountResult plain = count_brute(p, box);
    CHECK_FALSE(count_to_json(p, plain).contains("slices"));
}

TEST_CASE("prediction and bound report serialization") {
    Polynomial p = parse_equation("x1^2 + x2^2 - x3^2 - 1");
    EquationClass cls = classify(p);
    json pj = prediction_to_json(predicted_exponent(cls, BoxMode::IntegerBox));
    CHECK(pj["kind"] == "exponent");
    CHECK(pj["exponent"] == "1");
    CHECK(pj["exponent_value"] == 1.0);
    CHECK(pj["method"] == "signature-slicing");

    json ej = prediction_to_json(predicted_exponent(classify(parse_equation("x1^2 + x2^2 + 1")),
                                                    BoxMode::IntegerBox));
    CHECK(ej["kind"] == "empty");
    CHECK_FALSE(ej.contains("exponent"));

    BoundCheck chk = check_bound(p, BoxMode::IntegerBox, {5, 10, 20});
    json bj = bound_report_to_json(p, cls, chk);
    CHECK(bj["equation"] == "x1^2 + x2^2 - x3^2 - 1 = 0");
    CHECK(bj["class"] == kind_name(cls.kind));
    CHECK(bj["verdict"] == "pass");
    CHECK(bj["points"].size() == 3);
    CHECK(bj["alpha"].is_number());
    CHECK(bj["slack"] == 0.25);

    BoundCheck empty = check_bound(parse_equation("x1^2 + x2^2 + 1"), BoxMode::IntegerBox, {2, 3});
    json ebj = bound_report_to_json(parse_equation("x1^2 + x2^2 + 1"),
                                    classify(parse_equation("x1^2 + x2^2 + 1")), empty);
    CHECK(ebj["verdict"] == "empty-confirmed");
    CHECK(ebj["alpha"].is_null());
}

TEST_CASE("transform serialization") {
    json hj = homothety_to_json(homothety_case(pythagorean_rotation(2, 1)));
    CHECK(hj["case"] == 1);
    CHECK(hj["exists"] == true);
    CHECK(hj["t"] == "5");
    CHECK(hj["rad"] == 1);

    json dj = diagonalization_to_json(diagonalize_binary_quadratic(1, 1, 1));
    CHECK(dj["status"] == "deformed");
    CHECK(dj["disc"] == "4");
    CHECK(dj["tan_plus"] == "1");
    CHECK(dj["deformation"][0][1] == "-1");
    CHECK(dj["diag"][0] == "2");
    CHECK(dj["diag"][1] == "0");
    CHECK(dj["multiplier"] == "2");

    json nj = diagonalization_to_json(diagonalize_binary_quadratic(1, 1, 2));
    CHECK(nj["status"] == "no-integer-homothety");
    CHECK_FALSE(nj.contains("deformation"));

    Polynomial circle = parse_equation("x1^2 + x2^2 - 25");
    IntAffine shear{{{1, 1}, {0, 1}}, {0, 0}};
    json tj = transformed_to_json(circle, shear, apply_transform(circle, shear, false));
    CHECK(tj["input"] == "x1^2 + x2^2 - 25 = 0");
    CHECK(tj["image"] == "x1^2 + 2*x1*x2 + 2*x2^2 - 25 = 0");
    CHECK(tj["matrix"][0] == json::array({"1", "1"}));
    CHECK(tj["content_removed"] == "1");

    json vj = preservation_to_json(verify_count_preservation(circle, shear, Box{6, BoxMode::IntegerBox}));
    CHECK(vj["pass"] == true);
    CHECK(vj["det"] == "1");
    CHECK(vj["unimodular"] == true);
    CHECK(vj["original_count"] == 12);
}

TEST_CASE("witness serialization") {
    ScaledWitnesses w = scaled_witness_family(parse_equation("x1^2 - x2^2"), 1, -4, {1, 1}, 2, 3);
    json j = witnesses_to_json(w);
    CHECK(j["equation"] == "x1^2 - x2^2 + x3^2 - 4 = 0");
    CHECK(j["count"] == 7);
    CHECK(j["stated_bound"] == "7");
    CHECK(j["witnesses"].size() == 7);
    CHECK(j["witnesses"][0].size() == 3);
}

TEST_CASE("serialization is byte stable") {
    Polynomial p = parse_equation("x1^2 + x2^2 - x3^2 - 2");
    Box box{4, BoxMode::IntegerBox};
    std::string a = count_to_json(p, count_sliced(p, box, {2})).dump(2);
    std::string b = count_to_json(p, count_sliced(p, box, {2})).dump(2);
    CHECK(a == b);

    TransformMatrix m = pythagorean_rotation(4, 1);
    CHECK(matrix_to_json(m).dump() == matrix_to_json(matrix_from_json(matrix_to_json(m))).dump());
}
