#include "doctest.h"

#include "dioph/families.hpp"
#include "dioph/parse.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace dioph;

TEST_CASE("hyperboloid line families") {
    Polynomial eq = hyperboloid_unit_equation();
    CHECK(render(eq) == "x1^2 + x2^2 - x3^2 - 1 = 0");

    auto families = hyperboloid_line_families();
    REQUIRE(families.size() == 4);
    for (const auto& fam : families) {
        CHECK(fam.parameter_count == 1);
        CHECK_FALSE(fam.description.empty());
        for (long t = -5; t <= 5; ++t) {
            auto pt = fam.generator({mpz_class(t)});
            REQUIRE(pt.size() == 3);
            CHECK(eq.evaluate(pt) == 0);
        }
        CHECK_THROWS_AS(fam.generator({mpz_class(1), mpz_class(2)}), std::invalid_argument);
    }

    // the four lines pairwise differ somewhere
    std::set<std::vector<mpz_class>> at_two;
    for (const auto& fam : families) at_two.insert(fam.generator({mpz_class(2)}));
    CHECK(at_two.size() == 4);
}

TEST_CASE("hyperboloid family point counts") {
    CHECK(hyperboloid_family_points(0).size() == 2);
    for (long long n : {1LL, 5LL, 50LL}) {
        auto pts = hyperboloid_family_points(n);
        CHECK(pts.size() == static_cast<std::size_t>(8 * n + 2));
        CHECK(std::is_sorted(pts.begin(), pts.end()));
        CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
        for (const auto& p : pts) {
            CHECK(p[0] * p[0] + p[1] * p[1] - p[2] * p[2] == 1);
            CHECK(std::max({std::abs(p[0]), std::abs(p[1]), std::abs(p[2])}) <= n);
        }
    }
    CHECK_THROWS_AS(hyperboloid_family_points(-1), std::invalid_argument);

    // N = 1: exactly the ten small points
    auto one = hyperboloid_family_points(1);
    std::vector<std::array<long long, 3>> want = {
        {-1, -1, -1}, {-1, -1, 1}, {-1, 1, -1}, {-1, 1, 1}, {0, -1, 0},
        {0, 1, 0},    {1, -1, -1}, {1, -1, 1},  {1, 1, -1}, {1, 1, 1},
    };
    CHECK(one == want);
}

TEST_CASE("integer roots of power equations") {
    CHECK(power_equation_roots(1, -4, 2) == std::vector<mpz_class>{-2, 2});
    CHECK(power_equation_roots(1, -5, 2).empty());
    CHECK(power_equation_roots(2, -2, 3) == std::vector<mpz_class>{1});
    CHECK(power_equation_roots(1, 4, 2).empty());
    CHECK(power_equation_roots(-1, 4, 2) == std::vector<mpz_class>{-2, 2});
    CHECK(power_equation_roots(1, 0, 3) == std::vector<mpz_class>{0});
    CHECK(power_equation_roots(1, 8, 3) == std::vector<mpz_class>{-2});
    CHECK(power_equation_roots(3, -4, 2).empty());  // 4/3 is not integral
    CHECK_THROWS_AS(power_equation_roots(0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(power_equation_roots(1, 1, 0), std::invalid_argument);
}

TEST_CASE("scaled witness family") {
    // F = x1^2 - x2^2 vanishes on (1, 1); appending x3^2 - 4 gives the
    // witness family (t, t, 2) for the equation x1^2 - x2^2 + x3^2 - 4 = 0
    Polynomial f = parse_equation("x1^2 - x2^2");
    ScaledWitnesses w = scaled_witness_family(f, 1, -4, {1, 1}, 2, 10);
    CHECK(render(w.equation) == "x1^2 - x2^2 + x3^2 - 4 = 0");
    CHECK(w.count == 21);
    CHECK(w.max_abs_base == 1);
    CHECK(w.floor_count == 21);
    CHECK(w.stated_bound == 21);
    REQUIRE(w.witnesses.size() == 21);
    for (const auto& pt : w.witnesses) {
        REQUIRE(pt.size() == 3);
        CHECK(pt[0] == pt[1]);
        CHECK(pt[2] == 2);
        CHECK(w.equation.evaluate(pt) == 0);
    }

    // a wider base shrinks the family by its largest coordinate
    ScaledWitnesses wide = scaled_witness_family(f, 1, -4, {2, 2}, 2, 10);
    CHECK(wide.max_abs_base == 2);
    CHECK(wide.count == 11);  // t in [-5, 5]
    CHECK(wide.floor_count == 11);
    CHECK(wide.stated_bound == mpq_class(21, 2));

    // last value outside the box: no witnesses fit
    ScaledWitnesses none = scaled_witness_family(f, 1, -4, {1, 1}, 2, 1);
    CHECK(none.count == 0);
    CHECK(none.floor_count == 0);
    CHECK(none.witnesses.empty());

    // degree-3 form
    Polynomial g = parse_equation("x1^3 + x2^3");
    ScaledWitnesses cubic = scaled_witness_family(g, 1, -8, {1, -1}, 2, 6);
    CHECK(cubic.count == 13);
    CHECK(render(cubic.equation) == "x1^3 + x2^3 + x3^3 - 8 = 0");
    for (const auto& pt : cubic.witnesses) CHECK(cubic.equation.evaluate(pt) == 0);

    CHECK_THROWS_AS(scaled_witness_family(f, 0, -4, {1, 1}, 2, 10), std::invalid_argument);
    CHECK_THROWS_AS(scaled_witness_family(f, 1, -4, {1, 2}, 2, 10), std::invalid_argument);
    CHECK_THROWS_AS(scaled_witness_family(f, 1, -4, {0, 0}, 2, 10), std::invalid_argument);
    CHECK_THROWS_AS(scaled_witness_family(f, 1, -4, {1}, 2, 10), std::invalid_argument);
    CHECK_THROWS_AS(scaled_witness_family(f, 1, -4, {1, 1}, 3, 10), std::invalid_argument);
    CHECK_THROWS_AS(scaled_witness_family(f, 1, -4, {1, 1}, 2, -1), std::invalid_argument);
    CHECK_THROWS_AS(scaled_witness_family(parse_equation("x1^2 - x2"), 1, -4, {1, 1}, 2, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(scaled_witness_family(parse_equation("x1 - x1"), 1, -4, {1, 1}, 2, 10),
                    std::invalid_argument);
}
