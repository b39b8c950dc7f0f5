#include "doctest.h"

#include "dioph/polynomial.hpp"

using namespace dioph;

namespace {
Polynomial var(std::size_t k, std::size_t i) { return Polynomial::variable(k, i); }
}

TEST_CASE("term bookkeeping") {
    Polynomial p(2);
    p.add_term({1, 0}, 3);
    p.add_term({1, 0}, -3);  // cancels
    p.add_term({0, 2}, 5);
    CHECK(p.terms().size() == 1);
    CHECK(p.coefficient({0, 2}) == 5);
    CHECK(p.coefficient({1, 0}) == 0);
    CHECK(p.degree() == 2);
    CHECK_FALSE(p.uses_var(0));
    CHECK(p.uses_var(1));
    CHECK(Polynomial(3).is_zero());
    CHECK(Polynomial(3).degree() == 0);
}

TEST_CASE("arithmetic identities") {
    auto x = var(2, 0), y = var(2, 1);
    Polynomial sq = (x + y) * (x + y);
    Polynomial expanded = x * x + Polynomial::constant(2, 2) * x * y + y * y;
    CHECK(sq == expanded);
    CHECK((x + y).pow(2) == expanded);
    CHECK((x - y) * (x + y) == x * x - y * y);
    CHECK((x - x).is_zero());
    CHECK(-(x - y) == y - x);
    CHECK((x + y).pow(0) == Polynomial::constant(2, 1));
}

TEST_CASE("canonical term order is descending lexicographic") {
    auto x = var(2, 0), y = var(2, 1);
    Polynomial p = y * y + x * x + Polynomial::constant(2, 7);
    std::vector<Exponents> order;
    for (const auto& t : p.terms()) order.push_back(t.first);
    CHECK(order == std::vector<Exponents>{{2, 0}, {0, 2}, {0, 0}});
}

TEST_CASE("evaluation") {
    auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
    Polynomial p = x * x + y * y - z * z - Polynomial::constant(3, 1);
    CHECK(p.evaluate(std::vector<long long>{1, 1, 1}) == 0);
    CHECK(p.evaluate(std::vector<long long>{3, 0, 2}) == 4);
    CHECK(p.evaluate(std::vector<mpz_class>{mpz_class(10), mpz_class(0), mpz_class(10)}) == -1);
    CHECK_THROWS_AS(p.evaluate(std::vector<long long>{1, 2}), std::invalid_argument);
}

TEST_CASE("substitute drops the variable and shifts indices") {
    auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
    Polynomial p = x * x + y * y - z * z;
    Polynomial q = p.substitute(1, 3);  // y = 3
    CHECK(q.var_count() == 2);
    Polynomial expect = var(2, 0) * var(2, 0) - var(2, 1) * var(2, 1) +
                        Polynomial::constant(2, 9);
    CHECK(q == expect);

    // substituting everything leaves a constant
    Polynomial c = q.substitute(0, 4).substitute(0, 5);
    CHECK(c.var_count() == 0);
    CHECK(c.constant_term() == 16 + 9 - 25);
}

TEST_CASE("extended keeps values") {
    auto x = var(1, 0);
    Polynomial p = x * x + Polynomial::constant(1, -2);
    Polynomial q = p.extended(3);
    CHECK(q.var_count() == 3);
    CHECK(q.evaluate(std::vector<long long>{5, 9, 9}) == 23);
    CHECK_FALSE(q.uses_var(2));
}

TEST_CASE("content and exact division") {
    auto x = var(2, 0), y = var(2, 1);
    Polynomial p = Polynomial::constant(2, 6) * x + Polynomial::constant(2, -9) * y;
    CHECK(p.content() == 3);
    Polynomial q = p.divided_by(3);
    CHECK(q == Polynomial::constant(2, 2) * x - Polynomial::constant(2, 3) * y);
    CHECK_THROWS_AS(p.divided_by(4), std::invalid_argument);
    CHECK(Polynomial(2).content() == 0);
}

TEST_CASE("monomial and constant builders") {
    Polynomial m = Polynomial::monomial(3, -2, {1, 0, 2});
    CHECK(m.degree() == 3);
    CHECK(m.coefficient({1, 0, 2}) == -2);
    CHECK(Polynomial::constant(2, 0).is_zero());
    CHECK(Polynomial::monomial(2, 0, {1, 1}).is_zero());
}
