#include "doctest.h"
#include "nok/tpoly.hpp"

using nok::Rational;
using nok::TPoly;

TEST_CASE("tpoly arithmetic") {
    auto t = TPoly::var(1, 1);
    auto one = TPoly::constant(1, 1);
    auto p = (t + one) * (t - one);
    CHECK(p == t * t - one);
    CHECK(p.to_string() == "t1^2 - 1");
    CHECK(p.total_degree() == 2);
    CHECK(p.evaluate(std::vector<Rational>{3}) == 8);
    CHECK((p - p).is_zero());
    CHECK(TPoly(1).to_string() == "0");
}

TEST_CASE("binomial of a polynomial") {
    auto T = TPoly::var(1, 1);
    auto one = TPoly::constant(1, 1);
    CHECK(binomial(T, 0) == one);
    CHECK(binomial(T, 1) == T);
    CHECK(binomial(T, 2) == (T * (T - one)).scaled(Rational(1, 2)));
    for (int n = -3; n <= 5; ++n)
        for (int k = 0; k <= 5; ++k) {
            Rational expect = 1;
            for (int i = 0; i < k; ++i) expect = expect * (n - i) / (i + 1);
            CHECK(binomial(T, k).evaluate(std::vector<Rational>{n}) == expect);
        }
}

TEST_CASE("tpoly arity mismatch") {
    CHECK_THROWS_AS(TPoly::var(1, 1) + TPoly::var(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(TPoly::var(3, 2), std::out_of_range);
}
