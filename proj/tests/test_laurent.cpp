#include <random>

#include "doctest.h"
#include "nok/laurent.hpp"

using nok::LaurentSeries;
using nok::Rational;

namespace {

LaurentSeries random_series(std::mt19937& rng, int cap) {
    std::uniform_int_distribution<int> lo_d(-6, 6), len_d(1, 8), c_d(-5, 5), den_d(1, 3), ex_d(0, 2);
    std::vector<Rational> cs;
    const int len = len_d(rng);
    for (int i = 0; i < len; ++i) cs.emplace_back(c_d(rng), den_d(rng));
    cs[0] = cs[0] == 0 ? Rational(1) : cs[0];
    cs.front().canonicalize();
    for (auto& c : cs) c.canonicalize();
    // a third of the samples are genuine series (known through the cap only)
    const int prec = ex_d(rng) == 0 ? cap : LaurentSeries::kExact;
    return LaurentSeries::from_coeffs(lo_d(rng), cs, prec, cap);
}

}  // namespace

TEST_CASE("ring examples") {
    const int M = 20;
    auto g = LaurentSeries::geometric(2, 0, M);
    auto one = LaurentSeries::one(M);
    auto f = one - LaurentSeries::monomial(1, 2, M);
    auto prod = f * g;
    CHECK(eq_to_order(prod, one, M).equal);
    CHECK(prod.prec() == M);

    auto m = LaurentSeries::monomial(1, -2, M) * LaurentSeries::monomial(1, 2, M);
    CHECK(m == one);

    // tau (1 + tau^2 + ...) squared = tau^2 + 2 tau^4 + 3 tau^6 + ...
    auto t = LaurentSeries::geometric(2, 1, M);
    auto sq = t * t;
    for (int k = 1; 2 * k <= M; ++k) CHECK(sq.coeff(2 * k) == k);
    CHECK(sq.coeff(3) == 0);
    CHECK(sq.lo() == 2);
}

TEST_CASE("invert") {
    const int M = 20;
    auto f = LaurentSeries::one(M) - LaurentSeries::monomial(1, 2, M);
    auto inv = f.inverse();
    CHECK(eq_to_order(inv, LaurentSeries::geometric(2, 0, M), M).equal);

    auto m = LaurentSeries::monomial(3, 2, M).inverse();
    CHECK(m == LaurentSeries::monomial(Rational(1, 3), -2, M));
    CHECK(m.lo() == -2);
    CHECK(LaurentSeries::one(M).inverse() == LaurentSeries::one(M));

    CHECK_THROWS_WITH_AS(LaurentSeries::zero(M).inverse(), "non-invertible", std::domain_error);
}

TEST_CASE("mismatched caps") {
    CHECK_THROWS_AS(LaurentSeries::one(10) + LaurentSeries::one(12), std::invalid_argument);
    CHECK_THROWS_AS(LaurentSeries::one(10) * LaurentSeries::one(12), std::invalid_argument);
}

TEST_CASE("eq_to_order") {
    const int M = 30;
    auto a = (LaurentSeries::one(M) - LaurentSeries::monomial(1, 2, M)).inverse();
    CHECK(eq_to_order(a, LaurentSeries::geometric(2, 0, M), 20).equal);

    auto b = LaurentSeries::one(M) + LaurentSeries::monomial(1, 21, M);
    CHECK(eq_to_order(LaurentSeries::one(M), b, 20).equal);

    auto c = eq_to_order(LaurentSeries::monomial(1, 1, M), LaurentSeries::monomial(-1, 1, M), 20);
    CHECK_FALSE(c.equal);
    REQUIRE(c.first_divergent.has_value());
    CHECK(*c.first_divergent == 1);
}

TEST_CASE("precision tracking") {
    const int M = 20;
    // tau^{-4} * (series known through tau^20) is known through tau^16 only
    auto g = LaurentSeries::geometric(1, 0, M);
    auto p = LaurentSeries::monomial(1, -4, M) * g;
    CHECK(p.prec() == 16);
    CHECK(p.lo() == -4);
    CHECK_THROWS_AS((void)p.coeff(17), std::out_of_range);
    // exact polynomials stay exact below the cap
    auto q = LaurentSeries::monomial(1, -4, M) * LaurentSeries::monomial(2, 3, M);
    CHECK(q.exact());
    // 1/(tau^{-2} - 1) = -tau^2/(1 - tau^2); inverse precision prec - 2*lo
    auto r = (LaurentSeries::monomial(1, -2, M) - LaurentSeries::one(M) + LaurentSeries::zero(M)).inverse();
    CHECK(r.lo() == 2);
    CHECK(r.coeff(2) == 1);
    CHECK(r.coeff(4) == 1);
}

TEST_CASE("ring axioms on random samples") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        const int M = 10 + trial % 15;
        auto a = random_series(rng, M), b = random_series(rng, M), c = random_series(rng, M);
        auto check = [&](const LaurentSeries& x, const LaurentSeries& y) {
            auto r = eq_to_order(x, y, M);
            CHECK(r.equal);
        };
        check((a * b) * c, a * (b * c));
        check(a * b, b * a);
        check(a * (b + c), a * b + a * c);
        check(a + b, b + a);
        check((a - a), LaurentSeries::zero(M));
        auto ai = a.inverse();
        check(a * ai, LaurentSeries::one(M));
        check(ai.inverse(), a);
    }
}
