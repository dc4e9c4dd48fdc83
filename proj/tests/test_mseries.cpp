#include <random>

#include "doctest.h"
#include "nok/mseries.hpp"

using namespace nok;

namespace {

QSeries random_qseries(std::mt19937& rng, const VarTablePtr& vars, int cap) {
    std::uniform_int_distribution<int> e_d(0, 2), c_d(-4, 4), lo_d(-3, 3), n_d(1, 6);
    QSeries s(vars, LaurentSeries::one(cap));
    const int n = n_d(rng);
    for (int t = 0; t < n; ++t) {
        Exponents e(static_cast<std::size_t>(vars->size()));
        for (auto& x : e) x = e_d(rng);
        std::vector<Rational> cs{Rational(c_d(rng)), Rational(c_d(rng), 2), Rational(c_d(rng))};
        s.add_term(e, LaurentSeries::from_coeffs(lo_d(rng), cs, LaurentSeries::kExact, cap));
    }
    // unit constant term so inverses exist
    s.add_term(Exponents(static_cast<std::size_t>(vars->size()), 0), LaurentSeries::one(cap));
    return s;
}

// compares every coefficient through its certified window
bool same(const QSeries& a, const QSeries& b) {
    const int w = std::min(certified_window(a), certified_window(b));
    auto d = a - b;
    for (const auto& [e, c] : d.terms())
        for (const auto& [x, v] : c.terms())
            if (x <= w) return false;
    return true;
}

}  // namespace

TEST_CASE("var table") {
    auto v = make_vars({"Q11", "Q21"}, 3);
    CHECK(v->index("Q21") == 1);
    CHECK_THROWS_AS((void)v->index("s"), std::out_of_range);
    CHECK_THROWS_AS(VarTable({"a", "a"}, 1), std::invalid_argument);
    CHECK_THROWS_AS(VarTable({"a"}, -1), std::invalid_argument);
}

TEST_CASE("invert(1 - Q) and geometric products") {
    const int M = 20, D = 6;
    auto vars = make_vars({"Q"}, D);
    auto unit = LaurentSeries::one(M);
    auto one = QSeries::one(vars, unit);
    auto Q = Monomial::var(0, 1);
    auto inv = (one - QSeries::monomial(vars, unit, Q, unit)).inverse();
    CHECK(inv.size() == D + 1);
    for (int d = 0; d <= D; ++d) CHECK(inv.coeff({d}) == unit);

    // (1 - Q tau^2)(1 + Q tau^2 + Q^2 tau^4 + ...) = 1
    auto a = one - QSeries::monomial(vars, unit, Q, LaurentSeries::monomial(1, 2, M));
    QSeries g(vars, unit);
    for (int d = 0; d <= D; ++d) g.add_term({d}, LaurentSeries::monomial(1, 2 * d, M));
    CHECK(a * g == one);

    // (1 + Q)^{-1} = 1 - Q + Q^2 - ...
    auto p = (one + QSeries::monomial(vars, unit, Q, unit)).pow(-1);
    for (int d = 0; d <= D; ++d) CHECK(p.coeff({d}) == LaurentSeries::monomial(d % 2 ? -1 : 1, 0, M));
}

TEST_CASE("non-unit constant term") {
    auto vars = make_vars({"Q"}, 3);
    auto unit = LaurentSeries::one(10);
    auto Q = QSeries::monomial(vars, unit, Monomial::var(0, 1), unit);
    CHECK_THROWS_AS((void)Q.inverse(), std::domain_error);
    auto t = TSeries::monomial(vars, TPoly::constant(1, 1), Monomial::var(0, 1), TPoly::constant(1, 1)) +
             TSeries::constant(vars, TPoly::constant(1, 1), TPoly::var(1, 1));
    CHECK_THROWS_AS((void)t.inverse(), std::domain_error);
}

TEST_CASE("ring axioms and serial/parallel agreement") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        const int D = 2 + trial % 5, M = 12 + trial % 9;
        auto vars = make_vars({"x", "y", "z"}, D);
        auto a = random_qseries(rng, vars, M), b = random_qseries(rng, vars, M), c = random_qseries(rng, vars, M);
        CHECK(mul(a, b, Exec::Serial) == mul(a, b, Exec::Parallel));
        CHECK(same(mul(mul(a, b, Exec::Serial), c, Exec::Serial), mul(a, mul(b, c, Exec::Parallel), Exec::Parallel)));
        CHECK(same(a * b, b * a));
        CHECK(same(a * (b + c), a * b + a * c));
        auto ai = a.inverse(Exec::Serial);
        CHECK(same(a * ai, QSeries::one(vars, a.unit())));
        CHECK(ai == a.inverse(Exec::Parallel));
        CHECK(same(a.pow(3), a * a * a));
        CHECK(same(a.pow(-2) * a.pow(2), QSeries::one(vars, a.unit())));
    }
}

TEST_CASE("degree cap discards high monomials") {
    auto vars = make_vars({"x", "y"}, 2);
    auto unit = TPoly::constant(1, 1);
    auto x = TSeries::monomial(vars, unit, Monomial::var(0, 2), unit);
    auto y = TSeries::monomial(vars, unit, Monomial::var(1, 2), unit);
    CHECK((x * y * x).is_zero());
    CHECK((x * y).size() == 1);
    CHECK(x.times(Monomial{-1, {1, 0}}).coeff({2, 0}) == -unit);
}
