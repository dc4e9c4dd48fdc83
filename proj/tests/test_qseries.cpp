#include "doctest.h"
#include "nok/qseries.hpp"

using namespace nok;

namespace {

// prod_{n>=1} (1 - z tau^{2n})^n by brute force, as coefficients of z^0..z^K
std::vector<LaurentSeries> macmahon_brute(int K, int cap) {
    std::vector<LaurentSeries> r(static_cast<std::size_t>(K) + 1, LaurentSeries::zero(cap));
    r[0] = LaurentSeries::one(cap);
    for (int n = 1; 2 * n <= cap; ++n) {
        for (int rep = 0; rep < n; ++rep) {
            for (int k = K; k >= 1; --k) r[k] -= r[k - 1] * LaurentSeries::monomial(1, 2 * n, cap);
        }
    }
    return r;
}

}  // namespace

TEST_CASE("macmahon coefficients") {
    const int M = 24, K = 4;
    auto mc = macmahon_coeffs(K, 0, 1, M);
    auto br = macmahon_brute(K, M);
    for (int k = 0; k <= K; ++k) CHECK(eq_to_order(mc[k], br[k], M).equal);
    // [z^1] M(z) = -sum n tau^{2n}
    for (int n = 1; 2 * n <= M; ++n) CHECK(mc[1].coeff(2 * n) == -n);

    auto vars = make_vars({"z"}, K);
    auto z = Monomial::var(0, 1);
    auto m = macmahon(vars, M, z);
    auto minv = macmahon(vars, M, z, 0, -1);
    CHECK(m * minv == QSeries::one(vars, LaurentSeries::one(M)));
    CHECK(m.pow(-1) == minv);
    CHECK(macmahon(vars, M, z, 0, 3) == m * m * m);
    // shift: M(z tau^2) coefficient of z is -sum n tau^{2n+2}
    auto ms = macmahon(vars, M, z, 1);
    CHECK(ms.coeff({1}) == mc[1].shifted(2).recapped(M));

    CHECK_THROWS_WITH_AS(macmahon(vars, M, Monomial::unit(1)), "non-truncating product", std::domain_error);
    // an argument beyond the degree cap contributes 1
    std::vector<Factor> fs{{Factor::Kind::MacMahon, Monomial{1, {K + 1}}}};
    CHECK(assemble_product(vars, M, fs) == QSeries::one(vars, LaurentSeries::one(M)));
}

TEST_CASE("euler products") {
    auto inv = euler_coeffs(EulerMode::InvFull, 8);
    CHECK(inv[4] == 5);
    CHECK(inv[8] == 22);
    auto odd = euler_coeffs(EulerMode::OddPlus, 8);
    CHECK(odd[4] == 1);
    CHECK(odd[8] == 2);  // 7+1, 5+3

    auto vars = make_vars({"Q1", "Q2"}, 4);
    auto unit = LaurentSeries::one(10);
    auto e = euler_product(vars, unit, EulerMode::InvFull, Monomial{1, {1, 1}});
    CHECK(e.coeff({2, 2}) == LaurentSeries::monomial(2, 0, 10));
    CHECK(e.coeff({1, 0}).is_exact_zero());
    CHECK_THROWS_AS(euler_product(vars, unit, EulerMode::InvFull, Monomial::unit(2)), std::domain_error);
}

TEST_CASE("pow_binomial") {
    const int D = 5;
    auto vars = make_vars({"s"}, D);
    auto unit = TPoly::constant(1, 1);
    auto t = TPoly::var(1, 1);
    auto one = TSeries::one(vars, unit);
    auto s = TSeries::monomial(vars, unit, Monomial::var(0, 1), unit);

    auto p = pow_binomial(one - s, t);
    CHECK(p.coeff({2}) == (t * (t - unit)).scaled(Rational(1, 2)));

    auto t2 = t * t;
    CHECK(pow_binomial(one - s, t2) * pow_binomial(one - s, -t2) == one);

    auto q = pow_binomial(one - s, -t2) * (one + s).inverse();
    CHECK(q.coeff({1}) == t2 - unit);

    CHECK_THROWS_AS(pow_binomial(s, t), std::domain_error);

    // integer exponents agree with pow
    auto base = one - s.scaled(Rational(2)) + s.times(Monomial::var(0, 1)).scaled(Rational(1, 3));
    for (int k = -3; k <= 3; ++k)
        CHECK(pow_binomial(base, TPoly::constant(k, 1)) == base.pow(k));
}

TEST_CASE("assemble_product basics") {
    auto vars = make_vars({"a", "b"}, 3);
    CHECK(assemble_product(vars, 12, std::span<const Factor>{}) == QSeries::one(vars, LaurentSeries::one(12)));
    auto unit = TPoly::constant(1, 1);
    CHECK(assemble_product(vars, unit, std::span<const Factor>{}) == TSeries::one(vars, unit));

    // (1 - a)^2 (1 - a)^{-2} = 1 via Binomial factors
    std::vector<Factor> fs{{Factor::Kind::Binomial, Monomial{1, {1, 0}}, 2},
                           {Factor::Kind::Binomial, Monomial{1, {1, 0}}, -2}};
    CHECK(assemble_product(vars, 12, fs) == QSeries::one(vars, LaurentSeries::one(12)));
    std::vector<Factor> mq{{Factor::Kind::MacMahon, Monomial{1, {1, 0}}}};
    CHECK_THROWS_AS(assemble_product(vars, unit, mq), std::invalid_argument);
}
