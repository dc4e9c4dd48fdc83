#include "doctest.h"
#include "nok/schur.hpp"

using namespace nok;

namespace {

// 1/(1-tau^a) as an exact-through-cap series
LaurentSeries geo(int a, int cap) { return LaurentSeries::geometric(a, 0, cap); }

bool eq(const LaurentSeries& a, const LaurentSeries& b, int upto) { return eq_to_order(a, b, upto).equal; }

}  // namespace

TEST_CASE("power sums") {
    const int M = 30;
    auto p1 = power_sum_spec(1, {}, M);
    CHECK(eq(p1, LaurentSeries::geometric(2, 1, M), M));
    // nu = (1): x_1 = q^{1/2} = tau^{-1}, x_i = tau^{2i-1} for i >= 2
    auto p1n = power_sum_spec(1, {1}, M);
    CHECK(eq(p1n, LaurentSeries::monomial(1, -1, M) + LaurentSeries::geometric(2, 3, M), M));
    CHECK(p1n.lo() == -1);
    CHECK(eq(power_sum_spec(2, {}, M), LaurentSeries::geometric(4, 2, M), M));
    CHECK_THROWS(power_sum_spec(0, {}, M));
}

TEST_CASE("complete symmetric functions") {
    const int M = 30;
    SpecContext ctx({}, M);
    CHECK(complete_h_spec(0, ctx) == LaurentSeries::one(M));
    CHECK(complete_h_spec(-1, ctx).is_exact_zero());
    CHECK(eq(complete_h_spec(1, ctx), LaurentSeries::geometric(2, 1, M), M));

    // h_2 by brute force: sum_{i<=j} x_i x_j with x_i = tau^{2i-1}
    LaurentSeries brute = LaurentSeries::zero(M);
    for (int i = 1; 2 * i - 1 <= M; ++i)
        for (int j = i; (2 * i - 1) + (2 * j - 1) <= M; ++j) brute += LaurentSeries::monomial(1, 2 * i + 2 * j - 2, M);
    CHECK(eq(complete_h_spec(2, ctx), brute, M));

    // h_k(q^rho) = tau^k / prod_{m<=k} (1 - tau^{2m})
    for (int k = 0; k <= 6; ++k) {
        LaurentSeries c = LaurentSeries::monomial(1, k, M);
        for (int m = 1; m <= k; ++m) c *= geo(2 * m, M);
        CHECK(eq(complete_h_spec(k, ctx), c, M));
    }
}

TEST_CASE("schur_rho_closed examples") {
    const int M = 30;
    CHECK(schur_rho_closed({}, M) == LaurentSeries::one(M));
    CHECK(eq(schur_rho_closed({1}, M), LaurentSeries::geometric(2, 1, M), M));
    auto expect = LaurentSeries::monomial(1, 5, M) * geo(6, M) * geo(2, M) * geo(2, M);
    CHECK(eq(schur_rho_closed({2, 1}, M), expect, M));
}

TEST_CASE("skew schur examples") {
    const int M = 30;
    CHECK(eq(skew_schur_spec({1}, {}, {}, M), LaurentSeries::geometric(2, 1, M), M));
    CHECK(skew_schur_spec({1}, {2}, {}, M).is_exact_zero());
    CHECK(skew_schur_spec({1}, {2}, {3, 1}, M).is_exact_zero());
    CHECK(skew_schur_spec({2, 1}, {2, 1}, {1}, M) == LaurentSeries::one(M));
}

TEST_CASE("Jacobi-Trudi against the hook-content closed form, |lambda| <= 8") {
    const int M = 40;
    SpecContext ctx({}, M);
    for (const auto& l : enumerate_upto(8)) {
        auto s = skew_schur_spec(l, {}, ctx);
        auto c = schur_rho_closed(l, M);
        INFO(l.to_string());
        CHECK(s.prec() >= M);
        CHECK(eq(s, c, M));
        // conjugation: ratio is tau^{2n(l) - 2n(l^t)}
        const auto t = l.conjugate();
        auto ct = schur_rho_closed(t, M);
        CHECK(eq(c, ct.shifted(2 * stats(l).n_stat - 2 * stats(t).n_stat).recapped(M), M));
        // homogeneity: lowest exponent >= |l|
        if (!s.is_zero()) CHECK(s.lo() >= l.size());
    }
}

TEST_CASE("h-form and e-form determinants agree at shifted specializations") {
    const int M = 24;
    for (const auto& nu : enumerate_upto(3)) {
        SpecContext ctx(nu, M);
        for (const auto& l : enumerate_upto(5))
            for (const auto& m : subpartitions(l)) {
                auto a = skew_schur_spec(l, m, ctx, JacobiTrudi::H);
                auto b = skew_schur_spec(l, m, ctx, JacobiTrudi::E);
                const int w = std::min(a.prec(), b.prec());
                INFO(l.to_string(), "/", m.to_string(), " at ", nu.to_string());
                CHECK(eq(a, b, w));
                CHECK(w >= 0);
            }
    }
}

TEST_CASE("branching: containment and homogeneity at nu = empty") {
    const int M = 24;
    SpecContext ctx({}, M);
    for (const auto& l : enumerate_upto(5))
        for (const auto& m : enumerate_upto(5)) {
            auto s = skew_schur_spec(l, m, ctx);
            if (!l.contains(m)) {
                CHECK(s.is_zero());
                CHECK(s.exact());
            } else if (!s.is_zero()) {
                CHECK(s.lo() >= l.size() - m.size());
            }
        }
}
