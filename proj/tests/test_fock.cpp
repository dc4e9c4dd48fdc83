#include "doctest.h"
#include "nok/fock.hpp"
#include "nok/qseries.hpp"
#include "nok/schur.hpp"
#include "nok/vertex.hpp"

using namespace nok;

namespace {

const int M = 20;

GammaAtom minus(const Monomial& m, int eps = 1) { return {GammaAtom::Dir::Minus, eps, m, 0}; }
GammaAtom plus(const Monomial& m, int eps = 1) { return {GammaAtom::Dir::Plus, eps, m, 0}; }

}  // namespace

TEST_CASE("gamma actions on the vacuum") {
    auto vars = make_vars({"x"}, 4);
    FockEngine eng(vars, M, 4);
    const auto x = Monomial::var(0, 1);
    const auto vac = FockState::basis(eng, {});

    auto p = gamma_apply(vac, plus(x));
    CHECK(p.terms().size() == 1);
    CHECK(p.coeff({}) == QSeries::one(vars, eng.unit()));

    auto m = gamma_apply(vac, minus(x));
    auto mi = gamma_apply(vac, minus(x, -1));
    CHECK(m.terms().size() == eng.basis().size());
    for (const auto& l : enumerate_upto(4)) {
        auto expect = QSeries::monomial(vars, eng.unit(), x.pow(l.size()), schur_rho_closed(l, M));
        CHECK(compare(m.coeff(l), expect).equal);
        auto expect_inv = QSeries::monomial(vars, eng.unit(), x.negated().pow(l.size()), schur_rho_closed(l.conjugate(), M));
        CHECK(compare(mi.coeff(l), expect_inv).equal);
    }
}

TEST_CASE("energy operator") {
    auto vars = make_vars({"Q"}, 4);
    FockEngine eng(vars, M, 4);
    const auto Q = Monomial::var(0, 1);
    CHECK(energy_apply(FockState::basis(eng, {}), {Q}).coeff({}) == QSeries::one(vars, eng.unit()));
    CHECK(energy_apply(FockState::basis(eng, {2, 1}), {Q}).coeff({2, 1}) ==
          QSeries::monomial(vars, eng.unit(), Q.pow(3), eng.unit()));
    CHECK(energy_apply(FockState::basis(eng, {1}), {Q.negated()}).coeff({1}) ==
          QSeries::monomial(vars, eng.unit(), Q, LaurentSeries::monomial(-1, 0, M)));
}

TEST_CASE("trace of Q^L0") {
    auto vars = make_vars({"Q"}, 6);
    FockEngine eng(vars, M, 6);
    const auto Q = Monomial::var(0, 1);
    auto t = trace(eng, {EnergyAtom{Q}}, Pairing::Identity);
    auto p = euler_coeffs(EulerMode::InvFull, 6);
    for (int d = 0; d <= 6; ++d) CHECK(t.coeff({d}) == LaurentSeries::monomial(Rational(p[d]), 0, M));
    auto tc = trace(eng, {EnergyAtom{Q}}, Pairing::Conjugate);
    auto o = euler_coeffs(EulerMode::OddPlus, 6);
    for (int d = 0; d <= 6; ++d) {
        if (o[d] == 0) CHECK(tc.coeff({d}).is_exact_zero());
        else CHECK(tc.coeff({d}) == LaurentSeries::monomial(Rational(o[d]), 0, M));
    }
}

TEST_CASE("non-truncating trace") {
    auto vars = make_vars({"x", "y"}, 3);
    FockEngine eng(vars, M, 3);
    const OperatorWord w{minus(Monomial::var(0, 2)), plus(Monomial::var(1, 2))};
    CHECK_THROWS_WITH_AS(trace(eng, w, Pairing::Identity), "non-truncating trace", std::domain_error);
    const OperatorWord w0{EnergyAtom{Monomial::unit(2), -2}};
    CHECK_THROWS_WITH_AS(trace(eng, w0, Pairing::Identity), "non-truncating trace", std::domain_error);
}

TEST_CASE("single-pair trace lemma") {
    auto r = check_trace_lemma({1}, {1}, Pairing::Identity, 4, M, Exec::Serial);
    CHECK(r.equal);
    CHECK(r.comparison.window >= M);
    CHECK(check_trace_lemma({-1}, {1}, Pairing::Identity, 4, M).equal);
    CHECK(check_trace_lemma({1}, {-1}, Pairing::Conjugate, 4, M).equal);
    CHECK(check_trace_lemma({1, -1}, {-1, -1}, Pairing::Conjugate, 3, 12).equal);
}

TEST_CASE("trace serial and parallel agree") {
    auto vars = make_vars({"x", "y", "Q"}, 4);
    FockEngine eng(vars, 16, 4);
    const OperatorWord w{minus(Monomial::var(0, 3)), EnergyAtom{Monomial::var(2, 3)}, plus(Monomial::var(1, 3), -1)};
    CHECK(trace(eng, w, Pairing::Identity, Exec::Serial) == trace(eng, w, Pairing::Identity, Exec::Parallel));
}

TEST_CASE("commutation relations") {
    auto vars = make_vars({"z", "w"}, 4);
    FockEngine eng(vars, M, 6);
    auto r = check_commutation(eng, Monomial::var(0, 2), Monomial::var(1, 2));
    CHECK(r.equal);
    CHECK(r.kets_checked == 4);  // |lambda| <= 2
    FockEngine big(vars, M, 7);
    auto r2 = check_commutation(big, Monomial::var(0, 2), Monomial{-1, {0, 1}});
    CHECK(r2.equal);
}

TEST_CASE("gamma then its inverse is the identity") {
    auto vars = make_vars({"x"}, 3);
    FockEngine eng(vars, M, 6);
    const auto x = Monomial::var(0, 1);
    for (const auto& l : enumerate_upto(3)) {
        const auto ket = FockState::basis(eng, l);
        CHECK(compare(apply_word(ket, {minus(x, -1), minus(x)}), ket).equal);
        CHECK(compare(apply_word(ket, {plus(x), plus(x, -1)}), ket).equal);
    }
}

TEST_CASE("operator form of C_{lambda,mu,empty}") {
    for (const auto& l : enumerate_upto(3))
        for (const auto& m : enumerate_upto(3)) {
            auto a = vertex_via_fock(l, m, 24);
            auto b = topological_vertex(l, m, {}, 24).value;
            INFO(l.to_string(), m.to_string());
            auto c = eq_to_order(a, b, 24);
            CHECK(c.equal);
            CHECK(c.window >= 16);
        }
}
