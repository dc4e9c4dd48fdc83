#include "nok/acceptance.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "nok/compare.hpp"
#include "nok/fock.hpp"
#include "nok/identities.hpp"
#include "nok/schur.hpp"
#include "nok/sweeps.hpp"

namespace nok {

namespace {

const Caps kTheoremCaps[] = {{1, 4, 24, 0}, {2, 3, 20, 0}, {3, 2, 20, 0}};

std::string caps_text(const Caps& c) {
    std::ostringstream os;
    os << "N=" << c.N << " D=" << c.D << " M=" << c.M;
    return os.str();
}

std::string failure_text(const Report& r) {
    std::ostringstream os;
    os << r.identity << " (" << caps_text(r.caps) << ", s_deg=" << r.caps.s_deg << ")";
    if (r.witness) {
        os << ": " << r.witness->stage << " at " << r.witness->monomial;
        if (r.witness->tau_exponent) os << " tau^" << *r.witness->tau_exponent;
        os << ": " << r.witness->lhs << " vs " << r.witness->rhs;
    }
    return os.str();
}

// Accumulates sub-checks; keeps the first failure.
struct Tally {
    int checks = 0;
    bool pass = true;
    std::string first_failure;

    void add(bool ok, const std::string& what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            first_failure = what;
        }
    }
    void add(const Report& r) { add(r.match, failure_text(r)); }
};

CriterionResult finish(int id, std::string title, const Tally& t, std::string ran) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.pass = t.pass;
    r.detail = t.pass ? std::move(ran) : ran + "; first failure: " + t.first_failure;
    return r;
}

CriterionResult three_way(int id, Family f, Exec exec) {
    Tally t;
    for (const auto& c : kTheoremCaps) t.add(three_way_check(f, c, exec));
    return finish(id, f == Family::Z ? "three-way oracle Z_N" : "three-way oracle Z~_N", t,
                  std::to_string(t.checks) + " cap sets, def = sum = prod through tau^M");
}

CriterionResult theorems(Exec exec) {
    Tally t;
    for (Family f : {Family::Z, Family::ZTilde})
        for (const auto& c : kTheoremCaps) t.add(theorem_check(f, c, exec));
    return finish(3, "theorems main / main2", t,
                  std::to_string(t.checks) + " checks; main covers odd N (g-factors) and even N (f-factors)");
}

CriterionResult lemma_inf_finite(Exec exec) {
    Tally t;
    const auto r = lemma_inf_finite_sweep(3, 3, 24, exec);
    t.add(r);
    return finish(4, "inf/inf = finite lemma", t, r.notes.front() + ", z_deg=3, M=24");
}

CriterionResult fock_lemmas(Exec exec) {
    Tally t;
    int patterns = 0;
    auto run = [&](const Report& r) {
        t.add(r);
        patterns += std::stoi(r.notes.front());
    };
    for (int L : {1, 2, 3}) run(fock_lemma_sweep(L, Pairing::Identity, 3, 16, exec));
    for (int L : {1, 2}) run(fock_lemma_sweep(L, Pairing::Conjugate, 4, 16, exec));
    const auto comm = commutation_sweep(4, 16);
    t.add(comm);
    return finish(5, "Fock trace lemmas and commutation relations", t,
                  std::to_string(patterns) + " trace identities (M=16), commutation on " + comm.notes.front() +
                      " (M=16)");
}

CriterionResult vertex_symmetries(Exec exec) {
    Tally t;
    const auto rot = vertex_symmetry_sweep(false, 6, 30, exec);
    const auto mir = vertex_symmetry_sweep(true, 5, 30, exec);
    t.add(rot);
    t.add(mir);
    return finish(6, "vertex symmetries", t,
                  "rotation: " + rot.notes.front() + " (size <= 6), mirror: " + mir.notes.front() +
                      " (size <= 5), M=30");
}

CriterionResult schur_oracle() {
    Tally t;
    const int M = 40;
    SpecContext ctx(Partition{}, M);
    for (const auto& lam : enumerate_upto(8)) {
        const auto jt = skew_schur_spec(lam, Partition{}, ctx);
        const auto closed = schur_rho_closed(lam, M);
        const auto c = eq_to_order(jt, closed, M);
        t.add(c.equal && c.window >= M, "lambda = " + lam.to_string());
    }
    return finish(7, "Schur oracle", t, std::to_string(t.checks) + " partitions |lambda| <= 8, M=40");
}

CriterionResult classic_no(Exec exec) {
    Tally t;
    t.add(corollary_check(Corollary::CorMain2, {1, 0, 0, 6}, exec));
    t.add(corollary_check(Corollary::NoClassic, {1, 0, 0, 6}, exec));
    t.add(no_classic_t1_check(10, exec));
    return finish(8, "classic Nekrasov-Okounkov formula", t,
                  "cor_main2 at N=1 and the hook form to s_deg=6; t=1 collapse to s_deg=10");
}

CriterionResult conjugation_no(Exec exec) {
    Tally t;
    const auto r = corollary_check(Corollary::ConjNo, {1, 0, 0, 5}, exec);
    t.add(r);
    const auto lhs = corollary_lhs(Corollary::ConjNo, 1, 1);
    const auto rhs = corollary_rhs(Corollary::ConjNo, 1, 1, EpsJ::OddPlus, 1, exec);
    const TPoly tv = TPoly::var(1, 1);
    const TPoly expect = tv * tv - TPoly::constant(1, 1);
    t.add(lhs.coeff({1}) == expect && rhs.coeff({1}) == expect, "s^1 coefficient is not t^2 - 1");
    const auto f1 = corollary_rhs(Corollary::ConjNo, 1, 8, EpsJ::OddPlus, 1, exec);
    const auto f2 = corollary_rhs(Corollary::ConjNo, 1, 8, EpsJ::OddPlus, 2, exec);
    const auto fc = compare(f1, f2);
    t.add(fc.equal, "product forms differ at " + (fc.witness ? Monomial{1, fc.witness->monomial}.to_string(*f1.vars()) : ""));
    std::string sign_note;
    for (const auto& n : r.notes)
        if (n.find("cor_main") != std::string::npos) sign_note = n;
    return finish(9, "conjugation Nekrasov-Okounkov formula", t,
                  "s^1 = t^2 - 1, full equality to s_deg=5, product forms equal to s_deg=8; " + sign_note);
}

CriterionResult corollaries(Exec exec) {
    Tally t;
    std::string conv;
    t.add(corollary_check(Corollary::CorMain2, {2, 0, 0, 4}, exec));
    const auto even = corollary_check(Corollary::CorMain, {2, 0, 0, 4}, exec);
    t.add(even);
    // eps_j only enters for odd N; N = 1 and 3 settle the convention.
    for (int N : {1, 3}) {
        const auto r = corollary_check(Corollary::CorMain, {N, 0, 0, 4}, exec);
        t.add(r);
        for (const auto& n : r.notes)
            if (n.rfind("matching convention", 0) == 0) conv += std::string(conv.empty() ? " " : "; ") + "N=" + std::to_string(N) + ": " + n.substr(21);
    }
    return finish(10, "corollaries cor_main / cor_main2", t,
                  "N=2 at s_deg=4 (eps_j absent for even N); odd-N eps_j convention:" +
                      (conv.empty() ? std::string(" none matched") : conv));
}

CriterionResult ring_membership(Exec exec) {
    Tally t;
    for (Family f : {Family::Z, Family::ZTilde})
        for (const auto& c : kTheoremCaps) t.add(ring_membership_check(f, c, exec));
    return finish(11, "ring membership of the theorem sums", t,
                  std::to_string(t.checks) + " sums, no negative tau exponent in any Q-coefficient");
}

}  // namespace

CriterionResult run_criterion(int id, Exec exec) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    switch (id) {
        case 1: r = three_way(1, Family::Z, exec); break;
        case 2: r = three_way(2, Family::ZTilde, exec); break;
        case 3: r = theorems(exec); break;
        case 4: r = lemma_inf_finite(exec); break;
        case 5: r = fock_lemmas(exec); break;
        case 6: r = vertex_symmetries(exec); break;
        case 7: r = schur_oracle(); break;
        case 8: r = classic_no(exec); break;
        case 9: r = conjugation_no(exec); break;
        case 10: r = corollaries(exec); break;
        case 11: r = ring_membership(exec); break;
        default: throw std::out_of_range("no acceptance criterion " + std::to_string(id));
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> run_acceptance(Exec exec, const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriteria; ++id) {
        out.push_back(run_criterion(id, exec));
        if (on_result) on_result(out.back());
    }
    return out;
}

}  // namespace nok
