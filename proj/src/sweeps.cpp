#include "nok/sweeps.hpp"

#include <array>
#include <chrono>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "nok/adaptive.hpp"
#include "nok/vertex.hpp"

namespace nok {

namespace {

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string signs(const std::vector<int>& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::string(e[i] > 0 ? "+" : "-");
    return s + ")";
}

template <class T>
std::vector<T> pick(const std::vector<T>& all, const std::optional<Sample>& sample) {
    if (!sample) return all;
    if (sample->count < 0) throw std::invalid_argument("sample count must be >= 0");
    std::vector<T> out;
    if (all.empty()) return out;
    std::mt19937_64 rng(sample->seed);
    for (int i = 0; i < sample->count; ++i) out.push_back(all[rng() % all.size()]);
    return out;
}

void fail_once(Report& rep, std::string stage, std::string where, std::string lhs = "", std::string rhs = "") {
    if (!rep.match) return;
    rep.match = false;
    rep.witness = ReportWitness{std::move(stage), std::move(where), std::nullopt, std::move(lhs), std::move(rhs)};
}

// Same names as check_trace_lemma uses.
VarTablePtr trace_vars(int L, int D) {
    std::vector<std::string> names;
    for (int i = 1; i <= L; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= L; ++i) names.push_back("y" + std::to_string(i));
    names.push_back("Q");
    return make_vars(names, D);
}

}  // namespace

Report fock_lemma_sweep(int L, Pairing pairing, int D, int M, Exec exec) {
    if (L < 1 || D < 0 || M < 0) throw std::invalid_argument("fock lemma needs L >= 1, D >= 0, M >= 0");
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.identity = std::string(pairing == Pairing::Identity ? "fock_trace_identity" : "fock_trace_conjugate") +
                   "_L" + std::to_string(L);
    rep.caps = Caps{L, D, M, 0};
    std::vector<std::vector<int>> pats;
    for (int mask = 0; mask < (1 << L); ++mask) {
        std::vector<int> e;
        for (int b = 0; b < L; ++b) e.push_back((mask >> b) & 1 ? -1 : 1);
        pats.push_back(e);
    }
    int window = LaurentSeries::kExact, cap = 0;
    for (const auto& e1 : pats)
        for (const auto& e2 : pats) {
            const auto r = check_trace_lemma(e1, e2, pairing, D, M, exec);
            window = std::min(window, r.comparison.window);
            cap = std::max(cap, r.working_cap);
            if (!r.equal) {
                const auto& w = r.comparison.witness;
                fail_once(rep, "trace vs product, eps1=" + signs(e1) + " eps2=" + signs(e2),
                          w ? Monomial{1, w->monomial}.to_string(*trace_vars(L, D)) : "", w ? w->lhs : "",
                          w ? w->rhs : "");
                if (w) rep.witness->tau_exponent = w->tau_exponent;
            }
        }
    rep.certified_window = window;
    rep.working_cap = cap;
    rep.notes.push_back(std::to_string(pats.size() * pats.size()) + " sign patterns");
    rep.wall_ms = since(t0);
    return rep;
}

Report commutation_sweep(int ket_size, int M) {
    if (ket_size < 0 || M < 0) throw std::invalid_argument("commutation sweep needs ket size and M >= 0");
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.identity = "fock_commutation";
    rep.caps = Caps{1, 2, M, 0};
    const int D = 2;
    const auto vars = make_vars({"z", "w"}, D);
    CommutationReport cr;
    // q^{L0} = tau^{-2 L0} costs up to 2 * size_cap orders of certified precision.
    rep.working_cap = with_certified_window(M, [&](int W) {
        FockEngine engine(vars, W, ket_size + D);
        cr = check_commutation(engine, Monomial::var(0, 2), Monomial::var(1, 2));
        return cr.window;
    });
    if (!cr.equal) fail_once(rep, cr.relation, cr.ket ? "ket " + cr.ket->to_string() : "");
    rep.certified_window = std::min(cr.window, M);
    rep.notes.push_back(std::to_string(cr.kets_checked) + " kets |lambda| <= " + std::to_string(ket_size));
    rep.wall_ms = since(t0);
    return rep;
}

Report vertex_symmetry_sweep(bool mirror, int max_size, int M, Exec exec, std::optional<Sample> sample) {
    if (max_size < 0 || M < 0) throw std::invalid_argument("vertex sweep needs max size and M >= 0");
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.identity = mirror ? "vertex_mirror" : "vertex_rotation";
    rep.caps = Caps{3, max_size, M, 0};
    const auto cases = pick(partition_tuples(3, max_size), sample);
    std::vector<SymmetryCheck> res(cases.size());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(cases.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto& c = cases[static_cast<std::size_t>(i)];
        res[static_cast<std::size_t>(i)] = mirror ? check_mirror(c[0], c[1], c[2], M) : check_rotation(c[0], c[1], c[2], M);
    }
    int window = LaurentSeries::kExact;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        window = std::min(window, res[i].window);
        rep.working_cap = std::max(rep.working_cap, res[i].working_cap);
        if (!res[i].equal || res[i].window < M) {
            const auto& c = cases[i];
            fail_once(rep, mirror ? "mirror relation" : "rotation",
                      c[0].to_string() + " " + c[1].to_string() + " " + c[2].to_string());
            if (res[i].first_divergent) rep.witness->tau_exponent = res[i].first_divergent;
        }
    }
    rep.certified_window = std::min(window, M);
    rep.notes.push_back(std::to_string(cases.size()) + (sample ? " sampled" : "") + " triples");
    rep.wall_ms = since(t0);
    return rep;
}

Report lemma_inf_finite_sweep(int max_size, int z_deg, int M, Exec exec, std::optional<Sample> sample) {
    if (max_size < 0) throw std::invalid_argument("max size must be >= 0");
    const auto t0 = std::chrono::steady_clock::now();
    const auto parts = enumerate_upto(max_size);
    std::vector<std::array<Partition, 2>> all;
    for (const auto& a : parts)
        for (const auto& b : parts) all.push_back({a, b});
    const auto cases = pick(all, sample);
    std::vector<Report> reps(cases.size());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(cases.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto& c = cases[static_cast<std::size_t>(i)];
        reps[static_cast<std::size_t>(i)] = lemma_inf_finite_check(c[0], c[1], z_deg, M);
    }
    Report rep;
    rep.identity = "lemma_inf_finite";
    rep.caps = Caps{1, z_deg, M, 0};
    int window = LaurentSeries::kExact;
    for (const auto& r : reps) {
        window = std::min(window, r.certified_window.value_or(LaurentSeries::kExact));
        rep.working_cap = std::max(rep.working_cap, r.working_cap);
        if (!r.match && rep.match) {
            rep.match = false;
            rep.witness = r.witness;
            if (rep.witness && !r.notes.empty()) rep.witness->stage += " (" + r.notes.front() + ")";
        }
    }
    rep.certified_window = std::min(window, M);
    rep.notes.push_back(std::to_string(cases.size()) + (sample ? " sampled" : "") + " (mu, nu) pairs, |mu|, |nu| <= " +
                        std::to_string(max_size));
    rep.wall_ms = since(t0);
    return rep;
}

}  // namespace nok
