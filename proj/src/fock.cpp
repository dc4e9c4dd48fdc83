#include "nok/fock.hpp"

#include <stdexcept>

#include "nok/adaptive.hpp"
#include "nok/qseries.hpp"
#include "nok/schur.hpp"

namespace nok {

FockEngine::FockEngine(VarTablePtr vars, int cap, int size_cap)
    : vars_(std::move(vars)), cap_(cap), size_cap_(size_cap), zero_(LaurentSeries::zero(cap)) {
    if (size_cap_ < 0) throw std::invalid_argument("size cap must be non-negative");
    basis_ = enumerate_upto(size_cap_);
    for (int i = 0; i < static_cast<int>(basis_.size()); ++i) index_.emplace(basis_[i], i);
    sup_.resize(basis_.size());
    sub_.resize(basis_.size());
    SpecContext ctx(Partition{}, cap_);
    for (int o = 0; o < static_cast<int>(basis_.size()); ++o) {
        for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
            if (!basis_[o].contains(basis_[i])) continue;
            sub_[o].push_back(i);
            sup_[i].push_back(o);
            skew_.emplace(std::make_pair(o, i), skew_schur_spec(basis_[o], basis_[i], ctx));
        }
    }
}

int FockEngine::index(const Partition& lambda) const {
    auto it = index_.find(lambda);
    if (it == index_.end()) throw std::out_of_range("partition beyond the Fock size cap");
    return it->second;
}

const std::vector<int>& FockEngine::supersets(const Partition& lambda) const { return sup_[index(lambda)]; }
const std::vector<int>& FockEngine::subsets(const Partition& lambda) const { return sub_[index(lambda)]; }

const LaurentSeries& FockEngine::skew(const Partition& outer, const Partition& inner) const {
    auto it = skew_.find({index(outer), index(inner)});
    return it == skew_.end() ? zero_ : it->second;
}

FockState FockState::basis(const FockEngine& engine, const Partition& lambda) {
    FockState s(engine);
    s.add(lambda, QSeries::one(engine.vars(), engine.unit()));
    return s;
}

QSeries FockState::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? QSeries(engine_->vars(), engine_->unit()) : it->second;
}

void FockState::add(const Partition& lambda, const QSeries& c) {
    if (lambda.size() > engine_->size_cap() || c.is_zero()) return;
    auto it = terms_.find(lambda);
    if (it == terms_.end()) {
        terms_.emplace(lambda, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FockState FockState::scaled(const QSeries& c) const {
    FockState out(*engine_);
    for (const auto& [l, x] : terms_) out.add(l, x * c);
    return out;
}

FockState gamma_apply(const FockState& state, const GammaAtom& atom) {
    const FockEngine& eng = state.engine();
    const int D = eng.vars()->max_degree();
    const int wd = atom.weight.degree();
    const bool minus = atom.dir == GammaAtom::Dir::Minus;
    // Gamma(x)^{-1} acts as the w-twisted Gamma(-x): s_{mu/lambda} -> s_{mu^t/lambda^t}
    const Monomial x = atom.eps < 0 ? atom.weight.negated() : atom.weight;
    FockState out(eng);
    for (const auto& [lambda, c] : state.terms()) {
        const auto& targets = minus ? eng.supersets(lambda) : eng.subsets(lambda);
        for (int idx : targets) {
            const Partition& mu = eng.basis()[static_cast<std::size_t>(idx)];
            const int d = minus ? mu.size() - lambda.size() : lambda.size() - mu.size();
            if (wd * d > D) continue;
            const Partition& outer = minus ? mu : lambda;
            const Partition& inner = minus ? lambda : mu;
            const LaurentSeries& s =
                atom.eps > 0 ? eng.skew(outer, inner) : eng.skew(outer.conjugate(), inner.conjugate());
            if (s.is_exact_zero()) continue;
            out.add(mu, c.times(x.pow(d)).scaled(s.shifted(atom.tau_shift * d)));
        }
    }
    return out;
}

FockState energy_apply(const FockState& state, const EnergyAtom& atom) {
    const FockEngine& eng = state.engine();
    FockState out(eng);
    for (const auto& [lambda, c] : state.terms()) {
        QSeries v = c.times(atom.monomial.pow(lambda.size()));
        if (atom.tau_per_level != 0) v = v.scaled(LaurentSeries::monomial(1, atom.tau_per_level * lambda.size(), eng.cap()));
        out.add(lambda, v);
    }
    return out;
}

FockState apply_word(const FockState& state, const OperatorWord& word) {
    FockState s = state;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (const auto* g = std::get_if<GammaAtom>(&*it)) s = gamma_apply(s, *g);
        else s = energy_apply(s, std::get<EnergyAtom>(*it));
    }
    return s;
}

QSeries trace(const FockEngine& engine, const OperatorWord& word, Pairing pairing, Exec exec) {
    bool has_energy = false;
    for (const auto& a : word) {
        if (const auto* g = std::get_if<GammaAtom>(&a)) {
            if (g->weight.degree() <= 0) throw std::domain_error("non-truncating trace");
        } else if (std::get<EnergyAtom>(a).monomial.degree() > 0) {
            has_energy = true;
        }
    }
    if (!has_energy) throw std::domain_error("non-truncating trace");
    if (engine.size_cap() < engine.vars()->max_degree())
        throw std::invalid_argument("trace needs size cap >= degree cap");

    const auto& basis = engine.basis();
    std::vector<QSeries> parts(basis.size(), QSeries(engine.vars(), engine.unit()));
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(basis.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const Partition& mu = basis[static_cast<std::size_t>(i)];
        const FockState s = apply_word(FockState::basis(engine, mu), word);
        parts[static_cast<std::size_t>(i)] = s.coeff(pairing == Pairing::Identity ? mu : mu.conjugate());
    }
    QSeries total(engine.vars(), engine.unit());
    for (const auto& p : parts) total += p;
    return total;
}

Comparison compare(const FockState& a, const FockState& b, int upto) {
    Comparison out;
    std::vector<Partition> keys;
    for (const auto& [l, c] : a.terms()) keys.push_back(l);
    for (const auto& [l, c] : b.terms())
        if (!a.terms().contains(l)) keys.push_back(l);
    for (const auto& l : keys) out.window = std::min(out.window, std::min(certified_window(a.coeff(l)), certified_window(b.coeff(l))));
    out.window = std::min(out.window, upto);
    for (const auto& l : keys) {
        auto c = compare(a.coeff(l), b.coeff(l), out.window);
        if (!c.equal) {
            out.equal = false;
            out.witness = c.witness;
            break;
        }
    }
    return out;
}

CommutationReport check_commutation(const FockEngine& engine, const Monomial& z, const Monomial& w) {
    if (z.degree() <= 0 || w.degree() <= 0) throw std::domain_error("commutation check needs positive-degree arguments");
    CommutationReport rep;
    const int D = engine.vars()->max_degree();
    const EnergyAtom qL0{Monomial::unit(engine.vars()->size()), -2};
    const auto gp = [](const Monomial& m, int eps, int shift = 0) {
        return GammaAtom{GammaAtom::Dir::Plus, eps, m, shift};
    };
    const auto gm = [](const Monomial& m, int eps, int shift = 0) {
        return GammaAtom{GammaAtom::Dir::Minus, eps, m, shift};
    };
    auto record = [&](const Comparison& c, const char* rel, const Partition& ket) {
        rep.window = std::min(rep.window, c.window);
        if (!c.equal && rep.equal) {
            rep.equal = false;
            rep.relation = rel;
            rep.ket = ket;
        }
    };
    for (const auto& lambda : engine.basis()) {
        if (lambda.size() > engine.size_cap() - D) continue;
        ++rep.kets_checked;
        const FockState ket = FockState::basis(engine, lambda);
        for (int a : {1, -1}) {
            for (int b : {1, -1}) {
                const FockState lhs = apply_word(ket, {gp(z, a), gm(w, b)});
                const FockState rhs =
                    apply_word(ket, {gm(w, b), gp(z, a)}).scaled(macmahon(engine.vars(), engine.cap(), z * w, 0, -a * b));
                record(compare(lhs, rhs), "Gamma+ Gamma-", lambda);
            }
            record(compare(apply_word(ket, {qL0, gp(z, a)}), apply_word(ket, {gp(z, a, 2), qL0})), "q^L0 Gamma+", lambda);
            record(compare(apply_word(ket, {qL0, gm(z, a)}), apply_word(ket, {gm(z, a, -2), qL0})), "q^L0 Gamma-", lambda);
        }
    }
    return rep;
}

LaurentSeries vertex_via_fock(const Partition& lambda, const Partition& mu, int cap) {
    FockEngine engine(make_vars({}, 0), cap, std::max(lambda.size(), mu.size()));
    const Monomial one = Monomial::unit(0);
    const OperatorWord word{GammaAtom{GammaAtom::Dir::Minus, 1, one, 0}, GammaAtom{GammaAtom::Dir::Plus, 1, one, 0}};
    const FockState s = apply_word(FockState::basis(engine, mu), word);
    return s.coeff(lambda.conjugate()).constant_term().shifted(-stats(lambda).kappa);
}

FockLemmaResult check_trace_lemma(const std::vector<int>& eps1, const std::vector<int>& eps2, Pairing pairing, int D,
                                  int M, Exec exec) {
    if (eps1.size() != eps2.size() || eps1.empty()) throw std::invalid_argument("sign patterns must have equal length L >= 1");
    const int L = static_cast<int>(eps1.size());
    std::vector<std::string> names;
    for (int i = 1; i <= L; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= L; ++i) names.push_back("y" + std::to_string(i));
    names.push_back("Q");
    const auto vars = make_vars(names, D);
    const int nv = vars->size();
    const Monomial Q = Monomial::var(2 * L, nv);

    OperatorWord word;
    for (int i = 0; i < L; ++i) word.push_back(GammaAtom{GammaAtom::Dir::Minus, eps1[i], Monomial::var(i, nv), 0});
    word.push_back(EnergyAtom{Q, 0});
    for (int i = 0; i < L; ++i) word.push_back(GammaAtom{GammaAtom::Dir::Plus, eps2[i], Monomial::var(L + i, nv), 0});

    std::vector<Factor> factors;
    factors.emplace_back(pairing == Pairing::Identity ? Factor::Kind::EulerInv : Factor::Kind::OddPlus, Q);
    for (int i = 0; i < L; ++i)
        for (int k = 0; k < L; ++k)
            for (int j = 0; 2 + j <= D; ++j) {
                Monomial a = Q.pow(j) * Monomial::var(i, nv) * Monomial::var(L + k, nv);
                const int e = eps1[i] * eps2[k];
                if (pairing == Pairing::Identity) {
                    factors.emplace_back(Factor::Kind::MacMahon, a, -e);
                } else {
                    const int c = (j % 2 == 1) ? 1 : -1;  // (-1)^{j-1}
                    if (c < 0) a = a.negated();
                    factors.emplace_back(Factor::Kind::MacMahon, a, -c * e);
                }
            }

    FockLemmaResult res;
    res.working_cap = with_certified_window(M, [&](int W) {
        FockEngine engine(vars, W, D);
        const QSeries lhs = trace(engine, word, pairing, exec);
        const QSeries rhs = assemble_product(vars, W, factors, exec);
        res.comparison = compare(lhs, rhs, M);
        res.equal = res.comparison.equal;
        return std::min(certified_window(lhs), certified_window(rhs));
    });
    return res;
}

}  // namespace nok
