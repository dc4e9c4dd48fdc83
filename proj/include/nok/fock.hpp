#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "nok/compare.hpp"
#include "nok/exec.hpp"
#include "nok/mseries.hpp"
#include "nok/partition.hpp"

namespace nok {

/// Shared, read-only tables for one Fock computation: the basis |lambda| <= size_cap,
/// containment lists and every s_{mu/lambda}(q^rho) inside it. Safe to share
/// across threads once constructed.
class FockEngine {
public:
    FockEngine(VarTablePtr vars, int cap, int size_cap);

    [[nodiscard]] const VarTablePtr& vars() const noexcept { return vars_; }
    [[nodiscard]] int cap() const noexcept { return cap_; }
    [[nodiscard]] int size_cap() const noexcept { return size_cap_; }
    [[nodiscard]] const std::vector<Partition>& basis() const noexcept { return basis_; }
    /// Basis elements containing / contained in lambda (lambda itself included).
    [[nodiscard]] const std::vector<int>& supersets(const Partition& lambda) const;
    [[nodiscard]] const std::vector<int>& subsets(const Partition& lambda) const;
    /// s_{outer/inner}(q^rho); exact zero unless inner is contained in outer.
    [[nodiscard]] const LaurentSeries& skew(const Partition& outer, const Partition& inner) const;

    [[nodiscard]] LaurentSeries unit() const { return LaurentSeries::one(cap_); }
    [[nodiscard]] int index(const Partition& lambda) const;

private:
    VarTablePtr vars_;
    int cap_;
    int size_cap_;
    std::vector<Partition> basis_;
    std::map<Partition, int> index_;
    std::vector<std::vector<int>> sup_;
    std::vector<std::vector<int>> sub_;
    std::map<std::pair<int, int>, LaurentSeries> skew_;
    LaurentSeries zero_;
};

/// Finite combination of basis vectors |lambda> with series coefficients.
class FockState {
public:
    explicit FockState(const FockEngine& engine) : engine_(&engine) {}
    static FockState basis(const FockEngine& engine, const Partition& lambda);

    [[nodiscard]] const std::map<Partition, QSeries>& terms() const noexcept { return terms_; }
    [[nodiscard]] QSeries coeff(const Partition& lambda) const;
    [[nodiscard]] const FockEngine& engine() const noexcept { return *engine_; }

    /// Drops partitions beyond the size cap and zero coefficients.
    void add(const Partition& lambda, const QSeries& c);
    [[nodiscard]] FockState scaled(const QSeries& c) const;

private:
    const FockEngine* engine_;
    std::map<Partition, QSeries> terms_;
};

/// Gamma_{+/-}(x q^rho)^{eps} with x = weight * tau^{tau_shift}.
struct GammaAtom {
    enum class Dir { Plus, Minus };
    Dir dir = Dir::Minus;
    int eps = 1;
    Monomial weight;
    int tau_shift = 0;
};

/// (monomial * tau^{tau_per_level})^{L0}: multiplies |lambda> by that base to the |lambda|.
struct EnergyAtom {
    Monomial monomial;
    int tau_per_level = 0;
};

using Atom = std::variant<GammaAtom, EnergyAtom>;
/// Written left to right as in an operator product; applied right to left.
using OperatorWord = std::vector<Atom>;

[[nodiscard]] FockState gamma_apply(const FockState& state, const GammaAtom& atom);
[[nodiscard]] FockState energy_apply(const FockState& state, const EnergyAtom& atom);
[[nodiscard]] FockState apply_word(const FockState& state, const OperatorWord& word);

enum class Pairing { Identity, Conjugate };

/// sum_{|mu| <= size_cap} <mu| word |mu> (or |mu^t> for Conjugate).
/// Requires an energy atom of positive degree and Gamma weights of positive
/// degree (then every closed path from mu carries degree >= |mu|, so the
/// truncation is exact up to degree D when size_cap >= D); otherwise throws
/// std::domain_error("non-truncating trace").
[[nodiscard]] QSeries trace(const FockEngine& engine, const OperatorWord& word, Pairing pairing,
                            Exec exec = Exec::Parallel);

/// Coefficient-wise comparison of two states.
[[nodiscard]] Comparison compare(const FockState& a, const FockState& b, int upto = LaurentSeries::kExact);

struct CommutationReport {
    bool equal = true;
    int window = LaurentSeries::kExact;
    std::string relation;           // first failing relation, if any
    std::optional<Partition> ket;   // and the ket it failed on
    int kets_checked = 0;
};

/// On every ket |lambda| <= size_cap - D:
///   Gamma_+(z)^a Gamma_-(w)^b = M(zw; q)^{-ab} Gamma_-(w)^b Gamma_+(z)^a   (a, b = +-1)
///   q^{L0} Gamma_+(z) = Gamma_+(q^{-1} z) q^{L0},  q^{L0} Gamma_-(z) = Gamma_-(q z) q^{L0}
/// z and w must have positive degree.
[[nodiscard]] CommutationReport check_commutation(const FockEngine& engine, const Monomial& z, const Monomial& w);

/// tau^{-kappa(lambda)} <lambda^t| Gamma_-(q^rho) Gamma_+(q^rho) |mu>, an
/// operator-side evaluation of C_{lambda,mu,empty}.
[[nodiscard]] LaurentSeries vertex_via_fock(const Partition& lambda, const Partition& mu, int cap);

struct FockLemmaResult {
    bool equal = true;
    Comparison comparison;
    int working_cap = 0;
};

/// Lemma-type trace identities over variables x_1..x_L, y_1..y_L, Q:
/// identity pairing  -> prod (1-Q^n)^{-1} prod_{i,k,j>=0} M(Q^j x_i y_k)^{-e1_i e2_k};
/// conjugate pairing -> prod (1+Q^{2n-1}) prod_{i,k,j>=0} M(c Q^j x_i y_k)^{-c e1_i e2_k}, c = (-1)^{j-1}.
/// Compared through tau^M at total degree D.
[[nodiscard]] FockLemmaResult check_trace_lemma(const std::vector<int>& eps1, const std::vector<int>& eps2,
                                                Pairing pairing, int D, int M, Exec exec = Exec::Parallel);

}  // namespace nok
