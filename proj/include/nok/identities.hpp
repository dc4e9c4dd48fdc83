#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nok/exec.hpp"
#include "nok/mseries.hpp"
#include "nok/partition.hpp"

namespace nok {

/// N: number of partitions per tuple; D: total Q-degree cap; M: tau window that
/// must be certified; s_deg: total s-degree cap (t-mode).
struct Caps {
    int N = 1;
    int D = 0;
    int M = 0;
    int s_deg = 0;
};

struct ReportWitness {
    std::string stage;                 // which pair of sides disagreed
    std::string monomial;              // e.g. "Q1_1^2*Q2_1", "1" for the constant term
    std::optional<int> tau_exponent;   // q-mode only
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::string identity;
    Caps caps;
    bool match = true;
    std::optional<ReportWitness> witness;  // always set when !match
    /// Every compared coefficient is exact through tau^certified_window
    /// (nullopt in t-mode, where coefficients are polynomials).
    std::optional<int> certified_window;
    int working_cap = 0;
    double wall_ms = 0;
    std::vector<std::string> notes;

    [[nodiscard]] std::string status() const { return match ? "exact-match" : "mismatch"; }
};

enum class Family {
    Z,       // Z_N, Theorem-1.1 side
    ZTilde,  // Z~_N, Theorem-1.3 side
};

/// Q1_1..Q1_N, Q2_1..Q2_N with total-degree cap D.
[[nodiscard]] VarTablePtr q_vars(int N, int D);
/// s_1..s_N with total-degree cap s_deg.
[[nodiscard]] VarTablePtr s_vars(int N, int s_deg);

/// All N-tuples of partitions with total size <= D, in a fixed order.
[[nodiscard]] std::vector<std::vector<Partition>> partition_tuples(int N, int D);

/// One term of the theorem's nu-sum, kept in factored form:
///   sign * prod_i Q2_i^{q2_degree[i]} * tau^{tau_prefactor}
///   * prod_{linear} (1 - Q1_{index} tau^{tau_exp}) / prod_{hooks} (1 - tau^{2h})^2.
struct LinearFactor {
    int q1_index = 0;  // 0-based
    int tau_exp = 0;
};
struct TupleTerm {
    int sign = 1;
    std::vector<int> q2_degree;
    int tau_prefactor = 0;
    std::vector<LinearFactor> linear;
    std::vector<int> hooks;
};
[[nodiscard]] TupleTerm theorem_term(Family family, const std::vector<Partition>& nu);

/// Raw definition: sum over (mu, nu) tuples of products of vertices C_{empty,.,.}.
[[nodiscard]] QSeries partition_def(Family family, const Caps& caps, int W, Exec exec = Exec::Parallel);
/// Hook-weighted nu-sum, optionally times prod_i M(Q1_i; q).
[[nodiscard]] QSeries partition_sum(Family family, const Caps& caps, int W, bool with_macmahon,
                                    Exec exec = Exec::Parallel);
/// Infinite-product side, optionally times prod_i M(Q1_i; q).
[[nodiscard]] QSeries partition_prod(Family family, const Caps& caps, int W, bool with_macmahon,
                                     Exec exec = Exec::Parallel);

inline QSeries zn_def(const Caps& c, int W, Exec e = Exec::Parallel) { return partition_def(Family::Z, c, W, e); }
inline QSeries zn_sum(const Caps& c, int W, Exec e = Exec::Parallel) { return partition_sum(Family::Z, c, W, true, e); }
inline QSeries zn_prod(const Caps& c, int W, Exec e = Exec::Parallel) { return partition_prod(Family::Z, c, W, true, e); }
inline QSeries ztn_def(const Caps& c, int W, Exec e = Exec::Parallel) { return partition_def(Family::ZTilde, c, W, e); }
inline QSeries ztn_sum(const Caps& c, int W, Exec e = Exec::Parallel) {
    return partition_sum(Family::ZTilde, c, W, true, e);
}
inline QSeries ztn_prod(const Caps& c, int W, Exec e = Exec::Parallel) {
    return partition_prod(Family::ZTilde, c, W, true, e);
}

/// def = sum = prod through tau^M.
[[nodiscard]] Report three_way_check(Family family, const Caps& caps, Exec exec = Exec::Parallel);
/// Sum side against product side, both without prod M(Q1_i; q).
[[nodiscard]] Report theorem_check(Family family, const Caps& caps, Exec exec = Exec::Parallel);
/// The assembled theorem LHS has no negative tau exponent in any Q-coefficient.
[[nodiscard]] Report ring_membership_check(Family family, const Caps& caps, Exec exec = Exec::Parallel);

/// sum_{|lambda| <= z_deg} z^|lambda| s_lambda(q^{mu+rho}) s_{lambda^t}(q^{nu^t+rho})
/// against its finite-times-M(-z) product form.
[[nodiscard]] Report lemma_inf_finite_check(const Partition& mu, const Partition& nu, int z_deg, int M);

enum class Corollary { CorMain, CorMain2, NoClassic, ConjNo };

/// Sign convention for the odd-N exponent epsilon_j in the CorMain product.
enum class EpsJ {
    OddPlus,  // +1 for odd j, -1 for even j
    PowJ,     // (-1)^j
};

/// Variables s_1..s_N (s for the N = 1 forms); TPoly in t_1..t_N (t).
[[nodiscard]] TSeries corollary_lhs(Corollary which, int N, int s_deg);
/// form selects between the two printed product forms of ConjNo (1 or 2).
[[nodiscard]] TSeries corollary_rhs(Corollary which, int N, int s_deg, EpsJ eps = EpsJ::OddPlus, int form = 1,
                                    Exec exec = Exec::Parallel);
[[nodiscard]] Report corollary_check(Corollary which, const Caps& caps, Exec exec = Exec::Parallel);

/// Extra property for NoClassic: at t = 1 both sides collapse to 1.
[[nodiscard]] Report no_classic_t1_check(int s_deg, Exec exec = Exec::Parallel);

[[nodiscard]] const char* to_string(Family f) noexcept;
[[nodiscard]] const char* to_string(Corollary c) noexcept;

}  // namespace nok
