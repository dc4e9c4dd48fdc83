#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nok/mseries.hpp"

namespace nok {

enum class EulerMode {
    InvFull,  // prod_{n>=1} (1 - u^n)^{-1}
    OddPlus,  // prod_{n>=1} (1 + u^{2n-1})
};

/// Coefficients of u^0..u^K of the Euler-type product.
[[nodiscard]] std::vector<Integer> euler_coeffs(EulerMode mode, int K);

/// Coefficients of u^0..u^K of M(u tau^{2 shift}; q)^power, where
/// M(z; q) = prod_{n>=1} (1 - z tau^{2n})^n. Computed as exp(power * log M).
[[nodiscard]] std::vector<LaurentSeries> macmahon_coeffs(int K, int shift, int power, int cap);

/// M(z tau^{2 shift}; q)^power over the variables of `vars`, tau cap `cap`.
/// Throws std::domain_error("non-truncating product") when deg z = 0.
[[nodiscard]] QSeries macmahon(const VarTablePtr& vars, int cap, const Monomial& z, int laurent_shift = 0,
                               int power = 1);

template <class C>
[[nodiscard]] MSeries<C> euler_product(const VarTablePtr& vars, const C& unit, EulerMode mode, const Monomial& u) {
    if (u.degree() <= 0) throw std::domain_error("non-truncating product");
    const int K = vars->max_degree() / u.degree();
    std::vector<C> cs;
    for (const auto& c : euler_coeffs(mode, K)) cs.push_back(CoeffOps<C>::from_rational(Rational(c), unit));
    return MSeries<C>::univariate(vars, unit, cs, u);
}

/// sum_k binom(T, k) (base - 1)^k. Throws std::domain_error unless the
/// constant term of base is exactly 1.
[[nodiscard]] TSeries pow_binomial(const TSeries& base, const TPoly& T, Exec exec = Exec::Parallel);

/// One factor of an infinite-product side.
struct Factor {
    enum class Kind {
        MacMahon,  // M(arg tau^{2 shift}; q)^power              (q-mode)
        Binomial,  // (1 - arg)^power, or ^tpower in t-mode
        EulerInv,  // prod (1 - arg^n)^{-1}
        OddPlus,   // prod (1 + arg^{2n-1})
    };
    Factor() = default;
    Factor(Kind k, Monomial a, int p = 1) : kind(k), arg(std::move(a)), power(p) {}
    Factor(Kind k, Monomial a, TPoly p) : kind(k), arg(std::move(a)), tpower(std::move(p)) {}

    Kind kind = Kind::MacMahon;
    Monomial arg;
    int power = 1;
    std::optional<TPoly> tpower;
    int laurent_shift = 0;
};

/// Product of all factors, truncated at the caps. Factors whose argument has
/// degree > D are 1 within the cap and skipped.
[[nodiscard]] QSeries assemble_product(const VarTablePtr& vars, int cap, std::span<const Factor> factors,
                                       Exec exec = Exec::Parallel);
[[nodiscard]] TSeries assemble_product(const VarTablePtr& vars, const TPoly& unit, std::span<const Factor> factors,
                                       Exec exec = Exec::Parallel);

}  // namespace nok
