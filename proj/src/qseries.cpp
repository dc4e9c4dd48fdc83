#include "nok/qseries.hpp"

#include <stdexcept>

namespace nok {

std::vector<Integer> euler_coeffs(EulerMode mode, int K) {
    if (K < 0) return {};
    std::vector<Integer> c(static_cast<std::size_t>(K) + 1, Integer(0));
    c[0] = 1;
    if (mode == EulerMode::InvFull) {
        for (int n = 1; n <= K; ++n)
            for (int k = n; k <= K; ++k) c[k] += c[k - n];
    } else {
        // distinct odd parts: 0/1 knapsack, descending k
        for (int n = 1; n <= K; n += 2)
            for (int k = K; k >= n; --k) c[k] += c[k - n];
    }
    return c;
}

std::vector<LaurentSeries> macmahon_coeffs(int K, int shift, int power, int cap) {
    std::vector<LaurentSeries> F;
    if (K < 0) return F;
    F.push_back(LaurentSeries::one(cap));
    if (power == 0 || K == 0) {
        F.resize(static_cast<std::size_t>(K) + 1, LaurentSeries::zero(cap));
        return F;
    }
    // log M(z) = -sum_k z^k/k * tau^{2k}/(1 - tau^{2k})^2, so with g_k := k*[z^k] log M^power:
    // g_k = -power * sum_{m>=1} m tau^{2km} (times tau^{2k shift}).
    std::vector<LaurentSeries> g(static_cast<std::size_t>(K) + 1, LaurentSeries::zero(cap));
    for (int k = 1; k <= K; ++k) {
        std::vector<Rational> cs;
        const int lo = 2 * k + 2 * k * shift;
        for (int e = lo, m = 1; e <= cap; ++e) {
            if ((e - lo) % (2 * k) == 0) {
                cs.emplace_back(-power * m);
                ++m;
            } else {
                cs.emplace_back(0);
            }
        }
        g[k] = LaurentSeries::from_coeffs(lo, cs, cap, cap);
    }
    // F = exp(G): k F_k = sum_{j=1}^k g_j F_{k-j}
    for (int k = 1; k <= K; ++k) {
        LaurentSeries acc = LaurentSeries::zero(cap);
        for (int j = 1; j <= k; ++j) acc += g[j] * F[k - j];
        F.push_back(acc.scaled(Rational(1, k)));
    }
    return F;
}

QSeries macmahon(const VarTablePtr& vars, int cap, const Monomial& z, int laurent_shift, int power) {
    if (z.degree() <= 0) throw std::domain_error("non-truncating product");
    const int K = vars->max_degree() / z.degree();
    auto cs = macmahon_coeffs(K, laurent_shift, power, cap);
    return QSeries::univariate(vars, LaurentSeries::one(cap), cs, z);
}

TSeries pow_binomial(const TSeries& base, const TPoly& T, Exec exec) {
    const TPoly& unit = base.unit();
    if (base.constant_term() != unit) throw std::domain_error("pow_binomial: constant term must be 1");
    const TSeries x = base - TSeries::one(base.vars(), unit);
    TSeries r = TSeries::one(base.vars(), unit);
    TSeries xp = TSeries::one(base.vars(), unit);
    for (int k = 1; k <= base.vars()->max_degree(); ++k) {
        xp = mul(xp, x, exec);
        if (xp.is_zero()) break;
        r += xp.scaled(binomial(T, k));
    }
    return r;
}

namespace {

template <class C>
MSeries<C> integer_binomial(const VarTablePtr& vars, const C& unit, const Monomial& a, int power) {
    const int K = vars->max_degree() / a.degree();
    std::vector<C> cs;
    // (1 - a)^power = sum_k binom(power, k) (-a)^k
    Rational b = 1;
    for (int k = 0; k <= K; ++k) {
        cs.push_back(CoeffOps<C>::from_rational((k & 1) ? Rational(-b) : b, unit));
        b = b * Rational(power - k) / Rational(k + 1);
    }
    return MSeries<C>::univariate(vars, unit, cs, a);
}

void check_arg(const Factor& f) {
    if (f.arg.degree() <= 0) throw std::domain_error("non-truncating product");
}

}  // namespace

QSeries assemble_product(const VarTablePtr& vars, int cap, std::span<const Factor> factors, Exec exec) {
    const auto unit = LaurentSeries::one(cap);
    QSeries r = QSeries::one(vars, unit);
    for (const auto& f : factors) {
        check_arg(f);
        if (f.arg.degree() > vars->max_degree()) continue;
        if (f.tpower) throw std::invalid_argument("symbolic exponent in q-mode product");
        switch (f.kind) {
            case Factor::Kind::MacMahon:
                r = mul(r, macmahon(vars, cap, f.arg, f.laurent_shift, f.power), exec);
                break;
            case Factor::Kind::Binomial:
                r = mul(r, integer_binomial(vars, unit, f.arg, f.power), exec);
                break;
            case Factor::Kind::EulerInv:
                r = mul(r, euler_product(vars, unit, EulerMode::InvFull, f.arg).pow(f.power, exec), exec);
                break;
            case Factor::Kind::OddPlus:
                r = mul(r, euler_product(vars, unit, EulerMode::OddPlus, f.arg).pow(f.power, exec), exec);
                break;
        }
    }
    return r;
}

TSeries assemble_product(const VarTablePtr& vars, const TPoly& unit, std::span<const Factor> factors, Exec exec) {
    TSeries r = TSeries::one(vars, unit);
    for (const auto& f : factors) {
        check_arg(f);
        if (f.arg.degree() > vars->max_degree()) continue;
        switch (f.kind) {
            case Factor::Kind::MacMahon:
                throw std::invalid_argument("MacMahon factor in t-mode product");
            case Factor::Kind::Binomial:
                if (f.tpower) {
                    TSeries base = TSeries::one(vars, unit) - TSeries::monomial(vars, unit, f.arg, unit);
                    r = mul(r, pow_binomial(base, *f.tpower, exec), exec);
                } else {
                    r = mul(r, integer_binomial(vars, unit, f.arg, f.power), exec);
                }
                break;
            case Factor::Kind::EulerInv:
            case Factor::Kind::OddPlus: {
                if (f.tpower) throw std::invalid_argument("symbolic exponent on an Euler factor");
                const auto mode = f.kind == Factor::Kind::EulerInv ? EulerMode::InvFull : EulerMode::OddPlus;
                r = mul(r, euler_product(vars, unit, mode, f.arg).pow(f.power, exec), exec);
                break;
            }
        }
    }
    return r;
}

}  // namespace nok
