#include "nok/schur.hpp"

#include <stdexcept>
#include <unordered_map>

namespace nok {

LaurentSeries power_sum_spec(int n, const Partition& nu, int cap) {
    if (n < 1) throw std::invalid_argument("power sum index must be positive");
    LaurentSeries p = LaurentSeries::geometric(2 * n, n, cap);
    for (int i = 1; i <= nu.length(); ++i) {
        p += LaurentSeries::monomial(1, n * (2 * i - 2 * nu[i] - 1), cap);
        p -= LaurentSeries::monomial(1, n * (2 * i - 1), cap);
    }
    return p;
}

SpecContext::SpecContext(Partition nu, int cap)
    : nu_(std::move(nu)), cap_(cap), zero_(LaurentSeries::zero(cap)) {
    h_.push_back(LaurentSeries::one(cap));
    e_.push_back(LaurentSeries::one(cap));
}

const LaurentSeries& SpecContext::power_sum(int n) {
    while (static_cast<int>(p_.size()) < n) p_.push_back(power_sum_spec(static_cast<int>(p_.size()) + 1, nu_, cap_));
    return p_[static_cast<std::size_t>(n) - 1];
}

const LaurentSeries& SpecContext::complete_h(int k) {
    if (k < 0) return zero_;
    while (static_cast<int>(h_.size()) <= k) {
        const int m = static_cast<int>(h_.size());
        LaurentSeries acc = LaurentSeries::zero(cap_);
        for (int j = 1; j <= m; ++j) acc += power_sum(j) * h_[static_cast<std::size_t>(m - j)];
        h_.push_back(acc.scaled(Rational(1, m)));
    }
    return h_[static_cast<std::size_t>(k)];
}

const LaurentSeries& SpecContext::elementary_e(int k) {
    if (k < 0) return zero_;
    while (static_cast<int>(e_.size()) <= k) {
        const int m = static_cast<int>(e_.size());
        LaurentSeries acc = LaurentSeries::zero(cap_);
        for (int j = 1; j <= m; ++j) {
            auto t = power_sum(j) * e_[static_cast<std::size_t>(m - j)];
            if (j % 2) acc += t;
            else acc -= t;
        }
        e_.push_back(acc.scaled(Rational(1, m)));
    }
    return e_[static_cast<std::size_t>(k)];
}

LaurentSeries complete_h_spec(int k, SpecContext& ctx) { return ctx.complete_h(k); }

namespace {

// det(a(i, j))_{0<=i,j<n} by dynamic programming over the set of used columns.
// Rows are taken in order; choosing column c after the columns in `mask`
// contributes (-1)^{#used columns > c} to the permutation sign.
template <class Entry>
LaurentSeries determinant(int n, int cap, Entry&& a) {
    if (n == 0) return LaurentSeries::one(cap);
    std::unordered_map<unsigned, LaurentSeries> cur{{0u, LaurentSeries::one(cap)}};
    for (int i = 0; i < n; ++i) {
        std::unordered_map<unsigned, LaurentSeries> next;
        for (const auto& [mask, v] : cur) {
            for (int c = 0; c < n; ++c) {
                if (mask & (1u << c)) continue;
                const LaurentSeries& x = a(i, c);
                if (x.is_exact_zero()) continue;
                const int above = __builtin_popcount(mask >> (c + 1));
                LaurentSeries t = v * x;
                auto [it, fresh] = next.try_emplace(mask | (1u << c), LaurentSeries::zero(cap));
                if (above % 2) it->second -= t;
                else it->second += t;
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find((n >= 32) ? ~0u : ((1u << n) - 1));
    return it == cur.end() ? LaurentSeries::zero(cap) : it->second;
}

}  // namespace

LaurentSeries skew_schur_spec(const Partition& lambda, const Partition& mu, SpecContext& ctx, JacobiTrudi form) {
    if (!lambda.contains(mu)) return LaurentSeries::zero(ctx.cap());
    const Partition lt = lambda.conjugate();
    if (form == JacobiTrudi::Auto) form = (lt.length() < lambda.length()) ? JacobiTrudi::E : JacobiTrudi::H;
    if (form == JacobiTrudi::H) {
        const int n = lambda.length();
        if (n > 31) throw std::length_error("Jacobi-Trudi dimension too large");
        return determinant(n, ctx.cap(), [&](int i, int j) -> const LaurentSeries& {
            return ctx.complete_h(lambda[i + 1] - mu[j + 1] - i + j);
        });
    }
    const Partition mt = mu.conjugate();
    const int n = lt.length();
    if (n > 31) throw std::length_error("Jacobi-Trudi dimension too large");
    return determinant(n, ctx.cap(), [&](int i, int j) -> const LaurentSeries& {
        return ctx.elementary_e(lt[i + 1] - mt[j + 1] - i + j);
    });
}

LaurentSeries skew_schur_spec(const Partition& lambda, const Partition& mu, const Partition& nu, int cap) {
    SpecContext ctx(nu, cap);
    return skew_schur_spec(lambda, mu, ctx);
}

LaurentSeries schur_rho_closed(const Partition& lambda, int cap) {
    const auto st = stats(lambda);
    LaurentSeries r = LaurentSeries::monomial(1, 2 * st.n_stat + st.size, cap);
    for (const auto& c : cell_stats(lambda).cells) r *= LaurentSeries::geometric(2 * c.hook, 0, cap);
    return r;
}

SpecContext& SchurEngine::context(const Partition& nu) {
    auto it = contexts_.find(nu);
    if (it == contexts_.end()) it = contexts_.emplace(nu, std::make_unique<SpecContext>(nu, cap_)).first;
    return *it->second;
}

}  // namespace nok
