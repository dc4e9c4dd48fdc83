#pragma once

#include <map>
#include <memory>
#include <vector>

#include "nok/laurent.hpp"
#include "nok/partition.hpp"

namespace nok {

/// p_n(q^{nu+rho}) = sum_{i<=l(nu)} (tau^{n(2i-2nu_i-1)} - tau^{n(2i-1)}) + tau^n/(1-tau^{2n}).
[[nodiscard]] LaurentSeries power_sum_spec(int n, const Partition& nu, int cap);

/// Memoized p_n, h_k and e_k at q^{nu+rho}. Single writer: give each thread
/// its own context (or its own SchurEngine).
class SpecContext {
public:
    SpecContext(Partition nu, int cap);

    [[nodiscard]] const Partition& shift() const noexcept { return nu_; }
    [[nodiscard]] int cap() const noexcept { return cap_; }

    const LaurentSeries& power_sum(int n);
    /// h_k via Newton: k h_k = sum_{j=1}^k p_j h_{k-j}. Zero for k < 0.
    const LaurentSeries& complete_h(int k);
    /// e_k via Newton: k e_k = sum_{j=1}^k (-1)^{j-1} p_j e_{k-j}. Zero for k < 0.
    const LaurentSeries& elementary_e(int k);

private:
    Partition nu_;
    int cap_;
    LaurentSeries zero_;
    std::vector<LaurentSeries> p_;  // p_[n-1]
    std::vector<LaurentSeries> h_;
    std::vector<LaurentSeries> e_;
};

[[nodiscard]] LaurentSeries complete_h_spec(int k, SpecContext& ctx);

enum class JacobiTrudi { Auto, H, E };

/// s_{lambda/mu}(q^{nu+rho}) by a Jacobi-Trudi determinant; zero unless mu is
/// contained in lambda. Auto picks the h- or e-form of smaller dimension.
[[nodiscard]] LaurentSeries skew_schur_spec(const Partition& lambda, const Partition& mu, SpecContext& ctx,
                                            JacobiTrudi form = JacobiTrudi::Auto);
[[nodiscard]] LaurentSeries skew_schur_spec(const Partition& lambda, const Partition& mu, const Partition& nu,
                                            int cap);

/// tau^{2n(lambda)+|lambda|} prod_{cells} 1/(1 - tau^{2h}).
[[nodiscard]] LaurentSeries schur_rho_closed(const Partition& lambda, int cap);

/// Owns one SpecContext per shift nu at a fixed cap. Not thread-safe.
class SchurEngine {
public:
    explicit SchurEngine(int cap) : cap_(cap) {}
    [[nodiscard]] int cap() const noexcept { return cap_; }
    SpecContext& context(const Partition& nu);
    LaurentSeries skew(const Partition& lambda, const Partition& mu, const Partition& nu) {
        return skew_schur_spec(lambda, mu, context(nu));
    }

private:
    int cap_;
    std::map<Partition, std::unique_ptr<SpecContext>> contexts_;
};

}  // namespace nok
