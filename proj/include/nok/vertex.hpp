#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nok/laurent.hpp"
#include "nok/partition.hpp"
#include "nok/schur.hpp"

namespace nok {

struct VertexValue {
    LaurentSeries value;
    std::array<Partition, 3> labels;
    /// Coefficients are exact through this tau exponent.
    [[nodiscard]] int window() const noexcept { return value.prec(); }
};

/// C_{lambda,mu,nu} = tau^{-kappa(lambda)-kappa(nu)} s_{nu^t}(q^rho)
///                    * sum_eta s_{lambda^t/eta}(q^{nu+rho}) s_{mu/eta}(q^{nu^t+rho}).
/// Computed at working cap `cap`; see VertexValue::window for what is exact.
[[nodiscard]] VertexValue topological_vertex(const Partition& lambda, const Partition& mu, const Partition& nu,
                                             SchurEngine& engine);
[[nodiscard]] VertexValue topological_vertex(const Partition& lambda, const Partition& mu, const Partition& nu,
                                             int cap);

struct SymmetryCheck {
    bool equal = true;
    /// Compared exponents <= window; at least the requested M on success.
    int window = 0;
    int working_cap = 0;
    std::optional<int> first_divergent;
};

/// C_{lambda,mu,nu} = C_{mu,nu,lambda} = C_{nu,lambda,mu} through tau^M.
[[nodiscard]] SymmetryCheck check_rotation(const Partition& lambda, const Partition& mu, const Partition& nu, int M);
/// C_{lambda,mu,nu} = tau^{-kappa(lambda)-kappa(mu)-kappa(nu)} C_{mu^t,lambda^t,nu^t} through tau^M.
[[nodiscard]] SymmetryCheck check_mirror(const Partition& lambda, const Partition& mu, const Partition& nu, int M);

}  // namespace nok
