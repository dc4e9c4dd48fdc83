#include "nok/vertex.hpp"

#include <algorithm>

#include "nok/adaptive.hpp"

namespace nok {

VertexValue topological_vertex(const Partition& lambda, const Partition& mu, const Partition& nu,
                               SchurEngine& engine) {
    const int cap = engine.cap();
    const Partition lt = lambda.conjugate();
    const Partition nt = nu.conjugate();
    LaurentSeries sum = LaurentSeries::zero(cap);
    // eta must fit in both lambda^t and mu; iterate the smaller one
    const bool small_lt = lt.size() <= mu.size();
    for (const auto& eta : subpartitions(small_lt ? lt : mu)) {
        if (!(small_lt ? mu : lt).contains(eta)) continue;
        sum += engine.skew(lt, eta, nu) * engine.skew(mu, eta, nt);
    }
    const int shift = -stats(lambda).kappa - stats(nu).kappa;
    return {(schur_rho_closed(nt, cap) * sum).shifted(shift), {lambda, mu, nu}};
}

VertexValue topological_vertex(const Partition& lambda, const Partition& mu, const Partition& nu, int cap) {
    SchurEngine engine(cap);
    return topological_vertex(lambda, mu, nu, engine);
}

namespace {

template <class Build>
SymmetryCheck compare_all(int M, Build&& build) {
    SymmetryCheck out;
    with_certified_window(M, [&](int W) {
        SchurEngine engine(W);
        const std::vector<LaurentSeries> vals = build(engine);
        out = SymmetryCheck{};
        out.working_cap = W;
        out.window = LaurentSeries::kExact;
        for (const auto& v : vals) out.window = std::min(out.window, v.prec());
        out.window = std::min(out.window, W);
        for (std::size_t i = 1; i < vals.size() && out.equal; ++i) {
            auto c = eq_to_order(vals[0], vals[i], out.window);
            out.equal = c.equal;
            out.first_divergent = c.first_divergent;
        }
        return out.window;
    });
    return out;
}

}  // namespace

SymmetryCheck check_rotation(const Partition& lambda, const Partition& mu, const Partition& nu, int M) {
    return compare_all(M, [&](SchurEngine& e) {
        return std::vector<LaurentSeries>{topological_vertex(lambda, mu, nu, e).value,
                                          topological_vertex(mu, nu, lambda, e).value,
                                          topological_vertex(nu, lambda, mu, e).value};
    });
}

SymmetryCheck check_mirror(const Partition& lambda, const Partition& mu, const Partition& nu, int M) {
    return compare_all(M, [&](SchurEngine& e) {
        const int k = stats(lambda).kappa + stats(mu).kappa + stats(nu).kappa;
        return std::vector<LaurentSeries>{
            topological_vertex(lambda, mu, nu, e).value,
            topological_vertex(mu.conjugate(), lambda.conjugate(), nu.conjugate(), e).value.shifted(-k)};
    });
}

}  // namespace nok
