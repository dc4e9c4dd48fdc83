#pragma once

#include <cstdint>
#include <optional>

#include "nok/exec.hpp"
#include "nok/fock.hpp"
#include "nok/identities.hpp"

namespace nok {

/// Check `count` cases drawn uniformly (with replacement) from the full sweep,
/// using std::mt19937_64 seeded with `seed`; same seed, same cases.
struct Sample {
    int count = 0;
    std::uint64_t seed = 0;
};

/// Trace identity for every sign pattern eps1, eps2 in {+1,-1}^L.
[[nodiscard]] Report fock_lemma_sweep(int L, Pairing pairing, int D, int M, Exec exec = Exec::Parallel);

/// Commutation relations over z, w on every ket |lambda| <= ket_size, certified through tau^M.
[[nodiscard]] Report commutation_sweep(int ket_size, int M);

/// Rotation (or mirror) relation for every triple of total size <= max_size.
[[nodiscard]] Report vertex_symmetry_sweep(bool mirror, int max_size, int M, Exec exec = Exec::Parallel,
                                           std::optional<Sample> sample = std::nullopt);

/// lemma_inf_finite_check for every (mu, nu) with |mu|, |nu| <= max_size.
[[nodiscard]] Report lemma_inf_finite_sweep(int max_size, int z_deg, int M, Exec exec = Exec::Parallel,
                                            std::optional<Sample> sample = std::nullopt);

}  // namespace nok
