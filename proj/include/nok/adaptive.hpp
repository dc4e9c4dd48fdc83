#pragma once

#include <algorithm>
#include <stdexcept>

namespace nok {

/// Runs `attempt(W)` at working caps W = M, M + g, ... until the certified
/// window it returns reaches M. Precision loss from negative tau exponents is
/// additive in W, so one retry with the observed shortfall usually suffices.
/// Returns the working cap that succeeded.
template <class Attempt>
int with_certified_window(int M, Attempt&& attempt, int max_rounds = 6) {
    int W = M;
    for (int round = 0; round < max_rounds; ++round) {
        const int window = attempt(W);
        if (window >= M) return W;
        W += std::max(M - window, 2);
    }
    throw std::runtime_error("could not certify the requested tau window");
}

}  // namespace nok
