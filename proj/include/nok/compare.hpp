#pragma once

#include <optional>
#include <string>

#include "nok/mseries.hpp"

namespace nok {

/// First point where two series differ.
struct Witness {
    Exponents monomial;
    std::optional<int> tau_exponent;  // q-mode only
    std::string lhs;                  // coefficient values as "p/q" (q-mode) or TPoly text (t-mode)
    std::string rhs;
};

struct Comparison {
    bool equal = true;
    /// q-mode: every coefficient was compared through tau^window.
    int window = LaurentSeries::kExact;
    std::optional<Witness> witness;
};

/// Compares all coefficients through min(upto, certified windows of a and b).
[[nodiscard]] Comparison compare(const QSeries& a, const QSeries& b, int upto = LaurentSeries::kExact);
/// Exact coefficient-wise equality.
[[nodiscard]] Comparison compare(const TSeries& a, const TSeries& b);

}  // namespace nok
