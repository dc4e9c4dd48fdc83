#include "nok/compare.hpp"

#include <algorithm>
#include <set>

#include "nok/rational.hpp"

namespace nok {

Comparison compare(const QSeries& a, const QSeries& b, int upto) {
    a.check_same(b);
    Comparison out;
    out.window = std::min({upto, certified_window(a), certified_window(b)});
    std::set<Exponents> keys;
    for (const auto& [e, c] : a.terms()) keys.insert(e);
    for (const auto& [e, c] : b.terms()) keys.insert(e);
    for (const auto& e : keys) {
        const LaurentSeries ca = a.coeff(e), cb = b.coeff(e);
        auto r = eq_to_order(ca, cb, out.window);
        if (r.equal) continue;
        out.equal = false;
        const int x = *r.first_divergent;
        out.witness = Witness{e, x, to_fraction_string(ca.coeff(x)), to_fraction_string(cb.coeff(x))};
        break;
    }
    return out;
}

Comparison compare(const TSeries& a, const TSeries& b) {
    a.check_same(b);
    Comparison out;
    std::set<Exponents> keys;
    for (const auto& [e, c] : a.terms()) keys.insert(e);
    for (const auto& [e, c] : b.terms()) keys.insert(e);
    for (const auto& e : keys) {
        const TPoly ca = a.coeff(e), cb = b.coeff(e);
        if (ca == cb) continue;
        out.equal = false;
        out.witness = Witness{e, std::nullopt, ca.to_string(), cb.to_string()};
        break;
    }
    return out;
}

}  // namespace nok
