#include "nok/mseries.hpp"

#include <algorithm>
#include <set>

namespace nok {

VarTable::VarTable(std::vector<std::string> names, int max_degree)
    : names_(std::move(names)), max_degree_(max_degree) {
    if (max_degree_ < 0) throw std::invalid_argument("degree cap must be non-negative");
    std::set<std::string> seen;
    for (const auto& n : names_)
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
}

int VarTable::index(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw std::out_of_range("unknown variable: " + std::string(name));
    return static_cast<int>(it - names_.begin());
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (exps.size() != o.exps.size()) throw std::invalid_argument("monomial arity");
    Monomial r{sign * o.sign, exps};
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
    return r;
}

Monomial Monomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative monomial power");
    Monomial r{(sign < 0 && (k & 1)) ? -1 : 1, exps};
    for (auto& e : r.exps) e *= k;
    return r;
}

std::string Monomial::to_string(const VarTable& vars) const {
    std::string s;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars.name(static_cast<int>(i));
        if (exps[i] != 1) s += "^" + std::to_string(exps[i]);
    }
    if (s.empty()) s = "1";
    return sign < 0 ? "-" + s : s;
}

int certified_window(const QSeries& s) {
    int w = LaurentSeries::kExact;
    for (const auto& [e, c] : s.terms()) w = std::min(w, c.prec());
    return w;
}

}  // namespace nok
