#include "nok/tpoly.hpp"

#include <stdexcept>

namespace nok {

TPoly TPoly::constant(const Rational& c, int nvars) {
    TPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

TPoly TPoly::var(int i, int nvars) {
    if (i < 1 || i > nvars) throw std::out_of_range("TPoly::var index");
    TPoly p(nvars);
    Exponents e(nvars, 0);
    e[i - 1] = 1;
    p.add_term(e, Rational(1));
    return p;
}

void TPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational TPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool TPoly::is_constant() const noexcept {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (int x : terms_.begin()->first)
        if (x != 0) return false;
    return true;
}

Rational TPoly::constant_term() const { return coeff(Exponents(nvars_, 0)); }

int TPoly::total_degree() const noexcept {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("TPoly variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("TPoly variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("TPoly variable count mismatch");
    TPoly r(a.nvars_);
    TPoly::Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

TPoly TPoly::operator-() const { return scaled(Rational(-1)); }

TPoly TPoly::scaled(const Rational& c) const {
    TPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
}

Rational TPoly::evaluate(std::span<const Rational> t) const {
    if (static_cast<int>(t.size()) != nvars_) throw std::invalid_argument("TPoly::evaluate arity");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational m = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) m *= t[i];
        acc += m;
    }
    return acc;
}

std::string TPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    // Highest total degree first reads better; map order is lexicographic.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (s.empty())
            s += (c < 0) ? "-" : "";
        else
            s += (c < 0) ? " - " : " + ";
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "t" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            s += mag.get_str();
        else if (mag == 1)
            s += mono;
        else
            s += mag.get_str() + "*" + mono;
    }
    return s;
}

TPoly binomial(const TPoly& T, int k) {
    if (k < 0) throw std::invalid_argument("binomial: negative k");
    TPoly r = TPoly::constant(Rational(1), T.nvars());
    Rational fact = 1;
    for (int i = 0; i < k; ++i) {
        r *= T - TPoly::constant(Rational(i), T.nvars());
        fact *= i + 1;
    }
    return r.scaled(1 / fact);
}

}  // namespace nok
