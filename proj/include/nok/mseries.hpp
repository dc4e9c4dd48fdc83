#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nok/exec.hpp"
#include "nok/laurent.hpp"
#include "nok/tpoly.hpp"

namespace nok {

/// Ordered formal variables plus the total-degree cap D shared by every series
/// built over them.
class VarTable {
public:
    /// Throws std::invalid_argument on duplicate names or negative D.
    VarTable(std::vector<std::string> names, int max_degree);

    [[nodiscard]] int size() const noexcept { return static_cast<int>(names_.size()); }
    [[nodiscard]] int max_degree() const noexcept { return max_degree_; }
    [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
    [[nodiscard]] const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    /// Throws std::out_of_range for an unknown name.
    [[nodiscard]] int index(std::string_view name) const;

    friend bool operator==(const VarTable&, const VarTable&) = default;

private:
    std::vector<std::string> names_;
    int max_degree_ = 0;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

[[nodiscard]] inline VarTablePtr make_vars(std::vector<std::string> names, int max_degree) {
    return std::make_shared<const VarTable>(std::move(names), max_degree);
}

using Exponents = std::vector<int>;

[[nodiscard]] inline int degree(const Exponents& e) noexcept { return std::accumulate(e.begin(), e.end(), 0); }

/// A signed monomial +-x^e. Arguments of every MacMahon/binomial factor are of
/// this form, so signs stay out of the coefficients.
struct Monomial {
    int sign = 1;
    Exponents exps;

    static Monomial unit(int nvars) { return {1, Exponents(static_cast<std::size_t>(nvars), 0)}; }
    /// 0-based variable index.
    static Monomial var(int i, int nvars) {
        Monomial m = unit(nvars);
        m.exps.at(static_cast<std::size_t>(i)) = 1;
        return m;
    }

    [[nodiscard]] int degree() const noexcept { return nok::degree(exps); }
    [[nodiscard]] Monomial negated() const { return {-sign, exps}; }
    [[nodiscard]] Monomial operator*(const Monomial& o) const;
    [[nodiscard]] Monomial pow(int k) const;
    [[nodiscard]] std::string to_string(const VarTable& vars) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Per-coefficient-domain hooks used by MSeries.
template <class C>
struct CoeffOps;

template <>
struct CoeffOps<LaurentSeries> {
    static LaurentSeries zero_like(const LaurentSeries& u) { return LaurentSeries::zero(u.cap()); }
    static LaurentSeries from_rational(const Rational& r, const LaurentSeries& u) {
        return LaurentSeries::monomial(r, 0, u.cap());
    }
    // Inexact zeros (O(tau^p)) are kept: they still carry precision.
    static bool droppable(const LaurentSeries& c) { return c.is_exact_zero(); }
    static LaurentSeries inverse(const LaurentSeries& c) { return c.inverse(); }
    static LaurentSeries scale(const LaurentSeries& c, const Rational& r) { return c.scaled(r); }
    static bool compatible(const LaurentSeries& a, const LaurentSeries& b) { return a.cap() == b.cap(); }
};

template <>
struct CoeffOps<TPoly> {
    static TPoly zero_like(const TPoly& u) { return TPoly(u.nvars()); }
    static TPoly from_rational(const Rational& r, const TPoly& u) { return TPoly::constant(r, u.nvars()); }
    static bool droppable(const TPoly& c) { return c.is_zero(); }
    static TPoly inverse(const TPoly& c) {
        if (c.is_zero() || !c.is_constant()) throw std::domain_error("non-unit constant term");
        return TPoly::constant(1 / c.constant_term(), c.nvars());
    }
    static TPoly scale(const TPoly& c, const Rational& r) { return c.scaled(r); }
    static bool compatible(const TPoly& a, const TPoly& b) { return a.nvars() == b.nvars(); }
};

/// Sparse truncated series in the variables of a VarTable; exponent vectors of
/// total degree > D are discarded by every operation.
template <class C>
class MSeries {
public:
    using Ops = CoeffOps<C>;
    using Map = std::map<Exponents, C>;

    /// The zero series. `unit` is the coefficient 1 of the context (it fixes
    /// the tau cap in q-mode, or the t-variable count in t-mode).
    MSeries(VarTablePtr vars, C unit) : vars_(std::move(vars)), unit_(std::move(unit)) {
        if (!vars_) throw std::invalid_argument("MSeries: null variable table");
    }

    static MSeries one(VarTablePtr vars, C unit) {
        MSeries r(std::move(vars), unit);
        r.add_term(Exponents(static_cast<std::size_t>(r.vars_->size()), 0), r.unit_);
        return r;
    }
    static MSeries constant(VarTablePtr vars, C unit, const C& c) {
        MSeries r(std::move(vars), std::move(unit));
        r.add_term(Exponents(static_cast<std::size_t>(r.vars_->size()), 0), c);
        return r;
    }
    /// c * m, sign of m included.
    static MSeries monomial(VarTablePtr vars, C unit, const Monomial& m, const C& c) {
        MSeries r(std::move(vars), std::move(unit));
        r.add_term(m.exps, m.sign < 0 ? -c : c);
        return r;
    }
    /// sum_k coeffs[k] * m^k for the k allowed by the degree cap.
    static MSeries univariate(VarTablePtr vars, C unit, std::span<const C> coeffs, const Monomial& m) {
        MSeries r(std::move(vars), std::move(unit));
        const int d = m.degree();
        const int D = r.vars_->max_degree();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            const int ki = static_cast<int>(k);
            if (d * ki > D) break;
            if (d == 0 && k > 0) throw std::domain_error("univariate embedding of a degree-0 monomial");
            Monomial p = m.pow(ki);
            r.add_term(p.exps, p.sign < 0 ? -coeffs[k] : coeffs[k]);
        }
        return r;
    }

    [[nodiscard]] const VarTablePtr& vars() const noexcept { return vars_; }
    [[nodiscard]] const C& unit() const noexcept { return unit_; }
    [[nodiscard]] const Map& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    [[nodiscard]] C coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Ops::zero_like(unit_) : it->second;
    }
    [[nodiscard]] C constant_term() const { return coeff(Exponents(static_cast<std::size_t>(vars_->size()), 0)); }

    /// Accumulates c into the coefficient of x^e (ignored beyond the cap).
    void add_term(const Exponents& e, const C& c) {
        if (static_cast<int>(e.size()) != vars_->size()) throw std::invalid_argument("exponent vector arity");
        if (degree(e) > vars_->max_degree()) return;
        if (!Ops::compatible(c, unit_)) throw std::invalid_argument("mismatched truncation orders");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!Ops::droppable(c)) terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (Ops::droppable(it->second)) terms_.erase(it);
    }

    MSeries& operator+=(const MSeries& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MSeries& operator-=(const MSeries& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MSeries& operator*=(const MSeries& o) { return *this = mul(*this, o, Exec::Parallel); }
    friend MSeries operator+(MSeries a, const MSeries& b) { return a += b; }
    friend MSeries operator-(MSeries a, const MSeries& b) { return a -= b; }
    friend MSeries operator*(const MSeries& a, const MSeries& b) { return mul(a, b, Exec::Parallel); }
    [[nodiscard]] MSeries operator-() const {
        MSeries r(vars_, unit_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    [[nodiscard]] MSeries scaled(const C& c) const {
        MSeries r(vars_, unit_);
        for (const auto& [e, x] : terms_) r.add_term(e, x * c);
        return r;
    }
    [[nodiscard]] MSeries scaled(const Rational& q) const {
        MSeries r(vars_, unit_);
        for (const auto& [e, x] : terms_) r.add_term(e, Ops::scale(x, q));
        return r;
    }
    /// Multiply by a signed monomial.
    [[nodiscard]] MSeries times(const Monomial& m) const {
        if (static_cast<int>(m.exps.size()) != vars_->size()) throw std::invalid_argument("monomial arity");
        MSeries r(vars_, unit_);
        Exponents k(m.exps.size());
        for (const auto& [e, x] : terms_) {
            for (std::size_t i = 0; i < k.size(); ++i) k[i] = e[i] + m.exps[i];
            r.add_term(k, m.sign < 0 ? -x : x);
        }
        return r;
    }

    /// Requires an invertible constant term; throws std::domain_error otherwise.
    [[nodiscard]] MSeries inverse(Exec exec = Exec::Parallel) const {
        auto it = terms_.find(Exponents(static_cast<std::size_t>(vars_->size()), 0));
        if (it == terms_.end()) throw std::domain_error("non-unit constant term");
        const C c0inv = Ops::inverse(it->second);
        // a = c0 (1 + x), 1/a = c0^{-1} sum_k (-x)^k; x has no constant term so
        // the sum stops at k = D.
        MSeries x(vars_, unit_);
        for (const auto& [e, c] : terms_)
            if (degree(e) > 0) x.add_term(e, c * c0inv);
        MSeries r = one(vars_, unit_);
        for (int k = 0; k < vars_->max_degree(); ++k) r = one(vars_, unit_) - mul(x, r, exec);
        return r.scaled(c0inv);
    }

    [[nodiscard]] MSeries pow(int k, Exec exec = Exec::Parallel) const {
        if (k < 0) return inverse(exec).pow(-k, exec);
        MSeries r = one(vars_, unit_);
        MSeries b = *this;
        while (k > 0) {
            if (k & 1) r = mul(r, b, exec);
            k >>= 1;
            if (k > 0) b = mul(b, b, exec);
        }
        return r;
    }

    friend bool operator==(const MSeries& a, const MSeries& b) {
        return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
    }

    void check_same(const MSeries& o) const {
        if (vars_ != o.vars_ && !(*vars_ == *o.vars_)) throw std::invalid_argument("series over different variables");
        if (!Ops::compatible(unit_, o.unit_)) throw std::invalid_argument("mismatched truncation orders");
    }

private:
    VarTablePtr vars_;
    C unit_;
    Map terms_;
};

/// Truncated product. Serial is the reference path; Parallel distributes the
/// output monomials over OpenMP threads. Both give identical results.
template <class C>
MSeries<C> mul(const MSeries<C>& a, const MSeries<C>& b, Exec exec) {
    a.check_same(b);
    MSeries<C> r(a.vars(), a.unit());
    const int D = a.vars()->max_degree();
    const std::size_t nv = static_cast<std::size_t>(a.vars()->size());

    if (exec == Exec::Serial) {
        Exponents k(nv);
        for (const auto& [ea, ca] : a.terms()) {
            const int da = degree(ea);
            for (const auto& [eb, cb] : b.terms()) {
                if (da + degree(eb) > D) continue;
                for (std::size_t i = 0; i < nv; ++i) k[i] = ea[i] + eb[i];
                r.add_term(k, ca * cb);
            }
        }
        return r;
    }

    using Term = const std::pair<const Exponents, C>*;
    std::vector<Term> ta, tb;
    std::vector<int> da, db;
    for (const auto& t : a.terms()) {
        ta.push_back(&t);
        da.push_back(degree(t.first));
    }
    for (const auto& t : b.terms()) {
        tb.push_back(&t);
        db.push_back(degree(t.first));
    }
    std::map<Exponents, std::vector<std::pair<std::size_t, std::size_t>>> groups;
    Exponents k(nv);
    for (std::size_t i = 0; i < ta.size(); ++i) {
        for (std::size_t j = 0; j < tb.size(); ++j) {
            if (da[i] + db[j] > D) continue;
            for (std::size_t v = 0; v < nv; ++v) k[v] = ta[i]->first[v] + tb[j]->first[v];
            groups[k].emplace_back(i, j);
        }
    }
    std::vector<const std::pair<const Exponents, std::vector<std::pair<std::size_t, std::size_t>>>*> work;
    work.reserve(groups.size());
    for (const auto& g : groups) work.push_back(&g);
    std::vector<C> out(work.size(), CoeffOps<C>::zero_like(a.unit()));
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(work.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t g = 0; g < n; ++g) {
        C acc = CoeffOps<C>::zero_like(a.unit());
        for (const auto& [i, j] : work[static_cast<std::size_t>(g)]->second) acc += ta[i]->second * tb[j]->second;
        out[static_cast<std::size_t>(g)] = std::move(acc);
    }
    for (std::size_t g = 0; g < work.size(); ++g) r.add_term(work[g]->first, out[g]);
    return r;
}

using QSeries = MSeries<LaurentSeries>;
using TSeries = MSeries<TPoly>;

/// Smallest prec() over all stored coefficients (LaurentSeries::kExact if all
/// are exact): every coefficient is certified through this tau exponent.
[[nodiscard]] int certified_window(const QSeries& s);

}  // namespace nok
