#include "nok/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace nok {

namespace {

constexpr std::int64_t kInf = LaurentSeries::kExact;

std::int64_t sat_add(std::int64_t a, std::int64_t b) noexcept {
    if (a >= kInf || b >= kInf) return kInf;
    return a + b;
}

int clamp_prec(std::int64_t p) noexcept {
    if (p >= kInf) return LaurentSeries::kExact;
    return static_cast<int>(std::max<std::int64_t>(p, -kInf));
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

}  // namespace

LaurentSeries LaurentSeries::zero(int cap) {
    LaurentSeries s;
    s.cap_ = cap;
    s.prec_ = kExact;
    return s;
}

LaurentSeries LaurentSeries::monomial(const Rational& c, int exponent, int cap) {
    LaurentSeries s = zero(cap);
    if (c == 0) return s;
    s.lo_ = exponent;
    s.num_.push_back(c.get_num());
    s.den_ = c.get_den();
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::from_coeffs(int lo, std::span<const Rational> coeffs, int prec, int cap) {
    LaurentSeries s = zero(cap);
    s.prec_ = prec;
    s.lo_ = lo;
    Integer den = 1;
    for (const auto& c : coeffs) den = lcm(den, c.get_den());
    s.den_ = den;
    s.num_.reserve(coeffs.size());
    for (const auto& c : coeffs) s.num_.push_back(c.get_num() * (den / c.get_den()));
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::geometric(int step, int shift, int cap) {
    if (step < 1) throw std::invalid_argument("geometric: step must be positive");
    LaurentSeries s = zero(cap);
    s.prec_ = cap;
    if (shift > cap) return s;
    s.lo_ = shift;
    s.num_.assign(static_cast<std::size_t>(cap - shift) + 1, Integer(0));
    for (int e = shift; e <= cap; e += step) s.num_[e - shift] = 1;
    s.normalize();
    return s;
}

int LaurentSeries::lo() const {
    if (num_.empty()) throw std::logic_error("lo() of a zero series");
    return lo_;
}

int LaurentSeries::hi() const {
    if (num_.empty()) throw std::logic_error("hi() of a zero series");
    return lo_ + static_cast<int>(num_.size()) - 1;
}

std::int64_t LaurentSeries::valuation_bound() const noexcept {
    if (!num_.empty()) return lo_;
    return prec_ == kExact ? kInf : static_cast<std::int64_t>(prec_) + 1;
}

Rational LaurentSeries::coeff(int exponent) const {
    if (prec_ != kExact && exponent > prec_)
        throw std::out_of_range("coefficient beyond known precision");
    if (num_.empty() || exponent < lo_ || exponent > hi()) return Rational(0);
    Rational r(num_[exponent - lo_], den_);
    r.canonicalize();
    return r;
}

std::vector<std::pair<int, Rational>> LaurentSeries::terms() const {
    std::vector<std::pair<int, Rational>> out;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        Rational r(num_[i], den_);
        r.canonicalize();
        out.emplace_back(lo_ + static_cast<int>(i), std::move(r));
    }
    return out;
}

void LaurentSeries::normalize() {
    if (prec_ != kExact && prec_ > cap_) prec_ = cap_;
    if (!num_.empty()) {
        const int limit = (prec_ == kExact) ? cap_ : prec_;
        if (hi() > limit) {
            if (prec_ == kExact) prec_ = cap_;
            const std::int64_t keep = static_cast<std::int64_t>(limit) - lo_ + 1;
            num_.resize(keep > 0 ? static_cast<std::size_t>(keep) : 0);
        }
    }
    while (!num_.empty() && num_.back() == 0) num_.pop_back();
    std::size_t lead = 0;
    while (lead < num_.size() && num_[lead] == 0) ++lead;
    if (lead == num_.size()) {
        num_.clear();
        lo_ = 0;
        den_ = 1;
        return;
    }
    if (lead > 0) {
        num_.erase(num_.begin(), num_.begin() + static_cast<std::ptrdiff_t>(lead));
        lo_ += static_cast<int>(lead);
    }
    if (den_ < 0) {
        den_ = -den_;
        for (auto& n : num_) n = -n;
    }
    if (den_ != 1) {
        Integer g = den_;
        for (const auto& n : num_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
            if (g == 1) break;
        }
        if (g != 1) {
            den_ /= g;
            for (auto& n : num_) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
        }
    }
}

void LaurentSeries::add_impl(const LaurentSeries& o, bool subtract) {
    if (cap_ != o.cap_) throw std::invalid_argument("mismatched truncation orders");
    const int prec = std::min(prec_, o.prec_);
    if (o.num_.empty()) {
        prec_ = prec;
        normalize();
        return;
    }
    if (num_.empty()) {
        num_ = o.num_;
        den_ = o.den_;
        lo_ = o.lo_;
        if (subtract)
            for (auto& n : num_) n = -n;
        prec_ = prec;
        normalize();
        return;
    }
    const int lo = std::min(lo_, o.lo_);
    const int hi = std::max(this->hi(), o.hi());
    const Integer den = lcm(den_, o.den_);
    const Integer fa = den / den_;
    const Integer fb = den / o.den_;
    std::vector<Integer> out(static_cast<std::size_t>(hi - lo) + 1, Integer(0));
    for (std::size_t i = 0; i < num_.size(); ++i) out[lo_ - lo + i] = num_[i] * fa;
    for (std::size_t i = 0; i < o.num_.size(); ++i) {
        auto& slot = out[o.lo_ - lo + i];
        if (subtract)
            mpz_submul(slot.get_mpz_t(), o.num_[i].get_mpz_t(), fb.get_mpz_t());
        else
            mpz_addmul(slot.get_mpz_t(), o.num_[i].get_mpz_t(), fb.get_mpz_t());
    }
    num_ = std::move(out);
    den_ = den;
    lo_ = lo;
    prec_ = prec;
    normalize();
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
    add_impl(o, false);
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) {
    add_impl(o, true);
    return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.cap_ != b.cap_) throw std::invalid_argument("mismatched truncation orders");
    const std::int64_t p = std::min(sat_add(a.prec_, b.valuation_bound()), sat_add(b.prec_, a.valuation_bound()));
    LaurentSeries r = LaurentSeries::zero(a.cap_);
    r.prec_ = clamp_prec(p);
    if (a.num_.empty() || b.num_.empty()) {
        r.normalize();
        return r;
    }
    const std::int64_t lo = static_cast<std::int64_t>(a.lo_) + b.lo_;
    std::int64_t hi = static_cast<std::int64_t>(a.hi()) + b.hi();
    const std::int64_t limit = (r.prec_ == LaurentSeries::kExact) ? a.cap_ : std::min(r.prec_, a.cap_);
    if (hi > limit) {
        if (r.prec_ == LaurentSeries::kExact) r.prec_ = a.cap_;
        hi = limit;
    }
    if (hi < lo) {
        r.normalize();
        return r;
    }
    r.lo_ = static_cast<int>(lo);
    r.den_ = a.den_ * b.den_;
    r.num_.assign(static_cast<std::size_t>(hi - lo) + 1, Integer(0));
    const std::size_t na = a.num_.size();
    const std::size_t nb = b.num_.size();
    const std::size_t nr = r.num_.size();
    for (std::size_t i = 0; i < na && i < nr; ++i) {
        if (a.num_[i] == 0) continue;
        const std::size_t jmax = std::min(nb, nr - i);
        for (std::size_t j = 0; j < jmax; ++j)
            mpz_addmul(r.num_[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& n : r.num_) n = -n;
    return r;
}

LaurentSeries LaurentSeries::scaled(const Rational& c) const {
    LaurentSeries r = *this;
    if (c == 0) {
        r.num_.clear();
        r.normalize();
        return r;
    }
    for (auto& n : r.num_) n *= c.get_num();
    r.den_ *= c.get_den();
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::shifted(int k) const {
    LaurentSeries r = *this;
    if (r.prec_ != kExact) r.prec_ = clamp_prec(static_cast<std::int64_t>(r.prec_) + k);
    if (!r.num_.empty()) r.lo_ += k;
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::inverse() const {
    if (num_.empty()) throw std::domain_error("non-invertible");
    const int L = lo_;
    if (num_.size() == 1 && prec_ == kExact) {
        Rational c(num_[0], den_);
        c.canonicalize();
        return monomial(1 / c, -L, cap_);
    }
    std::int64_t p = (prec_ == kExact) ? cap_ : std::min<std::int64_t>(cap_, static_cast<std::int64_t>(prec_) - 2LL * L);
    LaurentSeries r = zero(cap_);
    r.prec_ = clamp_prec(p);
    const std::int64_t count = p + L + 1;  // relative orders 0..p+L
    if (count <= 0) {
        r.normalize();
        return r;
    }
    // 1/a = tau^{-L} * den / n(tau), n(tau) = sum num_k tau^k.
    std::vector<Rational> c(static_cast<std::size_t>(count));
    const Rational inv0 = Rational(1) / Rational(num_[0]);
    c[0] = inv0;
    for (std::int64_t n = 1; n < count; ++n) {
        Rational acc = 0;
        const std::int64_t kmax = std::min<std::int64_t>(n, static_cast<std::int64_t>(num_.size()) - 1);
        for (std::int64_t k = 1; k <= kmax; ++k) {
            if (num_[k] == 0) continue;
            acc += Rational(num_[k]) * c[n - k];
        }
        c[n] = -acc * inv0;
    }
    for (auto& x : c) x *= den_;
    return from_coeffs(-L, c, r.prec_, cap_);
}

LaurentSeries LaurentSeries::recapped(int cap) const {
    LaurentSeries r = *this;
    r.cap_ = cap;
    r.normalize();
    return r;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.cap_ == b.cap_ && a.prec_ == b.prec_ && a.num_ == b.num_ && a.den_ == b.den_ &&
           (a.num_.empty() || a.lo_ == b.lo_);
}

std::string LaurentSeries::to_string() const {
    std::string s;
    for (const auto& [e, c] : terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + c.get_str() + ")*tau^" + std::to_string(e);
    }
    if (s.empty()) s = "0";
    if (prec_ != kExact) s += " + O(tau^" + std::to_string(prec_ + 1) + ")";
    return s;
}

SeriesComparison eq_to_order(const LaurentSeries& a, const LaurentSeries& b, int upto) {
    SeriesComparison out;
    out.window = std::min({upto, a.prec(), b.prec()});
    const std::int64_t start = std::min(a.valuation_bound(), b.valuation_bound());
    // past the highest stored term both sides are zero
    std::int64_t stop = out.window;
    if (a.is_zero() && b.is_zero()) stop = start - 1;
    else stop = std::min<std::int64_t>(stop, std::max(a.is_zero() ? INT32_MIN : a.hi(), b.is_zero() ? INT32_MIN : b.hi()));
    for (std::int64_t e = start; e <= stop; ++e) {
        if (a.coeff(static_cast<int>(e)) != b.coeff(static_cast<int>(e))) {
            out.equal = false;
            out.first_divergent = static_cast<int>(e);
            break;
        }
    }
    return out;
}

}  // namespace nok
