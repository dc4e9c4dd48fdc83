#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nok/rational.hpp"

namespace nok {

/// Truncated Laurent series in tau = q^{-1/2} with exact rational coefficients.
///
/// Every value carries two bounds:
///  - cap(): the truncation order M of its computation context. Exponents above
///    M are never stored.
///  - prec(): the largest exponent whose coefficient is known exactly. It is
///    at most cap(), or kExact when the stored terms are the whole value (a
///    Laurent polynomial). Products and inverses of series with negative lowest
///    exponent lose precision; prec() records exactly how much.
///
/// Coefficients are stored as integer numerators over one shared denominator.
class LaurentSeries {
public:
    static constexpr int kExact = std::numeric_limits<int>::max() / 4;

    /// Exact zero with cap 0. Mostly useful as a placeholder.
    LaurentSeries() = default;

    static LaurentSeries zero(int cap);
    static LaurentSeries one(int cap) { return monomial(Rational(1), 0, cap); }
    static LaurentSeries monomial(const Rational& c, int exponent, int cap);
    /// Coefficients of tau^lo, tau^{lo+1}, ...; `prec` may be kExact.
    static LaurentSeries from_coeffs(int lo, std::span<const Rational> coeffs, int prec, int cap);
    /// tau^shift / (1 - tau^step), step >= 1, known through cap.
    static LaurentSeries geometric(int step, int shift, int cap);

    [[nodiscard]] int cap() const noexcept { return cap_; }
    [[nodiscard]] int prec() const noexcept { return prec_; }
    [[nodiscard]] bool exact() const noexcept { return prec_ == kExact; }
    /// No nonzero coefficient is known. The value may still be O(tau^{prec+1}).
    [[nodiscard]] bool is_zero() const noexcept { return num_.empty(); }
    /// Zero through the whole cap.
    [[nodiscard]] bool is_exact_zero() const noexcept { return num_.empty() && prec_ >= cap_; }
    /// Lowest exponent with a nonzero coefficient. Requires !is_zero().
    [[nodiscard]] int lo() const;
    /// Highest stored exponent. Requires !is_zero().
    [[nodiscard]] int hi() const;
    /// Lower bound on the exponent of the true value: lo(), or prec()+1 for zero.
    [[nodiscard]] std::int64_t valuation_bound() const noexcept;
    /// Throws std::out_of_range when exponent > prec().
    [[nodiscard]] Rational coeff(int exponent) const;
    /// Known nonzero terms in increasing exponent order.
    [[nodiscard]] std::vector<std::pair<int, Rational>> terms() const;

    LaurentSeries& operator+=(const LaurentSeries& o);
    LaurentSeries& operator-=(const LaurentSeries& o);
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }
    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    [[nodiscard]] LaurentSeries operator-() const;

    [[nodiscard]] LaurentSeries scaled(const Rational& c) const;
    /// Multiply by tau^k (exact).
    [[nodiscard]] LaurentSeries shifted(int k) const;
    /// Throws std::domain_error("non-invertible") on a zero series.
    [[nodiscard]] LaurentSeries inverse() const;
    /// Same value with a lower cap; used to hand values to a smaller context.
    [[nodiscard]] LaurentSeries recapped(int cap) const;

    /// Structural equality: same known coefficients and precision.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

    [[nodiscard]] std::string to_string() const;

private:
    int cap_ = 0;
    int prec_ = kExact;
    int lo_ = 0;
    std::vector<Integer> num_;
    Integer den_ = 1;

    void normalize();
    void add_impl(const LaurentSeries& o, bool subtract);
};

struct SeriesComparison {
    bool equal = true;
    /// Exponents <= window were compared.
    int window = 0;
    std::optional<int> first_divergent;
};

/// Compares coefficients for exponents <= min(upto, a.prec(), b.prec()).
[[nodiscard]] SeriesComparison eq_to_order(const LaurentSeries& a, const LaurentSeries& b, int upto);

}  // namespace nok
